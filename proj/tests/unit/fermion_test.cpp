// Copyright 2026 The fermiqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fermiqc/errors.hpp"
#include "fermiqc/fermion.hpp"
#include "test_util.hpp"

namespace fermiqc {
namespace {

using testing::C;
using testing::Mat;

IntegralSet load(const std::string &name) {
  std::ifstream f(testing::data_path(name));
  return parse_fcidump(f);
}

// Dense a+_i / a_i straight from the occupation-number definition.
Mat ladder_dense(std::size_t n, std::size_t i, bool dagger) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Mat m = Mat::Zero(dim, dim);
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
    const bool occ = (s >> i) & 1U;
    if (occ == dagger) continue;
    const int below = std::popcount(s & ((std::uint64_t{1} << i) - 1));
    m(static_cast<Eigen::Index>(s ^ (std::uint64_t{1} << i)),
      static_cast<Eigen::Index>(s)) = (below & 1) ? -1.0 : 1.0;
  }
  return m;
}

Mat fock_oracle(const FermionOperator &op) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << op.n_modes);
  Mat total = Mat::Zero(dim, dim);
  for (const auto &t : op.terms) {
    Mat m = Mat::Identity(dim, dim);
    for (const auto &f : t.factors) m = m * ladder_dense(op.n_modes, f.mode, f.dagger);
    total += t.coefficient * m;
  }
  return total;
}

TEST(Fcidump, ParsesH2Fixture) {
  const auto ints = load("h2_sto3g.fcidump");
  EXPECT_EQ(ints.n_spatial(), 2u);
  EXPECT_EQ(ints.n_electrons(), 2u);
  EXPECT_EQ(ints.ms2(), 0);
  EXPECT_DOUBLE_EQ(ints.core_energy(), 7.1375399368761816e-01);
  EXPECT_FALSE(ints.core_energy_missing());
  EXPECT_DOUBLE_EQ(ints.one_body(0, 0), -1.2524635735648981);
  // (21|21) is stored once and completed to all eight permutations.
  EXPECT_DOUBLE_EQ(ints.two_body(0, 1, 0, 1), 1.8128880821149584e-01);
  EXPECT_DOUBLE_EQ(ints.two_body(1, 0, 1, 0), 1.8128880821149584e-01);
  EXPECT_DOUBLE_EQ(ints.two_body(0, 1, 1, 0), 1.8128880821149584e-01);
  EXPECT_DOUBLE_EQ(ints.two_body(1, 1, 0, 0), ints.two_body(0, 0, 1, 1));
  EXPECT_EQ(ints.symmetry_defect(), 0.0);
}

TEST(Fcidump, LiHFixtureShape) {
  const auto ints = load("lih_sto3g.fcidump");
  EXPECT_EQ(ints.n_spatial(), 6u);
  EXPECT_EQ(ints.n_spin_orbitals(), 12u);
  EXPECT_EQ(ints.n_electrons(), 4u);
}

TEST(Fcidump, WriteParseRoundTrip) {
  for (const char *name : {"h2_sto3g.fcidump", "h2_631g.fcidump", "lih_sto3g.fcidump"}) {
    const auto ints = load(name);
    std::stringstream ss;
    write_fcidump(ss, ints);
    EXPECT_EQ(parse_fcidump(ss), ints) << name;
  }
  const auto syn = synthetic_integrals(4, 9, 0.5);
  std::stringstream ss;
  write_fcidump(ss, syn);
  EXPECT_EQ(parse_fcidump(ss), syn);
}

TEST(Fcidump, AcceptsFortranExponentsAndSlashTerminator) {
  std::istringstream in(
      "&FCI NORB=1,NELEC=1,MS2=1\n/\n0.5D+00 1 1 0 0\n1.25d0 0 0 0 0\n");
  const auto ints = parse_fcidump(in);
  EXPECT_DOUBLE_EQ(ints.one_body(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(ints.core_energy(), 1.25);
  EXPECT_EQ(ints.ms2(), 1);
}

TEST(Fcidump, MissingCoreEnergyIsFlagged) {
  std::istringstream in("&FCI NORB=1,NELEC=2 &END\n0.5 1 1 0 0\n");
  const auto ints = parse_fcidump(in);
  EXPECT_TRUE(ints.core_energy_missing());
  EXPECT_EQ(ints.core_energy(), 0.0);
}

TEST(Fcidump, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string &text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_fcidump(in);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("&FCI NORB=2,NELEC=2 &END\n0.1 1 1 0 0\n0.2 3 1 0 0\n"), 3u);
  EXPECT_EQ(line_of("&FCI NORB=2,NELEC=2 &END\nabc 1 1 0 0\n"), 2u);
  EXPECT_EQ(line_of("&FCI NORB=2,NELEC=2 &END\n0.1 1 1\n"), 2u);
  std::istringstream no_norb("&FCI NELEC=2 &END\n0.1 1 1 0 0\n");
  EXPECT_THROW(parse_fcidump(no_norb), ParseError);
}

TEST(Synthetic, DeterministicAndSymmetric) {
  const auto a = synthetic_integrals(5, 42, 0.7);
  const auto b = synthetic_integrals(5, 42, 0.7);
  const auto c = synthetic_integrals(5, 43, 0.7);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
  EXPECT_EQ(a.symmetry_defect(), 0.0);
  EXPECT_EQ(a.n_electrons(), 5u);
}

TEST(FockMatrix, MatchesOccupationDefinition) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto op = testing::random_fermion_operator(rng, n, 6);
    EXPECT_LT(testing::max_abs_diff(fock_matrix(op, n).to_dense(), fock_oracle(op)), 1e-12);
  }
}

TEST(FockMatrix, CanonicalAnticommutation) {
  const std::size_t n = 4;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      // {a_i, a+_j} = delta_ij, {a_i, a_j} = 0
      FermionOperator ac{n, {{1.0, {{i, false}, {j, true}}}, {1.0, {{j, true}, {i, false}}}}};
      FermionOperator aa{n, {{1.0, {{i, false}, {j, false}}}, {1.0, {{j, false}, {i, false}}}}};
      const Mat m = fock_matrix(ac, n).to_dense();
      const Mat want = (i == j ? 1.0 : 0.0) * Mat::Identity(16, 16);
      EXPECT_LT(testing::max_abs_diff(m, want), 1e-14);
      EXPECT_LT(fock_matrix(aa, n).to_dense().cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(FockMatrix, RespectsLimit) {
  FermionOperator op{20, {{1.0, {{0, true}}}}};
  EXPECT_THROW(fock_matrix(op, 20), ResourceError);
}

TEST(Hamiltonian, HermitianAndNumberConserving) {
  for (const char *name : {"h2_sto3g.fcidump", "h2_631g.fcidump"}) {
    const auto ints = load(name);
    const auto h = build_hamiltonian(ints);
    EXPECT_EQ(h.n_modes, ints.n_spin_orbitals());
    const auto m = fock_matrix(h, h.n_modes);
    EXPECT_LT(m.hermitian_defect(), 1e-12);
    // Matrix elements only connect states with equal particle number.
    for (std::size_t r = 0; r < m.dim(); ++r) {
      for (auto k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k) {
        EXPECT_EQ(std::popcount(r), std::popcount(std::uint64_t{m.cols()[k]}));
      }
    }
  }
}

TEST(Hamiltonian, OneElectronSectorIsTheCoreHamiltonian) {
  // With one electron the two-body part vanishes, so the alpha block of the
  // Fock matrix is h itself.
  const auto ints = synthetic_integrals(3, 5, 1.0);
  const auto m = fock_matrix(build_hamiltonian(ints), 6).to_dense();
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t q = 0; q < 3; ++q) {
      const auto row = static_cast<Eigen::Index>(std::uint64_t{1} << spin_orbital(p, 0));
      const auto col = static_cast<Eigen::Index>(std::uint64_t{1} << spin_orbital(q, 0));
      EXPECT_NEAR(m(row, col).real(), ints.one_body(p, q), 1e-14);
    }
  }
}

}  // namespace
}  // namespace fermiqc
