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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fermiqc/sparse_matrix.hpp"

namespace fermiqc {

using Complex = std::complex<double>;

/**
 * One- and two-electron integrals over spatial orbitals, in Hartree.
 *
 * Two-electron integrals are in chemists' notation (pq|rs). Both arrays are
 * held in full (symmetry-completed) form.
 */
class IntegralSet {
 public:
  IntegralSet() = default;
  IntegralSet(std::size_t n_spatial, std::size_t n_electrons);

  std::size_t n_spatial() const { return n_; }
  std::size_t n_spin_orbitals() const { return 2 * n_; }
  std::size_t n_electrons() const { return n_electrons_; }
  int ms2() const { return ms2_; }
  void set_ms2(int ms2) { ms2_ = ms2; }

  double one_body(std::size_t p, std::size_t q) const {
    return h1_[p * n_ + q];
  }
  double two_body(std::size_t p, std::size_t q, std::size_t r,
                  std::size_t s) const {
    return h2_[((p * n_ + q) * n_ + r) * n_ + s];
  }
  double core_energy() const { return core_; }
  /// True when the source had no i=j=k=l=0 row and core_energy defaulted.
  bool core_energy_missing() const { return core_missing_; }

  /// Sets h_pq and h_qp.
  void set_one_body(std::size_t p, std::size_t q, double v);
  /// Sets all eight permutationally equivalent (pq|rs) elements.
  void set_two_body(std::size_t p, std::size_t q, std::size_t r,
                    std::size_t s, double v);
  void set_core_energy(double e, bool missing = false) {
    core_ = e;
    core_missing_ = missing;
  }

  /// Largest deviation from the one-body and 8-fold two-body symmetries.
  double symmetry_defect() const;

  friend bool operator==(const IntegralSet &, const IntegralSet &) = default;

 private:
  std::size_t n_ = 0;
  std::size_t n_electrons_ = 0;
  int ms2_ = 0;
  double core_ = 0.0;
  bool core_missing_ = false;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

/// Reads FCIDUMP text. Lines starting with '!' or '#' before the namelist
/// are treated as comments.
IntegralSet parse_fcidump(std::istream &in);
/// Writes the unique elements (i>=j, k>=l, ij>=kl) with full precision.
void write_fcidump(std::ostream &out, const IntegralSet &ints,
                   double threshold = 0.0);

/**
 * Random symmetric integrals over `n_spatial` orbitals, deterministic in
 * `seed`. Each symmetry-unique element is nonzero with probability
 * `density`, uniform on [-1, 1] when present.
 */
IntegralSet synthetic_integrals(std::size_t n_spatial, std::uint64_t seed,
                                double density);

struct LadderOp {
  std::uint32_t mode;
  bool dagger;

  friend bool operator==(const LadderOp &, const LadderOp &) = default;
};

/// coefficient * factors[0] factors[1] ... (leftmost factor acts last).
struct FermionTerm {
  Complex coefficient;
  std::vector<LadderOp> factors;
};

struct FermionOperator {
  std::size_t n_modes = 0;
  std::vector<FermionTerm> terms;
};

/// Spin-orbital index of spatial orbital p with spin (0 = alpha, 1 = beta).
constexpr std::size_t spin_orbital(std::size_t p, int spin) {
  return 2 * p + static_cast<std::size_t>(spin);
}

/**
 * Second-quantized electronic Hamiltonian over 2 * n_spatial spin-orbitals:
 *   sum_{pq,s} h_pq a+_{ps} a_{qs}
 *   + 1/2 sum_{pqrs,s,t} (pq|rs) a+_{ps} a+_{rt} a_{st} a_{qs}.
 * The core energy is not included.
 */
FermionOperator build_hamiltonian(const IntegralSet &ints);

/// Default ceiling on Fock-space and qubit-register matrix sizes.
inline constexpr std::size_t kDefaultMatrixQubitLimit = 16;

/**
 * Occupation-number-basis matrix of `op` on `n_modes` modes. Bit j of a
 * basis index is the occupation of mode j; a+_i carries the sign
 * (-1)^(sum_{j<i} n_j).
 */
SparseMatrix fock_matrix(const FermionOperator &op, std::size_t n_modes,
                         std::size_t limit = kDefaultMatrixQubitLimit);

}  // namespace fermiqc
