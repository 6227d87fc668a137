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

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fermiqc/circuits.hpp"
#include "fermiqc/errors.hpp"
#include "test_util.hpp"

namespace fermiqc {
namespace {

using testing::C;
using testing::Mat;

const PauliString kMixedTerm(5, {{0, PauliAxis::Y}, {1, PauliAxis::Z}, {3, PauliAxis::Z},
                                  {4, PauliAxis::X}});

std::map<GateKind, int> multiset(const Circuit &c) {
  std::map<GateKind, int> m;
  for (const auto &g : c.gates) ++m[g.kind];
  return m;
}

TEST(Gates, YBasisConjugatesZToY) {
  const Mat yb = testing::gate_oracle(Gate::yb(0), 1);
  const Mat ybd = testing::gate_oracle(Gate::ybd(0), 1);
  EXPECT_LT(testing::max_abs_diff(yb * ybd, Mat::Identity(2, 2)), 1e-15);
  EXPECT_LT(testing::max_abs_diff(ybd * testing::pauli_2x2(PauliAxis::Z) * yb,
                                  testing::pauli_2x2(PauliAxis::Y)), 1e-15);
}

TEST(Gates, TwoQubitFactoriesRejectSameQubit) {
  EXPECT_THROW(Gate::cnot(1, 1), std::invalid_argument);
  EXPECT_THROW(Gate::cz(2, 2), std::invalid_argument);
}

TEST(Canonical, SingleZIsOneRotation) {
  const auto c = synthesize_term(PauliString(1, {{0, PauliAxis::Z}}), 0.4);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0], Gate::rz(0, 0.4));
}

TEST(Canonical, ZZIsCnotRotationCnot) {
  const auto c = synthesize_term(PauliString(2, {{0, PauliAxis::Z}, {1, PauliAxis::Z}}), 0.7);
  EXPECT_EQ(c.gates, (std::vector<Gate>{Gate::cnot(0, 1), Gate::rz(1, 0.7), Gate::cnot(0, 1)}));
  const auto n = count_gates(c);
  EXPECT_EQ(n, (GateCounts{3, 2, 0, 1}));
}

TEST(Canonical, MixedTermGateMultisetAndUnitary) {
  const auto c = synthesize_term(kMixedTerm, 0.3);
  const auto m = multiset(c);
  EXPECT_EQ(m.at(GateKind::YB), 1);
  EXPECT_EQ(m.at(GateKind::YBD), 1);
  EXPECT_EQ(m.at(GateKind::H), 2);
  EXPECT_EQ(m.at(GateKind::CNOT), 6);
  EXPECT_EQ(m.at(GateKind::RZ), 1);
  EXPECT_EQ(c.gates.size(), 11u);
  EXPECT_LT(testing::phase_distance(testing::circuit_oracle(c),
                                    testing::rotation_oracle(kMixedTerm, 0.3)), 1e-10);
}

TEST(Canonical, RejectsIdentity) {
  EXPECT_THROW(synthesize_term(PauliString(3), 0.1), std::invalid_argument);
}

// Property: every mode realizes exp(-i theta/2 P) up to global phase.
TEST(Synthesis, AllModesMatchExponential) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ang(-3.2, 3.2);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto p = testing::random_pauli(rng, n);
    const double theta = ang(rng);
    const Mat want = testing::rotation_oracle(p, theta);
    for (auto mode : {SynthesisMode::Canonical, SynthesisMode::BasisShift}) {
      const auto c = synthesize_term(p, theta, mode);
      validate(c);
      ASSERT_LT(testing::phase_distance(testing::circuit_oracle(c), want), 1e-10)
          << p.to_string() << " " << to_string(mode);
    }
    const auto a = synthesize_term(p, theta, SynthesisMode::Ancilla);
    validate(a);
    ASSERT_TRUE(a.ancilla);
    const Mat u = testing::circuit_oracle(a);
    ASSERT_LT(testing::phase_distance(testing::ancilla_zero_block(u, n), want), 1e-10)
        << p.to_string();
    // The ancilla always returns to |0>: the off-diagonal block vanishes.
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
    ASSERT_LT(u.block(d, 0, d, d).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(BasisShift, MixedTermMatchesCanonical) {
  const auto shifted = synthesize_term_basis_shift(kMixedTerm, 0.3);
  EXPECT_LT(testing::phase_distance(testing::circuit_oracle(shifted),
                                    testing::circuit_oracle(synthesize_term(kMixedTerm, 0.3))),
            1e-10);
}

TEST(BasisShift, EntanglerNextToCentreFollowsAxis) {
  // X centre: CZ; Y or Z centre: CNOT.
  const auto x = synthesize_term_basis_shift(
      PauliString(3, {{0, PauliAxis::X}, {1, PauliAxis::Z}, {2, PauliAxis::X}}), 0.2);
  const auto y = synthesize_term_basis_shift(
      PauliString(3, {{0, PauliAxis::X}, {1, PauliAxis::Z}, {2, PauliAxis::Y}}), 0.2);
  auto count = [](const Circuit &c, GateKind k) {
    return std::count_if(c.gates.begin(), c.gates.end(),
                         [k](const Gate &g) { return g.kind == k; });
  };
  EXPECT_EQ(count(x, GateKind::CZ), 4);
  EXPECT_EQ(count(y, GateKind::CZ), 0);
  EXPECT_EQ(count_gates(x).entangling, 4u);
  EXPECT_EQ(count_gates(y).entangling, 4u);
}

class ParityTable : public ::testing::TestWithParam<std::tuple<PauliAxis, int, int>> {};

TEST_P(ParityTable, CentralSequence) {
  const auto [centre, ext, in] = GetParam();
  for (auto mode : {SynthesisMode::Canonical, SynthesisMode::BasisShift}) {
    EXPECT_NEAR(testing::parity_table_overlap(centre, ext, in, mode), 1.0, 1e-12) << to_string(mode);
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllCases, ParityTable,
    ::testing::Combine(::testing::Values(PauliAxis::Z, PauliAxis::Y), ::testing::Values(0, 1),
                       ::testing::Values(0, 1)));

TEST(Ancilla, SingleZ) {
  const auto c = synthesize_term_ancilla(PauliString(1, {{0, PauliAxis::Z}}), 0.5);
  EXPECT_EQ(c.gates, (std::vector<Gate>{Gate::cnot(0, 1), Gate::rz(1, 0.5), Gate::cnot(0, 1)}));
  EXPECT_EQ(c.width(), 2u);
}

TEST(Counts, AllZLadderIsLinear) {
  for (std::size_t k = 1; k <= 20; ++k) {
    std::vector<std::pair<std::size_t, PauliAxis>> f;
    for (std::size_t q = 0; q < k; ++q) f.emplace_back(q, PauliAxis::Z);
    const PauliString p(k, f);
    const auto c = count_gates(synthesize_term(p, 0.1));
    EXPECT_EQ(c.entangling, 2 * (k - 1));
    EXPECT_EQ(c.non_clifford, 1u);
    EXPECT_EQ(c.total, c.entangling + c.single_qubit + c.non_clifford);
  }
  EXPECT_EQ(count_gates(Circuit{}), GateCounts{});
}

// Property: analytic counts equal counted gates in every mode.
TEST(Counts, AnalyticMatchesSynthesized) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_pauli(rng, 1 + trial % 30);
    for (auto mode : {SynthesisMode::Canonical, SynthesisMode::BasisShift, SynthesisMode::Ancilla}) {
      ASSERT_EQ(term_gate_counts(p, mode), count_gates(synthesize_term(p, 0.3, mode)))
          << p.to_string() << " " << to_string(mode);
    }
  }
}

TrotterPlan random_plan(std::mt19937_64 &rng, std::size_t n, std::size_t terms, std::size_t steps) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<PauliTerm> raw;
  for (std::size_t i = 0; i < terms; ++i) raw.push_back({u(rng), testing::random_pauli(rng, n)});
  const auto op = QubitOperator::from_terms(n, raw);
  return build_plan(order_terms(op, OrderingStrategy::magnitude()), n, steps, 1.0, 0.0);
}

TEST(Plan, StepLinearityAndConcatenation) {
  std::mt19937_64 rng(63);
  for (auto mode : {SynthesisMode::Canonical, SynthesisMode::BasisShift, SynthesisMode::Ancilla}) {
    const auto one = random_plan(rng, 6, 12, 1);
    auto three = one;
    three.n_steps = 3;
    const auto c1 = synthesize_plan(one, mode);
    const auto c3 = synthesize_plan(three, mode);
    EXPECT_EQ(count_gates(c3), count_gates(c1).scaled(3));
    EXPECT_EQ(plan_gate_counts(three, mode), count_gates(c3));
    // Three steps of angle theta/3 are the step circuit repeated.
    const auto step = synthesize_step(three, mode);
    Circuit rep{step.n_qubits, step.ancilla, {}};
    for (int i = 0; i < 3; ++i) rep.append(step);
    EXPECT_EQ(rep, c3);
  }
  TrotterPlan empty;
  empty.n_qubits = 3;
  EXPECT_TRUE(synthesize_plan(empty, SynthesisMode::Canonical).gates.empty());
}

TEST(Plan, OneRotationPerTermPerStep) {
  std::mt19937_64 rng(64);
  const auto plan = random_plan(rng, 8, 30, 4);
  for (auto mode : {SynthesisMode::Canonical, SynthesisMode::BasisShift, SynthesisMode::Ancilla}) {
    EXPECT_EQ(count_gates(synthesize_plan(plan, mode)).non_clifford,
              4 * plan.ordered_terms.size());
  }
}

TEST(CircuitText, RoundTrip) {
  std::mt19937_64 rng(65);
  for (auto mode : {SynthesisMode::Canonical, SynthesisMode::BasisShift, SynthesisMode::Ancilla}) {
    const auto c = synthesize_plan(random_plan(rng, 5, 10, 2), mode);
    std::stringstream ss;
    write_circuit(ss, c);
    EXPECT_EQ(read_circuit(ss), c);
  }
}

TEST(CircuitText, DocumentedFormat) {
  std::istringstream in("QUBITS 3 ANCILLA 0\nH 2\nCNOT 0 2\nCZ 1 2\nRZ 2 0.19634954\nYB 1\nYBD 1\nX 0\n");
  const auto c = read_circuit(in);
  EXPECT_EQ(c.n_qubits, 3u);
  ASSERT_EQ(c.gates.size(), 7u);
  EXPECT_EQ(c.gates[1], Gate::cnot(0, 2));
  EXPECT_DOUBLE_EQ(c.gates[3].angle, 0.19634954);
}

TEST(CircuitText, Errors) {
  auto line_of = [](const std::string &text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_circuit(in);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("QUBITS 2 ANCILLA 0\nH 0\nFOO 1\n"), 3u);
  EXPECT_EQ(line_of("QUBITS 2 ANCILLA 0\nCNOT 0\n"), 2u);
  EXPECT_EQ(line_of("QUBITS 2 ANCILLA 0\nH 5\n"), 2u);
  EXPECT_EQ(line_of("H 0\n"), 1u);
}

TEST(CircuitValidate, RejectsOutOfRange) {
  Circuit c{2, false, {Gate::h(2)}};
  EXPECT_THROW(validate(c), DimensionError);
  c.ancilla = true;
  EXPECT_NO_THROW(validate(c));
}

}  // namespace
}  // namespace fermiqc
