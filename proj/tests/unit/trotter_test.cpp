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
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fermiqc/trotter.hpp"
#include "test_util.hpp"

namespace fermiqc {
namespace {

using testing::C;

QubitOperator sample_operator() {
  // Coefficients chosen so magnitude and lexicographic orders differ.
  std::vector<PauliTerm> raw{
      {0.1, PauliString(3, {{0, PauliAxis::Z}})},
      {-0.9, PauliString(3, {{2, PauliAxis::Z}})},
      {0.5, PauliString(3, {{0, PauliAxis::X}, {1, PauliAxis::X}})},
      {0.5, PauliString(3, {{1, PauliAxis::Z}})},
      {-0.3, PauliString(3, {{0, PauliAxis::Y}, {1, PauliAxis::Y}})},
      {2.0, PauliString(3)},
  };
  return QubitOperator::from_terms(3, raw);
}

std::vector<std::string> names(const std::vector<PauliTerm> &t) {
  std::vector<std::string> out;
  for (const auto &x : t) out.push_back(x.string.to_string());
  return out;
}

TEST(Ordering, LexicographicFollowsKey) {
  const auto t = order_terms(sample_operator(), OrderingStrategy::lexicographic());
  EXPECT_EQ(names(t), (std::vector<std::string>{"Z2", "Z1", "X0 X1", "Y0 Y1", "Z0"}));
}

TEST(Ordering, MagnitudeBreaksTiesLexicographically) {
  const auto desc = order_terms(sample_operator(), OrderingStrategy::magnitude());
  EXPECT_EQ(names(desc), (std::vector<std::string>{"Z2", "Z1", "X0 X1", "Y0 Y1", "Z0"}));
  const auto asc = order_terms(sample_operator(), OrderingStrategy::magnitude(),
                               MagnitudeDirection::Ascending);
  EXPECT_EQ(names(asc), (std::vector<std::string>{"Z0", "Y0 Y1", "Z1", "X0 X1", "Z2"}));
}

TEST(Ordering, LexoMagInterleavesWithoutRepeats) {
  std::vector<PauliTerm> raw{
      {0.1, PauliString(2, {{1, PauliAxis::Z}})},
      {0.2, PauliString(2, {{0, PauliAxis::X}})},
      {0.9, PauliString(2, {{0, PauliAxis::Z}})},
      {0.4, PauliString(2, {{1, PauliAxis::X}})},
  };
  const auto op = QubitOperator::from_terms(2, raw);
  // lex: X1 Z1 X0 Z0; magnitude: Z0 X1 X0 Z1
  EXPECT_EQ(names(order_terms(op, OrderingStrategy::lexicographic())),
            (std::vector<std::string>{"X1", "Z1", "X0", "Z0"}));
  EXPECT_EQ(names(order_terms(op, OrderingStrategy::lexomag())),
            (std::vector<std::string>{"X1", "Z0", "Z1", "X0"}));
}

// Property: every strategy yields a permutation of the non-identity terms.
TEST(Ordering, AlwaysAPermutation) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<PauliTerm> raw;
  for (int i = 0; i < 80; ++i) raw.push_back({u(rng), testing::random_pauli(rng, 5, true)});
  const auto op = QubitOperator::from_terms(5, raw);
  std::multiset<std::string> want;
  for (const auto &t : op.terms()) want.insert(t.string.to_string());
  for (const auto &s : {OrderingStrategy::magnitude(), OrderingStrategy::lexicographic(),
                        OrderingStrategy::random(3), OrderingStrategy::lexomag()}) {
    const auto n = names(order_terms(op, s));
    EXPECT_EQ(std::multiset<std::string>(n.begin(), n.end()), want) << to_string(s);
  }
}

TEST(Ordering, RandomIsSeedDeterministic) {
  std::mt19937_64 rng(52);
  std::vector<PauliTerm> raw;
  for (int i = 0; i < 40; ++i) raw.push_back({1.0 + i, testing::random_pauli(rng, 6)});
  const auto op = QubitOperator::from_terms(6, raw);
  EXPECT_EQ(names(order_terms(op, OrderingStrategy::random(9))),
            names(order_terms(op, OrderingStrategy::random(9))));
  EXPECT_NE(names(order_terms(op, OrderingStrategy::random(9))),
            names(order_terms(op, OrderingStrategy::random(10))));
}

TEST(Ordering, ParseAndPrint) {
  for (const auto &s : {OrderingStrategy::magnitude(), OrderingStrategy::lexicographic(),
                        OrderingStrategy::random(77), OrderingStrategy::lexomag()}) {
    EXPECT_EQ(parse_ordering(to_string(s)), s);
  }
  EXPECT_EQ(to_string(OrderingStrategy::random(77)), "random:77");
  EXPECT_EQ(parse_ordering("mag"), OrderingStrategy::magnitude());
  EXPECT_EQ(parse_ordering("random"), OrderingStrategy::random(0));
  EXPECT_THROW(parse_ordering("zigzag"), std::invalid_argument);
  EXPECT_THROW(parse_ordering("random:x"), std::invalid_argument);
}

TEST(Plan, AnglesAndOffset) {
  const auto op = sample_operator();
  const auto plan = build_plan(order_terms(op, OrderingStrategy::magnitude()), 3, 4, 2.0,
                               op.constant().real() + 0.5);
  EXPECT_DOUBLE_EQ(plan.step_time(), 0.5);
  EXPECT_DOUBLE_EQ(plan.angle(0), 2 * -0.9 * 2.0 / 4);
  EXPECT_DOUBLE_EQ(plan.scalar_offset, 2.5);
}

TEST(Plan, RejectsBadInput) {
  const auto op = sample_operator();
  const auto terms = order_terms(op, OrderingStrategy::magnitude());
  EXPECT_THROW(build_plan(terms, 3, 0, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(build_plan(terms, 3, 1, std::numeric_limits<double>::infinity(), 0),
               std::invalid_argument);
  EXPECT_THROW(build_plan(terms, 4, 1, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(build_plan({{C(0, 1), PauliString(3, {{0, PauliAxis::Z}})}}, 3, 1, 1.0, 0),
               std::invalid_argument);
  EXPECT_THROW(build_plan({{1.0, PauliString(3)}}, 3, 1, 1.0, 0), std::invalid_argument);
}

TEST(Plan, BranchSafeTime) {
  const auto op = sample_operator();  // one-norm 2.3
  EXPECT_DOUBLE_EQ(branch_safe_time(op, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(branch_safe_time(op, 4.0), 1.0);
  EXPECT_DOUBLE_EQ(branch_safe_time(op, 2.0), 1.0);
  EXPECT_LT(branch_safe_time(op, 100.0) * op.one_norm(), std::numbers::pi);
}

}  // namespace
}  // namespace fermiqc
