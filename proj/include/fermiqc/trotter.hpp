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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fermiqc/qubit_operator.hpp"

namespace fermiqc {

struct OrderingStrategy {
  enum class Kind { Magnitude, Lexicographic, Random, LexoMag };

  Kind kind = Kind::Magnitude;
  std::uint64_t seed = 0;  // Random only

  static OrderingStrategy magnitude() { return {Kind::Magnitude, 0}; }
  static OrderingStrategy lexicographic() { return {Kind::Lexicographic, 0}; }
  static OrderingStrategy random(std::uint64_t seed) {
    return {Kind::Random, seed};
  }
  static OrderingStrategy lexomag() { return {Kind::LexoMag, 0}; }

  friend bool operator==(const OrderingStrategy &,
                         const OrderingStrategy &) = default;
};

/// "magnitude", "lex", "random:<seed>", "lexomag".
std::string to_string(const OrderingStrategy &s);
OrderingStrategy parse_ordering(std::string_view text);

enum class MagnitudeDirection { Descending, Ascending };

/**
 * Orders the non-identity terms of a simplified operator.
 *
 * Magnitude sorts by |c| (descending by default) with lex_key breaking ties;
 * Lexicographic sorts by lex_key; Random shuffles with a seeded Mersenne
 * twister; LexoMag alternates between the lexicographic and magnitude lists,
 * starting with the lexicographic one and skipping terms already emitted.
 */
std::vector<PauliTerm> order_terms(
    const QubitOperator &op, const OrderingStrategy &strategy,
    MagnitudeDirection direction = MagnitudeDirection::Descending);

/// First-order product formula for exp(-i H t) with hbar = 1.
struct TrotterPlan {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> ordered_terms;  // identity excluded
  std::size_t n_steps = 1;
  double time = 1.0;           // atomic units
  double scalar_offset = 0.0;  // Hartree; identity coefficient + core energy

  /// Rotation angle of term j: theta = 2 c_j t / n_steps.
  double angle(std::size_t j) const;
  double step_time() const { return time / static_cast<double>(n_steps); }
};

/// Throws std::invalid_argument for n_steps < 1, a non-finite angle or a
/// coefficient with a non-negligible imaginary part.
TrotterPlan build_plan(std::vector<PauliTerm> ordered, std::size_t n_qubits,
                       std::size_t n_steps, double time, double offset);

/// Halves `time` until one_norm * time < pi, so the energy is recoverable
/// from a single overlap phase.
double branch_safe_time(const QubitOperator &op, double time);

}  // namespace fermiqc
