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
#include <string_view>
#include <vector>

#include "fermiqc/circuits.hpp"

namespace fermiqc {

/**
 * Rule-based commutation, no matrices. Gates on disjoint qubits commute;
 * two CNOTs commute unless one targets the other's control; diagonal gates
 * (RZ, CZ) commute with each other and with a CNOT whose target they avoid;
 * X commutes with a CNOT on its target. Identical gates always commute.
 */
bool gates_commute(const Gate &a, const Gate &b);

/// True when b undoes a: identical self-inverse gates, or YB next to YBD.
bool cancels(const Gate &a, const Gate &b);

/// Removes adjacent inverse pairs, cascading until none remain.
Circuit cancel_adjacent(const Circuit &c);

/**
 * One forward sweep. Each gate looks ahead through gates it commutes with
 * and, at the first inverse partner, both are deleted. Surviving gates keep
 * their order. window = 0 means unbounded look-ahead.
 */
Circuit commute_and_cancel(const Circuit &c, std::size_t window = 0);

enum class OptimizeLevel { None, Cancel, Full };

std::string_view to_string(OptimizeLevel l);
OptimizeLevel parse_optimize_level(std::string_view text);

struct OptimizeOptions {
  OptimizeLevel level = OptimizeLevel::Full;
  std::size_t window = 0;   // 0 = unbounded
  bool cross_step = false;  // allow cancellations across Trotter-step seams
};

struct OptimizationReport {
  std::vector<std::uint64_t> removed_per_pass;  // last entry is 0 at fixpoint
  std::size_t passes() const { return removed_per_pass.size(); }
  std::uint64_t removed() const;
};

/// Alternates cancel_adjacent and commute_and_cancel until a pass removes
/// nothing. Level Cancel runs cancel_adjacent only.
Circuit optimize(const Circuit &c, const OptimizeOptions &opts = {},
                 OptimizationReport *report = nullptr);

/// Synthesizes and optimizes a plan. Unless cross_step is set, one step is
/// optimized in isolation and repeated, so no cancellation crosses a seam.
Circuit compile_plan(const TrotterPlan &plan, SynthesisMode mode,
                     const OptimizeOptions &opts = {},
                     OptimizationReport *report = nullptr);

}  // namespace fermiqc
