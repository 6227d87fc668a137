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

#include "fermiqc/optimizer.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fermiqc {

namespace {

bool touches(const Gate &g, std::uint32_t q) { return g.q0 == q || g.q1 == q; }

bool disjoint(const Gate &a, const Gate &b) {
  return !touches(b, a.q0) && !touches(b, a.q1);
}

bool diagonal(const Gate &g) {
  return g.kind == GateKind::RZ || g.kind == GateKind::CZ;
}

// a is a CNOT; does b commute with it given they share a qubit?
bool commutes_with_cnot(const Gate &cx, const Gate &b) {
  const std::uint32_t ctrl = cx.q0, tgt = cx.q1;
  switch (b.kind) {
    case GateKind::CNOT: return b.q1 != ctrl && b.q0 != tgt;
    case GateKind::RZ:
    case GateKind::CZ: return !touches(b, tgt);
    case GateKind::X: return b.q0 == tgt;
    default: return false;
  }
}

}  // namespace

bool gates_commute(const Gate &a, const Gate &b) {
  if (disjoint(a, b) || a == b) return true;
  if (diagonal(a) && diagonal(b)) return true;
  if (a.kind == GateKind::CNOT) return commutes_with_cnot(a, b);
  if (b.kind == GateKind::CNOT) return commutes_with_cnot(b, a);
  return cancels(a, b);
}

bool cancels(const Gate &a, const Gate &b) {
  switch (a.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::CNOT: return a == b;
    case GateKind::CZ:
      return b.kind == GateKind::CZ &&
             ((a.q0 == b.q0 && a.q1 == b.q1) || (a.q0 == b.q1 && a.q1 == b.q0));
    case GateKind::YB: return b.kind == GateKind::YBD && b.q0 == a.q0;
    case GateKind::YBD: return b.kind == GateKind::YB && b.q0 == a.q0;
    case GateKind::RZ: return false;
  }
  return false;
}

Circuit cancel_adjacent(const Circuit &c) {
  Circuit out{c.n_qubits, c.ancilla, {}};
  out.gates.reserve(c.gates.size());
  for (const Gate &g : c.gates) {
    if (!out.gates.empty() && cancels(out.gates.back(), g)) {
      out.gates.pop_back();
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

Circuit commute_and_cancel(const Circuit &c, std::size_t window) {
  const std::size_t n = c.gates.size();
  // next[i]: index of the next surviving gate after i.
  std::vector<std::size_t> next(n);
  std::iota(next.begin(), next.end(), std::size_t{1});
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev(n);
  for (std::size_t i = 0; i < n; ++i) prev[i] = i == 0 ? kNone : i - 1;
  std::vector<bool> removed(n, false);
  auto unlink = [&](std::size_t i) {
    removed[i] = true;
    if (prev[i] != kNone) next[prev[i]] = next[i];
    if (next[i] < n) prev[next[i]] = prev[i];
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (removed[i]) continue;
    const Gate &a = c.gates[i];
    if (a.kind == GateKind::RZ) continue;
    std::size_t seen = 0;
    for (std::size_t j = next[i]; j < n; j = next[j]) {
      if (window != 0 && ++seen > window) break;
      const Gate &b = c.gates[j];
      if (cancels(a, b)) {
        unlink(j);
        unlink(i);
        break;
      }
      if (!gates_commute(a, b)) break;
    }
  }

  Circuit out{c.n_qubits, c.ancilla, {}};
  out.gates.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) out.gates.push_back(c.gates[i]);
  }
  return out;
}

std::string_view to_string(OptimizeLevel l) {
  switch (l) {
    case OptimizeLevel::None: return "none";
    case OptimizeLevel::Cancel: return "cancel";
    case OptimizeLevel::Full: return "full";
  }
  return "?";
}

OptimizeLevel parse_optimize_level(std::string_view text) {
  if (text == "none") return OptimizeLevel::None;
  if (text == "cancel") return OptimizeLevel::Cancel;
  if (text == "full") return OptimizeLevel::Full;
  throw std::invalid_argument("unknown optimize level '" + std::string(text) +
                              "'");
}

std::uint64_t OptimizationReport::removed() const {
  return std::accumulate(removed_per_pass.begin(), removed_per_pass.end(),
                         std::uint64_t{0});
}

Circuit optimize(const Circuit &c, const OptimizeOptions &opts,
                 OptimizationReport *report) {
  if (report) report->removed_per_pass.clear();
  if (opts.level == OptimizeLevel::None) return c;
  Circuit cur = c;
  for (;;) {
    const std::size_t before = cur.gates.size();
    cur = cancel_adjacent(cur);
    if (opts.level == OptimizeLevel::Full) {
      cur = commute_and_cancel(cur, opts.window);
    }
    const std::uint64_t removed = before - cur.gates.size();
    if (report) report->removed_per_pass.push_back(removed);
    if (removed == 0 || opts.level == OptimizeLevel::Cancel) break;
  }
  return cur;
}

Circuit compile_plan(const TrotterPlan &plan, SynthesisMode mode,
                     const OptimizeOptions &opts, OptimizationReport *report) {
  if (opts.cross_step || plan.n_steps == 1) {
    return optimize(synthesize_plan(plan, mode), opts, report);
  }
  const Circuit step = optimize(synthesize_step(plan, mode), opts, report);
  Circuit out{step.n_qubits, step.ancilla, {}};
  out.gates.reserve(step.gates.size() * plan.n_steps);
  for (std::size_t s = 0; s < plan.n_steps; ++s) out.append(step);
  return out;
}

}  // namespace fermiqc
