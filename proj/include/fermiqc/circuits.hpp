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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fermiqc/pauli.hpp"
#include "fermiqc/trotter.hpp"

namespace fermiqc {

enum class GateKind : std::uint8_t { H, YB, YBD, CNOT, CZ, RZ, X };

std::string_view to_string(GateKind k);

/**
 * One gate. q0 is the only qubit for single-qubit kinds, the control for
 * CNOT and the first qubit for CZ. YB is Rx(pi/2), the Clifford G with
 * G^dagger Z G = Y; YBD is its inverse. RZ(angle) = exp(-i angle Z / 2).
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;  // CNOT target / CZ second qubit
  double angle = 0.0;    // RZ only

  static Gate h(std::uint32_t q) { return {GateKind::H, q, q, 0.0}; }
  static Gate yb(std::uint32_t q) { return {GateKind::YB, q, q, 0.0}; }
  static Gate ybd(std::uint32_t q) { return {GateKind::YBD, q, q, 0.0}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q, q, 0.0}; }
  static Gate rz(std::uint32_t q, double theta) {
    return {GateKind::RZ, q, q, theta};
  }
  static Gate cnot(std::uint32_t control, std::uint32_t target);
  static Gate cz(std::uint32_t a, std::uint32_t b);

  bool two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
  }

  friend bool operator==(const Gate &, const Gate &) = default;
};

enum class SynthesisMode { Canonical, BasisShift, Ancilla };

std::string_view to_string(SynthesisMode m);
/// "canonical", "basis_shift" (or "basis-shift"), "ancilla".
SynthesisMode parse_mode(std::string_view text);

struct Circuit {
  std::size_t n_qubits = 0;  // system register, ancilla excluded
  bool ancilla = false;      // when set, qubit n_qubits is the ancilla
  std::vector<Gate> gates;

  std::size_t width() const { return n_qubits + (ancilla ? 1 : 0); }
  void append(const Circuit &other);

  friend bool operator==(const Circuit &, const Circuit &) = default;
};

struct GateCounts {
  std::uint64_t total = 0;
  std::uint64_t entangling = 0;    // CNOT + CZ
  std::uint64_t single_qubit = 0;  // Clifford single-qubit gates
  std::uint64_t non_clifford = 0;  // RZ

  GateCounts &operator+=(const GateCounts &o);
  GateCounts scaled(std::uint64_t k) const;
  friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

GateCounts count_gates(const Circuit &c);

/// Throws DimensionError if a gate index falls outside the circuit width or
/// a two-qubit gate repeats a qubit.
void validate(const Circuit &c);

// Per-term synthesis. All three throw std::invalid_argument on an identity
// string. n_qubits defaults to the string's register size.
Circuit synthesize_term(const PauliString &term, double theta);
Circuit synthesize_term_basis_shift(const PauliString &term, double theta);
Circuit synthesize_term_ancilla(const PauliString &term, double theta);
Circuit synthesize_term(const PauliString &term, double theta,
                        SynthesisMode mode);

/// One Trotter step of the plan.
Circuit synthesize_step(const TrotterPlan &plan, SynthesisMode mode);
/// n_steps copies of synthesize_step.
Circuit synthesize_plan(const TrotterPlan &plan, SynthesisMode mode);

/// Raw per-term gate counts without building gates; equals
/// count_gates(synthesize_term(...)).
GateCounts term_gate_counts(const PauliString &term, SynthesisMode mode);
/// Equals count_gates(synthesize_plan(plan, mode)).
GateCounts plan_gate_counts(const TrotterPlan &plan, SynthesisMode mode);

// Text format: header "QUBITS <n> ANCILLA <0|1>", then one gate per line.
void write_circuit(std::ostream &out, const Circuit &c);
Circuit read_circuit(std::istream &in);

}  // namespace fermiqc
