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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "fermiqc/pauli.hpp"

namespace fermiqc {

/// Coefficients at or below this magnitude (Hartree) are dropped.
inline constexpr double kDefaultDropTolerance = 1e-12;

/**
 * Weighted sum of distinct Pauli strings on an n-qubit register.
 *
 * The identity component is held apart as `constant()`; `terms()` never
 * contains the identity string, never repeats a string and never holds a
 * coefficient with magnitude at or below the drop tolerance it was built
 * with. Terms are kept in ascending lex_key order.
 */
class QubitOperator {
 public:
  explicit QubitOperator(std::size_t n_qubits = 0) : n_(n_qubits) {}

  /// Merge a raw (possibly repeating) term list.
  static QubitOperator from_terms(std::size_t n_qubits,
                                  std::span<const PauliTerm> raw,
                                  double tol = kDefaultDropTolerance);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<PauliTerm> &terms() const { return terms_; }
  Complex constant() const { return constant_; }

  /// Sum of |c| over non-identity terms.
  double one_norm() const;

  friend bool operator==(const QubitOperator &, const QubitOperator &) =
      default;

 private:
  std::size_t n_;
  Complex constant_{0.0, 0.0};
  std::vector<PauliTerm> terms_;
};

/// Re-merge and re-apply the drop tolerance. Idempotent.
QubitOperator simplify(const QubitOperator &op,
                       double tol = kDefaultDropTolerance);
QubitOperator simplify(std::size_t n_qubits, std::span<const PauliTerm> raw,
                       double tol = kDefaultDropTolerance);

/**
 * Text form, one term per line: `(<re>,<im>) <axis><qubit> ...`, e.g.
 * `(0.5,0) X0 Z1 Z3 X4`. The identity term has an empty string part.
 * A leading `# n_qubits <n>` line records the register size.
 */
void write_pauli_text(std::ostream &out, const QubitOperator &op);
QubitOperator read_pauli_text(std::istream &in,
                              double tol = kDefaultDropTolerance);

/// Parses one line of the text form (without the register header).
PauliTerm parse_pauli_term(std::string_view line, std::size_t n_qubits);

}  // namespace fermiqc
