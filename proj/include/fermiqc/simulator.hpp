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
#include <vector>

#include <Eigen/Dense>

#include "fermiqc/circuits.hpp"
#include "fermiqc/mappings.hpp"
#include "fermiqc/qubit_operator.hpp"
#include "fermiqc/sparse_matrix.hpp"
#include "fermiqc/trotter.hpp"

namespace fermiqc {

/// Largest register operator_matrix and the error analysis accept by default.
inline constexpr std::size_t kDefaultSimulationQubitLimit = 16;
inline constexpr std::size_t kCircuitUnitaryQubitLimit = 10;

struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<Complex> amplitudes;  // qubit 0 is the least significant bit

  StateVector() = default;
  explicit StateVector(std::size_t n);  // |0...0>
  static StateVector basis(std::size_t n, std::uint64_t index);

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

Complex inner(const StateVector &a, const StateVector &b);  // <a|b>

/// Sparse matrix of sum_j c_j P_j including the identity constant. Throws
/// ResourceError above `limit` qubits.
SparseMatrix operator_matrix(const QubitOperator &op,
                             std::size_t limit = kDefaultSimulationQubitLimit);

struct Eigenpair {
  double energy = 0.0;
  StateVector state;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/**
 * Lowest eigenpair of a Hermitian matrix. Small matrices go through a dense
 * solver; larger ones through restarted Lanczos with full
 * reorthogonalisation, run until ||Hv - Ev|| < tol. Throws
 * std::invalid_argument if the matrix is not Hermitian within 1e-10 and
 * NumericError if the residual target is not met.
 */
Eigenpair ground_state(const SparseMatrix &m, double tol = 1e-9);

/// Applies the plan's product formula term by term, n_steps times, through
/// the closed form cos(theta/2) psi - i sin(theta/2) P psi.
StateVector apply_trotterized(const TrotterPlan &plan, StateVector state);

struct TrotterErrorReport {
  double exact_energy = 0.0;
  double estimated_energy = 0.0;
  double error = 0.0;
  double overlap = 0.0;  // |<g|U|g>|
  bool low_overlap = false;
  OrderingStrategy ordering;
  MappingScheme mapping = MappingScheme::JordanWigner;
  std::size_t n_steps = 1;
  double time = 1.0;
};

/**
 * Energy from the overlap phase: E = -arg<g|U|g>/t + scalar_offset. The
 * caller fills `ordering` and `mapping`. low_overlap is set when the overlap
 * magnitude is below 0.5.
 */
TrotterErrorReport trotter_error(const TrotterPlan &plan, double exact_energy,
                                 const StateVector &ground);

/// Applies a circuit to a state of matching width.
StateVector apply_circuit(const Circuit &c, StateVector state);

/// Dense unitary of the whole circuit (ancilla included). Throws
/// ResourceError above 10 qubits of width.
Eigen::MatrixXcd circuit_unitary(const Circuit &c);

}  // namespace fermiqc
