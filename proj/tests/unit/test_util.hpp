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

// Independent oracles shared by the unit and acceptance tests. Nothing here
// calls into the library's own matrix builders: Pauli matrices come from
// explicit Kronecker products and exponentials from Eigen's MatrixFunctions.

#include <cmath>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "fermiqc/circuits.hpp"
#include "fermiqc/fermion.hpp"
#include "fermiqc/pauli.hpp"
#include "fermiqc/qubit_operator.hpp"

namespace fermiqc::testing {

using Mat = Eigen::MatrixXcd;
using C = std::complex<double>;

inline Mat pauli_2x2(PauliAxis a) {
  Mat m(2, 2);
  switch (a) {
    case PauliAxis::I: m << 1, 0, 0, 1; break;
    case PauliAxis::X: m << 0, 1, 1, 0; break;
    case PauliAxis::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case PauliAxis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// Kronecker product with qubit 0 as the least significant index bit, so
/// the highest qubit is the leftmost factor.
inline Mat kron_pauli(const PauliString &p) {
  Mat m = Mat::Identity(1, 1);
  for (std::size_t q = p.size(); q-- > 0;) {
    Mat next = Eigen::kroneckerProduct(m, pauli_2x2(p[q])).eval();
    m = next;
  }
  return m;
}

inline Mat dense_operator(const QubitOperator &op) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << op.n_qubits());
  Mat m = op.constant() * Mat::Identity(dim, dim);
  for (const auto &t : op.terms()) m += t.coefficient * kron_pauli(t.string);
  return m;
}

/// exp(-i theta/2 P) via the matrix exponential.
inline Mat rotation_oracle(const PauliString &p, double theta) {
  Mat a = C(0, -0.5 * theta) * kron_pauli(p);
  return a.exp();
}

/// Distance between a and b after removing the best global phase.
inline double phase_distance(const Mat &a, const Mat &b) {
  const C ov = (b.adjoint() * a).trace();
  const C phase = std::abs(ov) > 0 ? ov / std::abs(ov) : C(1, 0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const Mat &a, const Mat &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Dense unitary of one gate on `width` qubits, built column by column from
/// the gate's action on basis states.
inline Mat gate_oracle(const Gate &g, std::size_t width) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << width);
  const double r = 1.0 / std::sqrt(2.0);
  Mat one(2, 2);
  switch (g.kind) {
    case GateKind::H: one << r, r, r, -r; break;
    case GateKind::YB: one << r, C(0, -r), C(0, -r), r; break;
    case GateKind::YBD: one << r, C(0, r), C(0, r), r; break;
    case GateKind::X: one << 0, 1, 1, 0; break;
    case GateKind::RZ:
      one << std::polar(1.0, -g.angle / 2), 0, 0, std::polar(1.0, g.angle / 2);
      break;
    default: break;
  }
  Mat u = Mat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto s = static_cast<std::uint64_t>(col);
    const int b0 = (s >> g.q0) & 1U;
    const int b1 = (s >> g.q1) & 1U;
    if (g.kind == GateKind::CNOT) {
      u(static_cast<Eigen::Index>(b0 ? s ^ (std::uint64_t{1} << g.q1) : s), col) = 1.0;
    } else if (g.kind == GateKind::CZ) {
      u(col, col) = (b0 && b1) ? -1.0 : 1.0;
    } else {
      const std::uint64_t m = std::uint64_t{1} << g.q0;
      u(static_cast<Eigen::Index>(s & ~m), col) = one(0, b0);
      u(static_cast<Eigen::Index>(s | m), col) = one(1, b0);
    }
  }
  return u;
}

inline Mat circuit_oracle(const Circuit &c) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.width());
  Mat u = Mat::Identity(dim, dim);
  for (const auto &g : c.gates) u = (gate_oracle(g, c.width()) * u).eval();
  return u;
}

/// Block of an ancilla-mode unitary with the ancilla (top qubit) in |0>.
inline Mat ancilla_zero_block(const Mat &u, std::size_t n_system) {
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n_system);
  return u.topLeftCorner(d, d);
}

// Random circuit rich in cancellation opportunities: short alphabet and
// frequent repeats of recent gates.
inline Circuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t len) {
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_int_distribution<std::uint32_t> q(0, static_cast<std::uint32_t>(n - 1));
  std::uniform_real_distribution<double> ang(-2, 2);
  std::bernoulli_distribution repeat(0.35);
  Circuit c{n, false, {}};
  while (c.gates.size() < len) {
    if (!c.gates.empty() && repeat(rng)) {
      std::uniform_int_distribution<std::size_t> back(0, std::min<std::size_t>(c.gates.size(), 6) - 1);
      Gate g = c.gates[c.gates.size() - 1 - back(rng)];
      if (g.kind == GateKind::YB) g.kind = GateKind::YBD;
      else if (g.kind == GateKind::YBD) g.kind = GateKind::YB;
      c.gates.push_back(g);
      continue;
    }
    const auto a = q(rng);
    auto b = q(rng);
    switch (kind(rng)) {
      case 0: c.gates.push_back(Gate::h(a)); break;
      case 1: c.gates.push_back(Gate::yb(a)); break;
      case 2: c.gates.push_back(Gate::ybd(a)); break;
      case 3: c.gates.push_back(Gate::x(a)); break;
      case 4: c.gates.push_back(Gate::rz(a, ang(rng))); break;
      case 5: if (n > 1) { while (b == a) b = q(rng); c.gates.push_back(Gate::cnot(a, b)); } break;
      case 6: if (n > 1) { while (b == a) b = q(rng); c.gates.push_back(Gate::cz(a, b)); } break;
    }
  }
  return c;
}

// Parity tables for the central qubit of X0 Z1 A2 (A = Z or Y): with the
// exterior qubit in the X eigenstate of eigenvalue (-1)^ext and the interior
// qubit in |in>, the central qubit sees X^p Rz X^p (Z centre) or
// V X^p Rz X^p V^dagger with V Z V^dagger = Y (Y centre), p = ext xor in.
// Returns |<expected|circuit|input>|, 1 when the table holds.
inline double parity_table_overlap(PauliAxis centre, int ext, int in, SynthesisMode mode) {
  const double theta = 0.61;
  const PauliString term(3, {{0, PauliAxis::X}, {1, PauliAxis::Z}, {2, centre}});
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd e0, e1, psi;
  e0 << r, (ext ? -r : r);
  e1 << (in ? 0 : 1), (in ? 1 : 0);
  psi << C(0.6, 0.1), C(-0.3, 0.734846922834953);
  psi.normalize();
  const Mat x = pauli_2x2(PauliAxis::X);
  const Mat rz = gate_oracle(Gate::rz(0, theta), 1);
  const Mat flip = ((ext ^ in) ? x : Mat::Identity(2, 2));
  Mat seq = flip * rz * flip;
  if (centre == PauliAxis::Y) {
    const Mat v = gate_oracle(Gate::ybd(0), 1);
    seq = v * seq * v.adjoint();
  }
  const Eigen::VectorXcd rest = Eigen::kroneckerProduct(e1, e0).eval();
  const Eigen::VectorXcd input = Eigen::kroneckerProduct(psi, rest).eval();
  const Eigen::VectorXcd want = Eigen::kroneckerProduct((seq * psi).eval(), rest).eval();
  const Eigen::VectorXcd out = circuit_oracle(synthesize_term(term, theta, mode)) * input;
  return std::abs(want.dot(out));
}

inline PauliString random_pauli(std::mt19937_64 &rng, std::size_t n,
                                bool allow_identity = false) {
  std::uniform_int_distribution<int> axis(0, 3);
  for (;;) {
    std::vector<PauliAxis> ax(n);
    for (auto &a : ax) a = static_cast<PauliAxis>(axis(rng));
    PauliString p(n, ax);
    if (allow_identity || !p.is_identity()) return p;
  }
}

/// Random operator on n modes: products of 1 to 4 ladder operators with
/// complex coefficients.
inline FermionOperator random_fermion_operator(std::mt19937_64 &rng,
                                               std::size_t n,
                                               std::size_t n_terms) {
  FermionOperator op;
  op.n_modes = n;
  std::uniform_int_distribution<std::uint32_t> mode(
      0, static_cast<std::uint32_t>(n - 1));
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t t = 0; t < n_terms; ++t) {
    FermionTerm term;
    term.coefficient = C(u(rng), u(rng));
    const int k = len(rng);
    for (int f = 0; f < k; ++f) term.factors.push_back({mode(rng), coin(rng)});
    op.terms.push_back(std::move(term));
  }
  return op;
}

inline std::string data_path(const std::string &name) {
  return std::string(FERMIQC_DATA_DIR) + "/" + name;
}

}  // namespace fermiqc::testing
