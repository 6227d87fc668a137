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

#include "fermiqc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fermiqc/errors.hpp"
#include "fermiqc/simd/kernels.hpp"

namespace fermiqc {

StateVector::StateVector(std::size_t n) : n_qubits(n) {
  if (n >= 40) throw ResourceError("state vector too large");
  amplitudes.assign(std::size_t{1} << n, Complex{0.0, 0.0});
  amplitudes[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dim()) throw DimensionError("basis index out of range");
  s.amplitudes[0] = 0.0;
  s.amplitudes[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  return std::sqrt(
      simd::active_kernels().norm_sq(amplitudes.data(), amplitudes.size()));
}

Complex inner(const StateVector &a, const StateVector &b) {
  if (a.dim() != b.dim()) throw DimensionError("state dimensions differ");
  return simd::active_kernels().dot(a.amplitudes.data(), b.amplitudes.data(),
                                    a.dim());
}

namespace {

std::uint64_t low_word(std::span<const std::uint64_t> w) {
  return w.empty() ? 0 : w[0];
}

// i^k for k mod 4.
Complex i_pow(unsigned k) {
  switch (k & 3U) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

SparseMatrix operator_matrix(const QubitOperator &op, std::size_t limit) {
  const std::size_t n = op.n_qubits();
  if (n > limit || n > 30) {
    throw ResourceError("operator_matrix: " + std::to_string(n) +
                        " qubits exceeds the limit of " +
                        std::to_string(limit));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  // Terms sharing an x-plane fill the same sparsity pattern, so each group
  // contributes one entry per row. P|j> = i^{n_y} (-1)^{popcount(j & z)} |j ^ x>
  struct Part {
    std::uint64_t z;
    Complex coeff;
  };
  std::map<std::uint64_t, std::vector<Part>> groups;
  for (const PauliTerm &t : op.terms()) {
    const std::uint64_t x = low_word(t.string.x_words());
    const std::uint64_t z = low_word(t.string.z_words());
    groups[x].push_back(
        {z, t.coefficient * i_pow(static_cast<unsigned>(std::popcount(x & z)))});
  }
  if (op.constant() != Complex{0.0, 0.0}) {
    groups[0].push_back({0, op.constant()});
  }
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(dim) * groups.size());
  for (const auto &[x, parts] : groups) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      Complex v{0.0, 0.0};
      for (const Part &p : parts) {
        v += (std::popcount(j & p.z) & 1) ? -p.coeff : p.coeff;
      }
      trips.push_back({j ^ x, j, v});
    }
  }
  return SparseMatrix::from_triplets(static_cast<std::size_t>(dim),
                                     std::move(trips), 1e-14);
}

namespace {

constexpr std::size_t kDenseLimit = 512;
constexpr std::size_t kKrylov = 80;
constexpr std::size_t kMaxRestarts = 400;

Eigenpair dense_ground(const SparseMatrix &m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.to_dense());
  if (es.info() != Eigen::Success) {
    throw NumericError("dense eigensolver failed", 0);
  }
  Eigenpair out;
  out.energy = es.eigenvalues()(0);
  out.state.n_qubits = static_cast<std::size_t>(std::countr_zero(m.dim()));
  out.state.amplitudes.resize(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out.state.amplitudes[i] = es.eigenvectors()(static_cast<Eigen::Index>(i), 0);
  }
  return out;
}

double residual_norm(const SparseMatrix &m, const std::vector<Complex> &v,
                     double e, std::vector<Complex> &work) {
  m.multiply(v, work);
  simd::active_kernels().axpy(-e, v.data(), work.data(), v.size());
  return std::sqrt(simd::active_kernels().norm_sq(work.data(), work.size()));
}

}  // namespace

Eigenpair ground_state(const SparseMatrix &m, double tol) {
  if (m.dim() == 0) throw DimensionError("empty matrix");
  if (m.hermitian_defect() > 1e-10) {
    throw std::invalid_argument("ground_state: matrix is not Hermitian");
  }
  const auto &k = simd::active_kernels();
  const std::size_t dim = m.dim();
  std::vector<Complex> work(dim);

  if (dim <= kDenseLimit) {
    Eigenpair out = dense_ground(m);
    out.residual = residual_norm(m, out.state.amplitudes, out.energy, work);
    if (!(out.residual < tol)) {
      throw NumericError("dense ground state residual above tolerance", 0);
    }
    return out;
  }

  // Deterministic random start.
  std::vector<Complex> v(dim);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  for (auto &a : v) a = {gauss(rng), gauss(rng)};
  k.scale(1.0 / std::sqrt(k.norm_sq(v.data(), dim)), v.data(), dim);

  const std::size_t m_max = std::min(kKrylov, dim);
  std::vector<std::vector<Complex>> basis(m_max + 1,
                                          std::vector<Complex>(dim));
  double energy = 0.0;
  double residual = 0.0;
  std::size_t total_iters = 0;
  for (std::size_t restart = 0; restart < kMaxRestarts; ++restart) {
    basis[0] = v;
    std::vector<double> alpha, beta;
    std::size_t used = 0;
    for (std::size_t j = 0; j < m_max; ++j) {
      ++total_iters;
      used = j + 1;
      auto &w = basis[j + 1];
      m.multiply(basis[j], w);
      const double a = k.dot(basis[j].data(), w.data(), dim).real();
      alpha.push_back(a);
      // Full reorthogonalisation, twice for stability.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i <= j; ++i) {
          const Complex c = k.dot(basis[i].data(), w.data(), dim);
          k.axpy(-c, basis[i].data(), w.data(), dim);
        }
      }
      const double b = std::sqrt(k.norm_sq(w.data(), dim));
      if (j + 1 == m_max || b < 1e-12) break;
      beta.push_back(b);
      k.scale(1.0 / b, w.data(), dim);
    }
    Eigen::VectorXd diag(static_cast<Eigen::Index>(used));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(used > 0 ? used - 1 : 0));
    for (std::size_t i = 0; i < used; ++i) diag(static_cast<Eigen::Index>(i)) = alpha[i];
    for (std::size_t i = 0; i + 1 < used; ++i) sub(static_cast<Eigen::Index>(i)) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub);
    energy = tri.eigenvalues()(0);
    std::fill(v.begin(), v.end(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < used; ++i) {
      k.axpy(tri.eigenvectors()(static_cast<Eigen::Index>(i), 0),
             basis[i].data(), v.data(), dim);
    }
    k.scale(1.0 / std::sqrt(k.norm_sq(v.data(), dim)), v.data(), dim);
    // Rayleigh quotient of the normalised Ritz vector.
    m.multiply(v, work);
    energy = k.dot(v.data(), work.data(), dim).real();
    residual = residual_norm(m, v, energy, work);
    if (residual < tol) {
      Eigenpair out;
      out.energy = energy;
      out.state.n_qubits = static_cast<std::size_t>(std::countr_zero(dim));
      out.state.amplitudes = std::move(v);
      out.residual = residual;
      out.iterations = total_iters;
      return out;
    }
  }
  throw NumericError("Lanczos did not converge (residual " +
                         std::to_string(residual) + ")",
                     total_iters);
}

StateVector apply_trotterized(const TrotterPlan &plan, StateVector state) {
  if (state.n_qubits != plan.n_qubits ||
      state.dim() != (std::size_t{1} << plan.n_qubits)) {
    throw DimensionError("state register does not match the plan");
  }
  const auto &k = simd::active_kernels();
  struct Rot {
    std::uint64_t x, z;
    unsigned ny;
    double c, s;
  };
  std::vector<Rot> rots;
  rots.reserve(plan.ordered_terms.size());
  for (std::size_t j = 0; j < plan.ordered_terms.size(); ++j) {
    const auto &p = plan.ordered_terms[j].string;
    const std::uint64_t x = low_word(p.x_words());
    const std::uint64_t z = low_word(p.z_words());
    const double half = 0.5 * plan.angle(j);
    rots.push_back({x, z, static_cast<unsigned>(std::popcount(x & z)),
                    std::cos(half), std::sin(half)});
  }
  const auto n = static_cast<unsigned>(plan.n_qubits);
  for (std::size_t s = 0; s < plan.n_steps; ++s) {
    for (const Rot &r : rots) {
      k.pauli_rotate(state.amplitudes.data(), n, r.x, r.z, r.ny, r.c, r.s);
    }
  }
  return state;
}

TrotterErrorReport trotter_error(const TrotterPlan &plan, double exact_energy,
                                 const StateVector &ground) {
  const StateVector evolved = apply_trotterized(plan, ground);
  const Complex ov = inner(ground, evolved);
  TrotterErrorReport r;
  r.exact_energy = exact_energy;
  r.estimated_energy = -std::arg(ov) / plan.time + plan.scalar_offset;
  r.error = std::abs(r.estimated_energy - exact_energy);
  r.overlap = std::abs(ov);
  r.low_overlap = r.overlap < 0.5;
  r.n_steps = plan.n_steps;
  r.time = plan.time;
  return r;
}

namespace {

using C = Complex;
const double kS = 1.0 / std::numbers::sqrt2;

// 2x2 matrix rows {{a, b}, {c, d}} applied to the pair (lo, hi).
struct M2 {
  C a, b, c, d;
};

M2 single_matrix(const Gate &g) {
  switch (g.kind) {
    case GateKind::H: return {kS, kS, kS, -kS};
    case GateKind::YB: return {kS, C(0, -kS), C(0, -kS), kS};
    case GateKind::YBD: return {kS, C(0, kS), C(0, kS), kS};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::RZ:
      return {std::polar(1.0, -0.5 * g.angle), 0.0, 0.0,
              std::polar(1.0, 0.5 * g.angle)};
    default: break;
  }
  throw std::logic_error("not a single-qubit gate");
}

void apply_gate(C *amps, std::size_t dim, const Gate &g) {
  const std::uint64_t b0 = std::uint64_t{1} << g.q0;
  const std::uint64_t b1 = std::uint64_t{1} << g.q1;
  switch (g.kind) {
    case GateKind::CNOT:
      for (std::uint64_t j = 0; j < dim; ++j) {
        if ((j & b0) && !(j & b1)) std::swap(amps[j], amps[j | b1]);
      }
      return;
    case GateKind::CZ:
      for (std::uint64_t j = 0; j < dim; ++j) {
        if ((j & b0) && (j & b1)) amps[j] = -amps[j];
      }
      return;
    default: break;
  }
  const M2 u = single_matrix(g);
  for (std::uint64_t j = 0; j < dim; ++j) {
    if (j & b0) continue;
    const C lo = amps[j], hi = amps[j | b0];
    amps[j] = u.a * lo + u.b * hi;
    amps[j | b0] = u.c * lo + u.d * hi;
  }
}

}  // namespace

StateVector apply_circuit(const Circuit &c, StateVector state) {
  validate(c);
  if (state.n_qubits != c.width()) {
    throw DimensionError("state width does not match the circuit");
  }
  for (const Gate &g : c.gates) apply_gate(state.amplitudes.data(), state.dim(), g);
  return state;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &c) {
  validate(c);
  const std::size_t w = c.width();
  if (w > kCircuitUnitaryQubitLimit) {
    throw ResourceError("circuit_unitary: " + std::to_string(w) +
                        " qubits exceeds the limit of 10");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << w);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    C *amps = u.col(col).data();
    for (const Gate &g : c.gates) apply_gate(amps, static_cast<std::size_t>(dim), g);
  }
  return u;
}

}  // namespace fermiqc
