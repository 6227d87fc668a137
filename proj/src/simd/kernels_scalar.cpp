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

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "fermiqc/simd/kernels.hpp"

namespace fermiqc::simd {

namespace {

inline double sign_of(std::uint64_t index, std::uint64_t z_mask) {
  return (std::popcount(index & z_mask) & 1) ? -1.0 : 1.0;
}

// -i * i^n_y
inline cplx rotation_factor(unsigned n_y) {
  static constexpr cplx kTable[4] = {
      {0.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}};
  return kTable[n_y % 4];
}

cplx dot(const cplx *a, const cplx *b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(cplx alpha, cplx *x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double norm_sq(const cplx *x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void pauli_rotate(cplx *amps, unsigned n_qubits, std::uint64_t x_mask,
                  std::uint64_t z_mask, unsigned n_y, double cos_half,
                  double sin_half) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const cplx sg = sin_half * rotation_factor(n_y);
  if (x_mask == 0) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      amps[j] *= cos_half + sg * sign_of(j, z_mask);
    }
    return;
  }
  const std::uint64_t hbit = std::bit_floor(x_mask);
  for (std::uint64_t base = 0; base < dim; base += 2 * hbit) {
    for (std::uint64_t j = base; j < base + hbit; ++j) {
      const std::uint64_t k = j ^ x_mask;
      const cplx a = amps[j];
      const cplx b = amps[k];
      amps[j] = cos_half * a + sg * sign_of(k, z_mask) * b;
      amps[k] = cos_half * b + sg * sign_of(j, z_mask) * a;
    }
  }
}

void csr_matvec(const CsrView &m, const cplx *x, cplx *y) {
  for (std::size_t r = 0; r < m.dim; ++r) {
    cplx acc{0.0, 0.0};
    for (std::uint64_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      acc += m.values[k] * x[m.cols[k]];
    }
    y[r] = acc;
  }
}

constexpr KernelTable kScalar{"scalar", dot,          axpy,      scale,
                              norm_sq,  pauli_rotate, csr_matvec};

}  // namespace

const KernelTable &scalar_kernels() { return kScalar; }

}  // namespace fermiqc::simd
