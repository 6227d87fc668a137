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

#include <immintrin.h>

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>

#include "fermiqc/simd/kernels.hpp"

// Compiled with -mavx2 -mfma; only reached after a CPUID check.

namespace fermiqc::simd {

namespace {

// [re0, im0, re1, im1] complex product
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d load2(const cplx *p) {
  return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d swap_halves(__m256d v) {
  return _mm256_permute2f128_pd(v, v, 0x01);
}

inline __m256d pack(cplx lo, cplx hi) {
  return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double sign_of(std::uint64_t index, std::uint64_t z_mask) {
  return (std::popcount(index & z_mask) & 1) ? -1.0 : 1.0;
}

inline cplx rotation_factor(unsigned n_y) {
  static constexpr cplx kTable[4] = {
      {0.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}};
  return kTable[n_y % 4];
}

cplx dot(const cplx *a, const cplx *b, std::size_t n) {
  __m256d p = _mm256_setzero_pd();
  __m256d q = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = load2(a + i);
    const __m256d vb = load2(b + i);
    p = _mm256_fmadd_pd(va, vb, p);
    q = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0x5), q);
  }
  alignas(32) double qs[4];
  _mm256_store_pd(qs, q);
  double re = hsum(p);
  double im = (qs[0] - qs[1]) + (qs[2] - qs[3]);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
  const __m256d va = pack(alpha, alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul(load2(x + i), va)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(cplx alpha, cplx *x, std::size_t n) {
  const __m256d va = pack(alpha, alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(x + i, cmul(load2(x + i), va));
  for (; i < n; ++i) x[i] *= alpha;
}

double norm_sq(const cplx *x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::norm(x[i]);
  return s;
}

void pauli_rotate(cplx *amps, unsigned n_qubits, std::uint64_t x_mask,
                  std::uint64_t z_mask, unsigned n_y, double cos_half,
                  double sin_half) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const cplx sg = sin_half * rotation_factor(n_y);
  const __m256d vc = _mm256_set1_pd(cos_half);
  if (dim < 4) {
    scalar_kernels().pauli_rotate(amps, n_qubits, x_mask, z_mask, n_y,
                                  cos_half, sin_half);
    return;
  }
  if (x_mask == 0) {
    for (std::uint64_t j = 0; j < dim; j += 2) {
      const __m256d m = pack(cos_half + sg * sign_of(j, z_mask),
                             cos_half + sg * sign_of(j + 1, z_mask));
      store2(amps + j, cmul(load2(amps + j), m));
    }
    return;
  }
  if (x_mask == 1) {
    for (std::uint64_t j = 0; j < dim; j += 2) {
      const __m256d a = load2(amps + j);
      const __m256d m =
          pack(sg * sign_of(j + 1, z_mask), sg * sign_of(j, z_mask));
      store2(amps + j,
             _mm256_add_pd(_mm256_mul_pd(vc, a), cmul(m, swap_halves(a))));
    }
    return;
  }
  const std::uint64_t hbit = std::bit_floor(x_mask);
  const bool flip_low = x_mask & 1;
  for (std::uint64_t base = 0; base < dim; base += 2 * hbit) {
    for (std::uint64_t j = base; j < base + hbit; j += 2) {
      const std::uint64_t k0 = j ^ x_mask;        // partner of j
      const std::uint64_t k1 = (j + 1) ^ x_mask;  // partner of j + 1
      const std::uint64_t kload = flip_low ? k1 : k0;
      const __m256d a = load2(amps + j);
      __m256d b = load2(amps + kload);
      if (flip_low) b = swap_halves(b);
      const __m256d ma =
          pack(sg * sign_of(k0, z_mask), sg * sign_of(k1, z_mask));
      const __m256d mb =
          pack(sg * sign_of(j, z_mask), sg * sign_of(j + 1, z_mask));
      const __m256d na = _mm256_add_pd(_mm256_mul_pd(vc, a), cmul(ma, b));
      __m256d nb = _mm256_add_pd(_mm256_mul_pd(vc, b), cmul(mb, a));
      if (flip_low) nb = swap_halves(nb);
      store2(amps + j, na);
      store2(amps + kload, nb);
    }
  }
}

void csr_matvec(const CsrView &m, const cplx *x, cplx *y) {
  for (std::size_t r = 0; r < m.dim; ++r) {
    std::uint64_t k = m.row_ptr[r];
    const std::uint64_t end = m.row_ptr[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 2 <= end; k += 2) {
      const __m256d xs = _mm256_set_m128d(
          _mm_loadu_pd(reinterpret_cast<const double *>(x + m.cols[k + 1])),
          _mm_loadu_pd(reinterpret_cast<const double *>(x + m.cols[k])));
      acc = _mm256_add_pd(acc, cmul(load2(m.values + k), xs));
    }
    const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(acc),
                                      _mm256_extractf128_pd(acc, 1));
    cplx sum{_mm_cvtsd_f64(folded),
             _mm_cvtsd_f64(_mm_unpackhi_pd(folded, folded))};
    for (; k < end; ++k) sum += m.values[k] * x[m.cols[k]];
    y[r] = sum;
  }
}

constexpr KernelTable kAvx2{"avx2", dot,          axpy,      scale,
                            norm_sq, pauli_rotate, csr_matvec};

}  // namespace

const KernelTable &avx2_kernel_table() { return kAvx2; }

}  // namespace fermiqc::simd
