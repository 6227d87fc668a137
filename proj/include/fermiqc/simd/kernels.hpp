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

// Inner loops of the state-vector and sparse-matrix numerics. Every kernel
// has a portable scalar reference and, on x86-64, an AVX2/FMA variant. The
// active table is chosen once at startup from CPUID; setting the environment
// variable FERMIQC_KERNELS=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <cstdint>

namespace fermiqc::simd {

using cplx = std::complex<double>;

struct CsrView {
  std::size_t dim;
  const std::uint64_t *row_ptr;
  const std::uint32_t *cols;
  const cplx *values;
};

struct KernelTable {
  const char *name;
  /// sum conj(a[i]) * b[i]
  cplx (*dot)(const cplx *a, const cplx *b, std::size_t n);
  /// y += alpha * x
  void (*axpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
  /// x *= alpha
  void (*scale)(cplx alpha, cplx *x, std::size_t n);
  double (*norm_sq)(const cplx *x, std::size_t n);
  /// amps <- (cos_half * I - i sin_half * P) amps for the Pauli string P with
  /// x-plane `x_mask`, z-plane `z_mask` and `n_y` Y factors, over
  /// 2^n_qubits amplitudes (qubit 0 is the least significant index bit).
  void (*pauli_rotate)(cplx *amps, unsigned n_qubits, std::uint64_t x_mask,
                       std::uint64_t z_mask, unsigned n_y, double cos_half,
                       double sin_half);
  /// y = A x
  void (*csr_matvec)(const CsrView &a, const cplx *x, cplx *y);
};

const KernelTable &scalar_kernels();
/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable *avx2_kernels();
/// The table selected for this process.
const KernelTable &active_kernels();

}  // namespace fermiqc::simd
