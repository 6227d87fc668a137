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

#include <cstdlib>
#include <cstring>

#include "fermiqc/simd/kernels.hpp"

namespace fermiqc::simd {

#if defined(FERMIQC_HAVE_AVX2)
const KernelTable &avx2_kernel_table();
#endif

const KernelTable *avx2_kernels() {
#if defined(FERMIQC_HAVE_AVX2)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable &active_kernels() {
  static const KernelTable &table = [&]() -> const KernelTable & {
    const char *forced = std::getenv("FERMIQC_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return scalar_kernels();
    if (const KernelTable *t = avx2_kernels()) return *t;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace fermiqc::simd
