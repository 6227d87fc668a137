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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fermiqc {

using Complex = std::complex<double>;

struct Triplet {
  std::uint64_t row;
  std::uint64_t col;
  Complex value;
};

/// Square complex matrix in compressed-sparse-row form.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  explicit SparseMatrix(std::size_t dim) : dim_(dim), row_ptr_(dim + 1, 0) {}

  /// Duplicate (row, col) entries are summed; entries with |v| <= drop are
  /// removed after summation.
  static SparseMatrix from_triplets(std::size_t dim,
                                    std::vector<Triplet> triplets,
                                    double drop = 0.0);

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return values_.size(); }
  std::span<const std::uint64_t> row_ptr() const { return row_ptr_; }
  std::span<const std::uint32_t> cols() const { return cols_; }
  std::span<const Complex> values() const { return values_; }

  Complex at(std::size_t row, std::size_t col) const;

  /// y = A x
  void multiply(std::span<const Complex> x, std::span<Complex> y) const;

  /// max |A_ij - conj(A_ji)|
  double hermitian_defect() const;

  Eigen::MatrixXcd to_dense() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<Complex> values_;
};

}  // namespace fermiqc
