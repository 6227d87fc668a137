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

#include "fermiqc/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fermiqc/errors.hpp"
#include "fermiqc/simd/kernels.hpp"

namespace fermiqc {

SparseMatrix SparseMatrix::from_triplets(std::size_t dim,
                                         std::vector<Triplet> triplets,
                                         double drop) {
  if (dim > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("sparse matrix dimension too large");
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet &a, const Triplet &b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  SparseMatrix m(dim);
  m.cols_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    const auto row = triplets[i].row;
    const auto col = triplets[i].col;
    if (row >= dim || col >= dim) {
      throw DimensionError("triplet outside matrix dimension");
    }
    Complex sum{0.0, 0.0};
    while (i < triplets.size() && triplets[i].row == row &&
           triplets[i].col == col) {
      sum += triplets[i].value;
      ++i;
    }
    if (std::abs(sum) > drop) {
      m.cols_.push_back(static_cast<std::uint32_t>(col));
      m.values_.push_back(sum);
      ++m.row_ptr_[row + 1];
    }
  }
  for (std::size_t r = 0; r < dim; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

Complex SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) throw DimensionError("index out of range");
  const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto last =
      cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(first, last, col);
  if (it != last && *it == col) return values_[it - cols_.begin()];
  return {0.0, 0.0};
}

void SparseMatrix::multiply(std::span<const Complex> x,
                            std::span<Complex> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DimensionError("matrix-vector dimension mismatch");
  }
  const simd::CsrView view{dim_, row_ptr_.data(), cols_.data(),
                           values_.data()};
  simd::active_kernels().csr_matvec(view, x.data(), y.data());
}

double SparseMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (auto k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const Complex mirror = at(cols_[k], r);
      worst = std::max(worst, std::abs(values_[k] - std::conj(mirror)));
    }
  }
  return worst;
}

Eigen::MatrixXcd SparseMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (auto k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      d(static_cast<Eigen::Index>(r), cols_[k]) = values_[k];
    }
  }
  return d;
}

}  // namespace fermiqc
