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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fermiqc/fermion.hpp"
#include "fermiqc/qubit_operator.hpp"

namespace fermiqc {

enum class MappingScheme { JordanWigner, BravyiKitaev };

std::string_view to_string(MappingScheme m);
/// Accepts "jw" / "bk" and the full names.
MappingScheme parse_mapping(std::string_view text);

/// Square matrix over GF(2), stored as packed bit rows.
class TransformMatrix {
 public:
  explicit TransformMatrix(std::size_t n = 0);

  std::size_t size() const { return n_; }
  bool operator()(std::size_t row, std::size_t col) const {
    return (rows_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }
  void set(std::size_t row, std::size_t col, bool v);

  /// M * v over GF(2).
  std::vector<std::uint8_t> apply(std::span<const std::uint8_t> v) const;
  /// Inverse over GF(2); throws std::domain_error when singular.
  TransformMatrix inverse() const;

  std::span<const std::uint64_t> row_words(std::size_t row) const {
    return {rows_.data() + row * words_, words_};
  }

  friend bool operator==(const TransformMatrix &,
                         const TransformMatrix &) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/**
 * Bravyi-Kitaev occupation-to-qubit matrix on n orbitals, built by binary
 * doubling: B(1) = [1], B(2m) = [[B(m), 0], [L, B(m)]] where L is zero except
 * for an all-ones last row. Non-power-of-two n keeps the top-left n x n
 * block of the next power of two.
 */
TransformMatrix bk_matrix(std::size_t n);

struct BKIndexSets {
  std::vector<std::size_t> update;     // U(i): qubits above i that store o_i
  std::vector<std::size_t> parity;     // P(i): qubits whose sum is o_0+..+o_{i-1}
  std::vector<std::size_t> flip;       // F(i): qubits below i stored in q_i
  std::vector<std::size_t> remainder;  // R(i) = P(i) \ F(i)
};

BKIndexSets bk_index_sets(std::size_t i, std::size_t n);

/// All n index sets at once (one matrix inversion).
std::vector<BKIndexSets> bk_index_sets(std::size_t n);

/// Qubit-register basis state that represents an occupation vector.
std::vector<std::uint8_t> occupation_to_qubits(
    std::span<const std::uint8_t> occupations, MappingScheme scheme);

/// Pauli decomposition of a single a+_mode (dagger) or a_mode.
std::vector<PauliTerm> ladder_operator(std::size_t mode, bool dagger,
                                       std::size_t n_modes,
                                       MappingScheme scheme);

/// Maps every product term, expands, merges and drops small coefficients.
QubitOperator map_operator(const FermionOperator &op, MappingScheme scheme,
                           double tol = kDefaultDropTolerance);

}  // namespace fermiqc
