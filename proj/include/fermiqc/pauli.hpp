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
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fermiqc {

using Complex = std::complex<double>;

/** Single-qubit Pauli operator. The numeric value is its base-4 digit. */
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

/**
 * Tensor product of single-qubit Paulis over a fixed register of n qubits.
 *
 * Stored in symplectic form (one x bit and one z bit per qubit, packed in
 * 64-bit words): I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). Values are immutable
 * once built.
 */
class PauliString {
 public:
  PauliString() = default;
  /// Identity on `n_qubits` qubits.
  explicit PauliString(std::size_t n_qubits);
  PauliString(std::size_t n_qubits, std::span<const PauliAxis> axes);
  /// Sparse form: listed (qubit, axis) pairs, identity elsewhere.
  PauliString(std::size_t n_qubits,
              std::initializer_list<std::pair<std::size_t, PauliAxis>> ops);
  PauliString(std::size_t n_qubits,
              std::span<const std::pair<std::size_t, PauliAxis>> ops);

  std::size_t size() const { return n_; }
  PauliAxis operator[](std::size_t qubit) const;
  std::size_t weight() const;
  bool is_identity() const;

  /// Indices of the non-identity qubits, ascending.
  std::vector<std::size_t> support() const;
  std::vector<PauliAxis> axes() const;

  std::size_t word_count() const { return words_; }
  std::span<const std::uint64_t> x_words() const {
    return {bits_.data(), words_};
  }
  std::span<const std::uint64_t> z_words() const {
    return {bits_.data() + words_, words_};
  }
  /// Low 64 qubits of the x / z planes; the simulator uses these as masks.
  std::uint64_t x_mask() const { return words_ ? bits_[0] : 0; }
  std::uint64_t z_mask() const { return words_ ? bits_[words_] : 0; }

  /// e.g. "X0 Z1 Z3 X4"; the identity renders as "".
  std::string to_string() const;

  friend bool operator==(const PauliString &a, const PauliString &b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  std::size_t hash() const;

 private:
  friend struct PauliProduct multiply(const PauliString &a,
                                      const PauliString &b);
  void set(std::size_t qubit, PauliAxis axis);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;  // x plane then z plane
};

struct PauliProduct {
  Complex phase;  // one of 1, -1, i, -i
  PauliString product;
};

/// a*b as a phase times a single Pauli string.
PauliProduct multiply(const PauliString &a, const PauliString &b);

/// Exponent k of the phase i^k of a*b, in [0, 4).
int multiply_phase_exponent(const PauliString &a, const PauliString &b);

bool commutes(const PauliString &a, const PauliString &b);

/// Base-4 digits read from qubit 0 upward.
std::vector<std::uint8_t> lex_key(const PauliString &s);

/// Strict order consistent with comparing lex_key sequences.
bool lex_less(const PauliString &a, const PauliString &b);

struct PauliTerm {
  Complex coefficient{1.0, 0.0};
  PauliString string;

  friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

}  // namespace fermiqc

template <>
struct std::hash<fermiqc::PauliString> {
  std::size_t operator()(const fermiqc::PauliString &s) const noexcept {
    return s.hash();
  }
};
