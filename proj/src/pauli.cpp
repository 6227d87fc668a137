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

#include "fermiqc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fermiqc/errors.hpp"

namespace fermiqc {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliString &a, const PauliString &b) {
  if (a.size() != b.size()) {
    throw DimensionError("Pauli strings of different lengths: " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

constexpr Complex kPhases[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

char axis_char(PauliAxis a) {
  static constexpr char kChars[4] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(a)];
}

PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli axis: '") + c +
                                  "'");
  }
}

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), words_(words_for(n_qubits)), bits_(2 * words_, 0) {}

PauliString::PauliString(std::size_t n_qubits,
                         std::span<const PauliAxis> axes)
    : PauliString(n_qubits) {
  if (axes.size() != n_qubits) {
    throw DimensionError("axis list length " + std::to_string(axes.size()) +
                         " does not match register size " +
                         std::to_string(n_qubits));
  }
  for (std::size_t q = 0; q < n_qubits; ++q) set(q, axes[q]);
}

PauliString::PauliString(
    std::size_t n_qubits,
    std::initializer_list<std::pair<std::size_t, PauliAxis>> ops)
    : PauliString(n_qubits, std::span(ops.begin(), ops.size())) {}

PauliString::PauliString(
    std::size_t n_qubits,
    std::span<const std::pair<std::size_t, PauliAxis>> ops)
    : PauliString(n_qubits) {
  for (const auto &[q, a] : ops) {
    if (q >= n_qubits) {
      throw DimensionError("qubit " + std::to_string(q) +
                           " outside register of size " +
                           std::to_string(n_qubits));
    }
    set(q, a);
  }
}

void PauliString::set(std::size_t qubit, PauliAxis axis) {
  const std::size_t w = qubit / 64;
  const std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
  const auto v = static_cast<unsigned>(axis);
  const bool x = v == 1 || v == 2;
  const bool z = v == 2 || v == 3;
  bits_[w] = x ? (bits_[w] | bit) : (bits_[w] & ~bit);
  bits_[words_ + w] = z ? (bits_[words_ + w] | bit) : (bits_[words_ + w] & ~bit);
}

PauliAxis PauliString::operator[](std::size_t qubit) const {
  if (qubit >= n_) {
    throw DimensionError("qubit " + std::to_string(qubit) +
                         " outside register of size " + std::to_string(n_));
  }
  const std::size_t w = qubit / 64;
  const unsigned s = qubit % 64;
  const unsigned x = (bits_[w] >> s) & 1U;
  const unsigned z = (bits_[words_ + w] >> s) & 1U;
  // (x, z): (1,0)=X, (1,1)=Y, (0,1)=Z
  static constexpr PauliAxis kTable[2][2] = {{PauliAxis::I, PauliAxis::Z},
                                             {PauliAxis::X, PauliAxis::Y}};
  return kTable[x][z];
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_; ++i) {
    w += std::popcount(bits_[i] | bits_[words_ + i]);
  }
  return w;
}

bool PauliString::is_identity() const {
  for (auto b : bits_) {
    if (b) return false;
  }
  return true;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t m = bits_[i] | bits_[words_ + i];
    while (m) {
      out.push_back(i * 64 + std::countr_zero(m));
      m &= m - 1;
    }
  }
  return out;
}

std::vector<PauliAxis> PauliString::axes() const {
  std::vector<PauliAxis> out(n_);
  for (std::size_t q = 0; q < n_; ++q) out[q] = (*this)[q];
  return out;
}

std::string PauliString::to_string() const {
  std::string out;
  for (std::size_t q : support()) {
    if (!out.empty()) out += ' ';
    out += axis_char((*this)[q]);
    out += std::to_string(q);
  }
  return out;
}

std::size_t PauliString::hash() const {
  // splitmix64 finalizer folded over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (auto b : bits_) {
    std::uint64_t z = h + b + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

int multiply_phase_exponent(const PauliString &a, const PauliString &b) {
  check_same_size(a, b);
  const std::size_t W = a.word_count();
  auto ax = a.x_words(), az = a.z_words();
  auto bx = b.x_words(), bz = b.z_words();
  int exponent = 0;
  for (std::size_t i = 0; i < W; ++i) {
    const std::uint64_t aX = ax[i] & ~az[i], aY = ax[i] & az[i],
                        aZ = ~ax[i] & az[i];
    const std::uint64_t bX = bx[i] & ~bz[i], bY = bx[i] & bz[i],
                        bZ = ~bx[i] & bz[i];
    // XY = iZ, YZ = iX, ZX = iY and the reversed pairs carry -i.
    const std::uint64_t plus = (aX & bY) | (aY & bZ) | (aZ & bX);
    const std::uint64_t minus = (aY & bX) | (aZ & bY) | (aX & bZ);
    exponent += std::popcount(plus) - std::popcount(minus);
  }
  return ((exponent % 4) + 4) % 4;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
  const int k = multiply_phase_exponent(a, b);
  PauliString out(a.size());
  for (std::size_t i = 0; i < out.bits_.size(); ++i) {
    out.bits_[i] = a.bits_[i] ^ b.bits_[i];
  }
  return {kPhases[k], std::move(out)};
}

bool commutes(const PauliString &a, const PauliString &b) {
  check_same_size(a, b);
  auto ax = a.x_words(), az = a.z_words();
  auto bx = b.x_words(), bz = b.z_words();
  int parity = 0;
  for (std::size_t i = 0; i < a.word_count(); ++i) {
    parity ^= std::popcount((ax[i] & bz[i]) ^ (az[i] & bx[i])) & 1;
  }
  return parity == 0;
}

std::vector<std::uint8_t> lex_key(const PauliString &s) {
  std::vector<std::uint8_t> key(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) {
    key[q] = static_cast<std::uint8_t>(s[q]);
  }
  return key;
}

bool lex_less(const PauliString &a, const PauliString &b) {
  const std::size_t n = std::min(a.size(), b.size());
  // Find the lowest qubit where the strings differ, word by word.
  const std::size_t W = std::min(a.word_count(), b.word_count());
  auto ax = a.x_words(), az = a.z_words();
  auto bx = b.x_words(), bz = b.z_words();
  for (std::size_t i = 0; i < W; ++i) {
    const std::uint64_t diff = (ax[i] ^ bx[i]) | (az[i] ^ bz[i]);
    if (diff) {
      const std::size_t q = i * 64 + std::countr_zero(diff);
      if (q >= n) break;
      return static_cast<int>(a[q]) < static_cast<int>(b[q]);
    }
  }
  return a.size() < b.size();
}

}  // namespace fermiqc
