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

#include "fermiqc/mappings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "fermiqc/errors.hpp"

namespace fermiqc {

std::string_view to_string(MappingScheme m) {
  return m == MappingScheme::JordanWigner ? "jw" : "bk";
}

MappingScheme parse_mapping(std::string_view text) {
  if (text == "jw" || text == "JW" || text == "jordan-wigner" ||
      text == "JordanWigner") {
    return MappingScheme::JordanWigner;
  }
  if (text == "bk" || text == "BK" || text == "bravyi-kitaev" ||
      text == "BravyiKitaev") {
    return MappingScheme::BravyiKitaev;
  }
  throw std::invalid_argument("unknown mapping '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// GF(2) matrices

TransformMatrix::TransformMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void TransformMatrix::set(std::size_t row, std::size_t col, bool v) {
  auto &w = rows_[row * words_ + col / 64];
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  w = v ? (w | bit) : (w & ~bit);
}

std::vector<std::uint8_t> TransformMatrix::apply(
    std::span<const std::uint8_t> v) const {
  if (v.size() != n_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " for a " + std::to_string(n_) + "x" +
                         std::to_string(n_) + " matrix");
  }
  std::vector<std::uint8_t> out(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) {
    unsigned acc = 0;
    for (std::size_t c = 0; c < n_; ++c) acc ^= ((*this)(r, c) & (v[c] & 1U));
    out[r] = static_cast<std::uint8_t>(acc);
  }
  return out;
}

TransformMatrix TransformMatrix::inverse() const {
  // Gauss-Jordan on [A | I] with packed rows.
  TransformMatrix a = *this;
  TransformMatrix inv(n_);
  for (std::size_t i = 0; i < n_; ++i) inv.set(i, i, true);
  auto xor_row = [&](TransformMatrix &m, std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) {
      m.rows_[dst * words_ + w] ^= m.rows_[src * words_ + w];
    }
  };
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && !a(pivot, col)) ++pivot;
    if (pivot == n_) throw std::domain_error("matrix is singular over GF(2)");
    if (pivot != col) {
      for (std::size_t w = 0; w < words_; ++w) {
        std::swap(a.rows_[pivot * words_ + w], a.rows_[col * words_ + w]);
        std::swap(inv.rows_[pivot * words_ + w], inv.rows_[col * words_ + w]);
      }
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != col && a(r, col)) {
        xor_row(a, r, col);
        xor_row(inv, r, col);
      }
    }
  }
  return inv;
}

namespace {

void fill_bk(TransformMatrix &m, std::size_t offset, std::size_t size) {
  const std::size_t n = m.size();
  if (offset >= n) return;
  if (size == 1) {
    m.set(offset, offset, true);
    return;
  }
  const std::size_t half = size / 2;
  fill_bk(m, offset, half);
  fill_bk(m, offset + half, half);
  const std::size_t last = offset + size - 1;
  if (last < n) {
    for (std::size_t c = offset; c < offset + half; ++c) m.set(last, c, true);
  }
}

}  // namespace

TransformMatrix bk_matrix(std::size_t n) {
  TransformMatrix m(n);
  if (n > 0) fill_bk(m, 0, std::bit_ceil(n));
  return m;
}

std::vector<BKIndexSets> bk_index_sets(std::size_t n) {
  const TransformMatrix b = bk_matrix(n);
  const TransformMatrix inv = b.inverse();
  std::vector<BKIndexSets> sets(n);
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> prefix(words, 0);  // XOR of inverse rows < i
  for (std::size_t i = 0; i < n; ++i) {
    auto &s = sets[i];
    for (std::size_t k = i + 1; k < n; ++k) {
      if (b(k, i)) s.update.push_back(k);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (inv(i, j)) s.flip.push_back(j);
    }
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t m = prefix[w];
      while (m) {
        s.parity.push_back(w * 64 + std::countr_zero(m));
        m &= m - 1;
      }
    }
    std::set_difference(s.parity.begin(), s.parity.end(), s.flip.begin(),
                        s.flip.end(), std::back_inserter(s.remainder));
    const auto row = inv.row_words(i);
    for (std::size_t w = 0; w < words; ++w) prefix[w] ^= row[w];
  }
  return sets;
}

BKIndexSets bk_index_sets(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw DimensionError("orbital " + std::to_string(i) + " outside " +
                         std::to_string(n) + " orbitals");
  }
  return bk_index_sets(n)[i];
}

std::vector<std::uint8_t> occupation_to_qubits(
    std::span<const std::uint8_t> occupations, MappingScheme scheme) {
  if (scheme == MappingScheme::JordanWigner) {
    return {occupations.begin(), occupations.end()};
  }
  return bk_matrix(occupations.size()).apply(occupations);
}

// ---------------------------------------------------------------------------
// Operator mapping

namespace {

using OpList = std::vector<std::pair<std::size_t, PauliAxis>>;

std::vector<PauliTerm> ladder_from_sets(bool dagger, std::size_t n,
                                        const OpList &x_part,
                                        const OpList &y_part) {
  // a+ = (X-part - i Y-part) / 2, a = (X-part + i Y-part) / 2
  const Complex half{0.5, 0.0};
  const Complex ihalf{0.0, dagger ? -0.5 : 0.5};
  return {{half, PauliString(n, x_part)}, {ihalf, PauliString(n, y_part)}};
}

std::vector<std::vector<PauliTerm>> ladder_table(std::size_t n,
                                                 MappingScheme scheme,
                                                 bool dagger) {
  std::vector<std::vector<PauliTerm>> table(n);
  if (scheme == MappingScheme::JordanWigner) {
    for (std::size_t i = 0; i < n; ++i) {
      OpList xs, ys;
      for (std::size_t j = 0; j < i; ++j) {
        xs.emplace_back(j, PauliAxis::Z);
        ys.emplace_back(j, PauliAxis::Z);
      }
      xs.emplace_back(i, PauliAxis::X);
      ys.emplace_back(i, PauliAxis::Y);
      table[i] = ladder_from_sets(dagger, n, xs, ys);
    }
    return table;
  }
  const auto sets = bk_index_sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto &s = sets[i];
    OpList xs, ys;
    for (auto u : s.update) {
      xs.emplace_back(u, PauliAxis::X);
      ys.emplace_back(u, PauliAxis::X);
    }
    xs.emplace_back(i, PauliAxis::X);
    ys.emplace_back(i, PauliAxis::Y);
    for (auto p : s.parity) xs.emplace_back(p, PauliAxis::Z);
    const auto &rho = (i % 2 == 0) ? s.parity : s.remainder;
    for (auto p : rho) ys.emplace_back(p, PauliAxis::Z);
    table[i] = ladder_from_sets(dagger, n, xs, ys);
  }
  return table;
}

// Single-word symplectic Pauli for registers of at most 64 qubits.
struct SmallPauli {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  friend bool operator==(const SmallPauli &, const SmallPauli &) = default;
};

struct SmallPauliHash {
  std::size_t operator()(const SmallPauli &p) const noexcept {
    std::uint64_t h = p.x * 0x9e3779b97f4a7c15ULL ^ (p.z + 0x632be59bd9b4e019ULL);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

inline int phase_exponent(SmallPauli a, SmallPauli b) {
  const std::uint64_t aX = a.x & ~a.z, aY = a.x & a.z, aZ = ~a.x & a.z;
  const std::uint64_t bX = b.x & ~b.z, bY = b.x & b.z, bZ = ~b.x & b.z;
  const int e = std::popcount((aX & bY) | (aY & bZ) | (aZ & bX)) -
                std::popcount((aY & bX) | (aZ & bY) | (aX & bZ));
  return ((e % 4) + 4) % 4;
}

constexpr Complex kPhase[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

QubitOperator map_small(const FermionOperator &op,
                        const std::vector<std::vector<PauliTerm>> &creators,
                        const std::vector<std::vector<PauliTerm>> &annihilators,
                        double tol) {
  const std::size_t n = op.n_modes;
  struct Weighted {
    Complex c;
    SmallPauli p;
  };
  auto to_small = [](const std::vector<std::vector<PauliTerm>> &t) {
    std::vector<std::vector<Weighted>> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (const auto &term : t[i]) {
        out[i].push_back(
            {term.coefficient, {term.string.x_mask(), term.string.z_mask()}});
      }
    }
    return out;
  };
  const auto up = to_small(creators);
  const auto down = to_small(annihilators);

  std::unordered_map<SmallPauli, Complex, SmallPauliHash> acc;
  std::vector<Weighted> cur, next;
  for (const auto &term : op.terms) {
    cur.assign(1, {term.coefficient, {}});
    for (const auto &f : term.factors) {
      const auto &factor = f.dagger ? up[f.mode] : down[f.mode];
      next.clear();
      for (const auto &a : cur) {
        for (const auto &b : factor) {
          next.push_back({a.c * b.c * kPhase[phase_exponent(a.p, b.p)],
                          {a.p.x ^ b.p.x, a.p.z ^ b.p.z}});
        }
      }
      cur.swap(next);
    }
    for (const auto &w : cur) acc[w.p] += w.c;
  }

  std::vector<PauliTerm> raw;
  raw.reserve(acc.size());
  std::vector<std::pair<std::size_t, PauliAxis>> ops;
  for (const auto &[p, c] : acc) {
    if (std::abs(c) <= tol) continue;
    ops.clear();
    std::uint64_t m = p.x | p.z;
    while (m) {
      const unsigned q = std::countr_zero(m);
      const bool x = (p.x >> q) & 1U, z = (p.z >> q) & 1U;
      ops.emplace_back(q, x ? (z ? PauliAxis::Y : PauliAxis::X) : PauliAxis::Z);
      m &= m - 1;
    }
    raw.push_back({c, PauliString(n, ops)});
  }
  return QubitOperator::from_terms(n, raw, tol);
}

QubitOperator map_general(
    const FermionOperator &op,
    const std::vector<std::vector<PauliTerm>> &creators,
    const std::vector<std::vector<PauliTerm>> &annihilators, double tol) {
  const std::size_t n = op.n_modes;
  std::unordered_map<PauliString, Complex> acc;
  std::vector<PauliTerm> cur, next;
  for (const auto &term : op.terms) {
    cur.assign(1, {term.coefficient, PauliString(n)});
    for (const auto &f : term.factors) {
      const auto &factor = f.dagger ? creators[f.mode] : annihilators[f.mode];
      next.clear();
      for (const auto &a : cur) {
        for (const auto &b : factor) {
          auto prod = multiply(a.string, b.string);
          next.push_back({a.coefficient * b.coefficient * prod.phase,
                          std::move(prod.product)});
        }
      }
      cur.swap(next);
    }
    for (auto &t : cur) acc[t.string] += t.coefficient;
  }
  std::vector<PauliTerm> raw;
  raw.reserve(acc.size());
  for (auto &[s, c] : acc) raw.push_back({c, s});
  return QubitOperator::from_terms(n, raw, tol);
}

}  // namespace

std::vector<PauliTerm> ladder_operator(std::size_t mode, bool dagger,
                                       std::size_t n_modes,
                                       MappingScheme scheme) {
  if (mode >= n_modes) {
    throw DimensionError("mode " + std::to_string(mode) + " outside " +
                         std::to_string(n_modes) + " modes");
  }
  return ladder_table(n_modes, scheme, dagger)[mode];
}

QubitOperator map_operator(const FermionOperator &op, MappingScheme scheme,
                           double tol) {
  for (const auto &term : op.terms) {
    for (const auto &f : term.factors) {
      if (f.mode >= op.n_modes) {
        throw DimensionError("mode " + std::to_string(f.mode) +
                             " outside " + std::to_string(op.n_modes) +
                             " modes");
      }
    }
  }
  const auto creators = ladder_table(op.n_modes, scheme, true);
  const auto annihilators = ladder_table(op.n_modes, scheme, false);
  if (op.n_modes <= 64) return map_small(op, creators, annihilators, tol);
  return map_general(op, creators, annihilators, tol);
}

}  // namespace fermiqc
