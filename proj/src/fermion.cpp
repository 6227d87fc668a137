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

#include "fermiqc/fermion.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include "fermiqc/errors.hpp"

namespace fermiqc {

IntegralSet::IntegralSet(std::size_t n_spatial, std::size_t n_electrons)
    : n_(n_spatial),
      n_electrons_(n_electrons),
      h1_(n_spatial * n_spatial, 0.0),
      h2_(n_spatial * n_spatial * n_spatial * n_spatial, 0.0) {}

void IntegralSet::set_one_body(std::size_t p, std::size_t q, double v) {
  if (p >= n_ || q >= n_) throw DimensionError("one-body index out of range");
  h1_[p * n_ + q] = v;
  h1_[q * n_ + p] = v;
}

void IntegralSet::set_two_body(std::size_t p, std::size_t q, std::size_t r,
                               std::size_t s, double v) {
  if (p >= n_ || q >= n_ || r >= n_ || s >= n_) {
    throw DimensionError("two-body index out of range");
  }
  auto at = [&](std::size_t a, std::size_t b, std::size_t c,
                std::size_t d) -> double & {
    return h2_[((a * n_ + b) * n_ + c) * n_ + d];
  };
  at(p, q, r, s) = v;
  at(q, p, r, s) = v;
  at(p, q, s, r) = v;
  at(q, p, s, r) = v;
  at(r, s, p, q) = v;
  at(s, r, p, q) = v;
  at(r, s, q, p) = v;
  at(s, r, q, p) = v;
}

double IntegralSet::symmetry_defect() const {
  double worst = 0.0;
  for (std::size_t p = 0; p < n_; ++p) {
    for (std::size_t q = 0; q < n_; ++q) {
      worst = std::max(worst, std::abs(one_body(p, q) - one_body(q, p)));
      for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t s = 0; s < n_; ++s) {
          const double v = two_body(p, q, r, s);
          for (double w : {two_body(q, p, r, s), two_body(p, q, s, r),
                           two_body(q, p, s, r), two_body(r, s, p, q),
                           two_body(s, r, p, q), two_body(r, s, q, p),
                           two_body(s, r, q, p)}) {
            worst = std::max(worst, std::abs(v - w));
          }
        }
      }
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// FCIDUMP

namespace {

std::string trim_copy(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_real(std::string tok, double &out) {
  for (char &c : tok) {
    if (c == 'D' || c == 'd') c = 'e';  // Fortran exponent
  }
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

bool parse_index(const std::string &tok, long &out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

bool looks_like_data(const std::string &line) {
  std::istringstream ss(line);
  std::string first;
  if (!(ss >> first)) return false;
  double v;
  return parse_real(first, v);
}

bool read_key(const std::string &header, const char *key, long &value) {
  const std::regex re(std::string("\\b") + key + "\\s*=\\s*(-?\\d+)",
                      std::regex::icase);
  std::smatch m;
  if (!std::regex_search(header, m, re)) return false;
  value = std::stol(m[1].str());
  return true;
}

}  // namespace

IntegralSet parse_fcidump(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  std::size_t header_line = 0;
  bool in_header = false;
  bool header_done = false;
  std::string pending;  // first data line when the namelist has no terminator
  std::size_t pending_no = 0;

  while (!header_done && std::getline(in, line)) {
    ++line_no;
    const std::string t = trim_copy(line);
    if (!in_header) {
      if (t.empty() || t[0] == '!' || t[0] == '#') continue;
      std::string upper = t;
      std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
      if (!upper.starts_with("&FCI")) {
        throw ParseError("expected '&FCI' namelist header", line_no);
      }
      in_header = true;
      header_line = line_no;
      header = t.substr(4);
    } else if (looks_like_data(t)) {
      pending = t;
      pending_no = line_no;
      header_done = true;
      break;
    } else {
      header += ' ' + t;
    }
    std::string upper = header;
    std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
    const auto end_pos = upper.find("&END");
    const auto slash_pos = upper.find('/');
    if (end_pos != std::string::npos || slash_pos != std::string::npos) {
      header = header.substr(0, std::min(end_pos, slash_pos));
      header_done = true;
    }
  }
  if (!in_header) throw ParseError("missing '&FCI' namelist header", line_no);

  long norb = 0, nelec = 0, ms2 = 0;
  if (!read_key(header, "NORB", norb) || norb <= 0) {
    throw ParseError("header lacks a positive NORB", header_line);
  }
  if (!read_key(header, "NELEC", nelec) || nelec < 0) {
    throw ParseError("header lacks NELEC", header_line);
  }
  read_key(header, "MS2", ms2);

  IntegralSet ints(static_cast<std::size_t>(norb),
                   static_cast<std::size_t>(nelec));
  ints.set_ms2(static_cast<int>(ms2));
  bool have_core = false;
  double core = 0.0;

  auto handle = [&](const std::string &text, std::size_t no) {
    const std::string t = trim_copy(text);
    if (t.empty() || t[0] == '!' || t[0] == '#') return;
    std::istringstream ss(t);
    std::string tv, ti, tj, tk, tl;
    if (!(ss >> tv >> ti >> tj >> tk >> tl)) {
      throw ParseError("expected 'value i j k l'", no);
    }
    double v;
    long i, j, k, l;
    if (!parse_real(tv, v)) throw ParseError("bad value '" + tv + "'", no);
    if (!parse_index(ti, i) || !parse_index(tj, j) || !parse_index(tk, k) ||
        !parse_index(tl, l)) {
      throw ParseError("bad orbital index", no);
    }
    for (long idx : {i, j, k, l}) {
      if (idx < 0 || idx > norb) {
        throw ParseError("orbital index " + std::to_string(idx) +
                             " outside 0.." + std::to_string(norb),
                         no);
      }
    }
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      core = v;
      have_core = true;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      ints.set_one_body(i - 1, j - 1, v);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      ints.set_two_body(i - 1, j - 1, k - 1, l - 1, v);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital energy row; not part of the Hamiltonian
    } else {
      throw ParseError("unsupported index pattern", no);
    }
  };

  if (!pending.empty()) handle(pending, pending_no);
  while (std::getline(in, line)) {
    ++line_no;
    handle(line, line_no);
  }
  ints.set_core_energy(core, !have_core);
  return ints;
}

void write_fcidump(std::ostream &out, const IntegralSet &ints,
                   double threshold) {
  const std::size_t n = ints.n_spatial();
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", v);
    return std::string(buf);
  };
  out << "&FCI NORB=" << n << ",NELEC=" << ints.n_electrons()
      << ",MS2=" << ints.ms2() << ",\n ORBSYM=";
  for (std::size_t i = 0; i < n; ++i) out << "1,";
  out << "\n ISYM=1,\n&END\n";
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      const std::size_t pq = p * (p + 1) / 2 + q;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s <= r; ++s) {
          if (r * (r + 1) / 2 + s > pq) continue;
          const double v = ints.two_body(p, q, r, s);
          if (std::abs(v) > threshold) {
            out << num(v) << ' ' << p + 1 << ' ' << q + 1 << ' ' << r + 1
                << ' ' << s + 1 << '\n';
          }
        }
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = ints.one_body(p, q);
      if (std::abs(v) > threshold) {
        out << num(v) << ' ' << p + 1 << ' ' << q + 1 << " 0 0\n";
      }
    }
  }
  out << num(ints.core_energy()) << " 0 0 0 0\n";
}

IntegralSet synthetic_integrals(std::size_t n_spatial, std::uint64_t seed,
                                double density) {
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  IntegralSet ints(n_spatial, n_spatial);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto draw = [&]() -> double {
    const bool keep = coin(rng) < density;
    double v = value(rng);
    while (v == 0.0) v = value(rng);
    return keep ? v : 0.0;
  };
  for (std::size_t p = 0; p < n_spatial; ++p) {
    for (std::size_t q = 0; q <= p; ++q) ints.set_one_body(p, q, draw());
  }
  for (std::size_t p = 0; p < n_spatial; ++p) {
    for (std::size_t q = 0; q <= p; ++q) {
      const std::size_t pq = p * (p + 1) / 2 + q;
      for (std::size_t r = 0; r <= p; ++r) {
        for (std::size_t s = 0; s <= r; ++s) {
          if (r * (r + 1) / 2 + s > pq) continue;
          ints.set_two_body(p, q, r, s, draw());
        }
      }
    }
  }
  ints.set_core_energy(0.0);
  return ints;
}

// ---------------------------------------------------------------------------
// Hamiltonian

FermionOperator build_hamiltonian(const IntegralSet &ints) {
  const std::size_t n = ints.n_spatial();
  FermionOperator op;
  op.n_modes = 2 * n;
  auto mode = [](std::size_t p, int spin) {
    return static_cast<std::uint32_t>(spin_orbital(p, spin));
  };
  for (int s = 0; s < 2; ++s) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        const double h = ints.one_body(p, q);
        if (h == 0.0) continue;
        op.terms.push_back(
            {Complex{h, 0.0}, {{mode(p, s), true}, {mode(q, s), false}}});
      }
    }
  }
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t u = 0; u < n; ++u) {
              const double g = ints.two_body(p, q, r, u);
              if (g == 0.0) continue;
              const auto ps = mode(p, s), rt = mode(r, t);
              const auto ut = mode(u, t), qs = mode(q, s);
              if (ps == rt || ut == qs) continue;  // a+a+ or aa on one mode
              op.terms.push_back({Complex{0.5 * g, 0.0},
                                  {{ps, true}, {rt, true}, {ut, false},
                                   {qs, false}}});
            }
          }
        }
      }
    }
  }
  return op;
}

SparseMatrix fock_matrix(const FermionOperator &op, std::size_t n_modes,
                         std::size_t limit) {
  if (n_modes > limit) {
    throw ResourceError("Fock-space matrix on " + std::to_string(n_modes) +
                        " modes exceeds the limit of " +
                        std::to_string(limit));
  }
  const std::uint64_t dim = std::uint64_t{1} << n_modes;
  std::vector<Triplet> triplets;
  for (const auto &term : op.terms) {
    for (const auto &f : term.factors) {
      if (f.mode >= n_modes) {
        throw DimensionError("mode " + std::to_string(f.mode) +
                             " outside " + std::to_string(n_modes) +
                             " modes");
      }
    }
  }
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (const auto &term : op.terms) {
      std::uint64_t state = col;
      double sign = 1.0;
      bool zero = false;
      for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->mode;
        const bool occupied = state & bit;
        if (occupied == it->dagger) {
          zero = true;
          break;
        }
        if (std::popcount(state & (bit - 1)) & 1) sign = -sign;
        state ^= bit;
      }
      if (!zero) triplets.push_back({state, col, sign * term.coefficient});
    }
  }
  return SparseMatrix::from_triplets(dim, std::move(triplets));
}

}  // namespace fermiqc
