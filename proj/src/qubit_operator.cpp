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

#include "fermiqc/qubit_operator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "fermiqc/errors.hpp"

namespace fermiqc {

QubitOperator QubitOperator::from_terms(std::size_t n_qubits,
                                        std::span<const PauliTerm> raw,
                                        double tol) {
  if (tol < 0) throw std::invalid_argument("negative drop tolerance");
  QubitOperator op(n_qubits);
  std::unordered_map<PauliString, Complex> merged;
  merged.reserve(raw.size());
  for (const auto &t : raw) {
    if (t.string.size() != n_qubits) {
      throw DimensionError("term on " + std::to_string(t.string.size()) +
                           " qubits added to a " + std::to_string(n_qubits) +
                           "-qubit operator");
    }
    if (t.string.is_identity()) {
      op.constant_ += t.coefficient;
    } else {
      merged[t.string] += t.coefficient;
    }
  }
  op.terms_.reserve(merged.size());
  for (auto &[s, c] : merged) {
    if (std::abs(c) > tol) op.terms_.push_back({c, s});
  }
  std::sort(op.terms_.begin(), op.terms_.end(),
            [](const PauliTerm &a, const PauliTerm &b) {
              return lex_less(a.string, b.string);
            });
  return op;
}

double QubitOperator::one_norm() const {
  double s = 0.0;
  for (const auto &t : terms_) s += std::abs(t.coefficient);
  return s;
}

QubitOperator simplify(const QubitOperator &op, double tol) {
  std::vector<PauliTerm> raw = op.terms();
  raw.push_back({op.constant(), PauliString(op.n_qubits())});
  return QubitOperator::from_terms(op.n_qubits(), raw, tol);
}

QubitOperator simplify(std::size_t n_qubits, std::span<const PauliTerm> raw,
                       double tol) {
  return QubitOperator::from_terms(n_qubits, raw, tol);
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_term(std::ostream &out, Complex c, const PauliString &s) {
  out << '(' << format_double(c.real()) << ',' << format_double(c.imag())
      << ')';
  const std::string body = s.to_string();
  if (!body.empty()) out << ' ' << body;
  out << '\n';
}

double parse_double(std::string_view text, std::size_t line) {
  // std::from_chars for double is available in libstdc++ 11.
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad number '" + std::string(text) + "'", line);
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

struct RawTerm {
  Complex coefficient;
  std::vector<std::pair<std::size_t, PauliAxis>> ops;
};

RawTerm parse_raw(std::string_view line, std::size_t line_no) {
  line = trim(line);
  if (line.empty() || line.front() != '(') {
    throw ParseError("expected '(<re>,<im>)'", line_no);
  }
  const auto close = line.find(')');
  const auto comma = line.find(',');
  if (close == std::string_view::npos || comma == std::string_view::npos ||
      comma > close) {
    throw ParseError("expected '(<re>,<im>)'", line_no);
  }
  RawTerm t;
  t.coefficient = {parse_double(trim(line.substr(1, comma - 1)), line_no),
                   parse_double(trim(line.substr(comma + 1, close - comma - 1)),
                                line_no)};
  std::string_view rest = line.substr(close + 1);
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    const auto end = rest.find_first_of(" \t");
    std::string_view tok = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view{}
                                         : rest.substr(end);
    if (tok.size() < 2) throw ParseError("bad Pauli factor", line_no);
    PauliAxis axis;
    try {
      axis = axis_from_char(tok[0]);
    } catch (const std::invalid_argument &e) {
      throw ParseError(e.what(), line_no);
    }
    std::size_t q = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), q);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("bad qubit index in '" + std::string(tok) + "'",
                       line_no);
    }
    for (const auto &[q2, a2] : t.ops) {
      if (q2 == q) {
        throw ParseError("qubit " + std::to_string(q) + " repeated", line_no);
      }
    }
    if (axis != PauliAxis::I) t.ops.emplace_back(q, axis);
  }
  return t;
}

}  // namespace

PauliTerm parse_pauli_term(std::string_view line, std::size_t n_qubits) {
  RawTerm raw = parse_raw(line, 0);
  for (const auto &[q, a] : raw.ops) {
    if (q >= n_qubits) {
      throw ParseError("qubit " + std::to_string(q) +
                           " outside register of size " +
                           std::to_string(n_qubits),
                       0);
    }
  }
  return {raw.coefficient, PauliString(n_qubits, raw.ops)};
}

void write_pauli_text(std::ostream &out, const QubitOperator &op) {
  out << "# n_qubits " << op.n_qubits() << '\n';
  if (op.constant() != Complex{0.0, 0.0}) {
    write_term(out, op.constant(), PauliString(op.n_qubits()));
  }
  for (const auto &t : op.terms()) write_term(out, t.coefficient, t.string);
}

QubitOperator read_pauli_text(std::istream &in, double tol) {
  std::vector<RawTerm> raw;
  std::size_t declared = 0;
  bool have_declared = false;
  std::size_t needed = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = trim(line);
    if (v.empty()) continue;
    if (v.front() == '#') {
      v.remove_prefix(1);
      v = trim(v);
      constexpr std::string_view kKey = "n_qubits";
      if (v.starts_with(kKey)) {
        std::string_view num = trim(v.substr(kKey.size()));
        auto [ptr, ec] =
            std::from_chars(num.data(), num.data() + num.size(), declared);
        if (ec != std::errc() || ptr != num.data() + num.size()) {
          throw ParseError("bad n_qubits header", line_no);
        }
        have_declared = true;
      }
      continue;
    }
    raw.push_back(parse_raw(v, line_no));
    for (const auto &[q, a] : raw.back().ops) needed = std::max(needed, q + 1);
  }
  if (have_declared && needed > declared) {
    throw ParseError("term index exceeds declared n_qubits " +
                         std::to_string(declared),
                     0);
  }
  const std::size_t n = have_declared ? declared : needed;
  std::vector<PauliTerm> terms;
  terms.reserve(raw.size());
  for (auto &r : raw) terms.push_back({r.coefficient, PauliString(n, r.ops)});
  return QubitOperator::from_terms(n, terms, tol);
}

}  // namespace fermiqc
