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

#include "fermiqc/trotter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace fermiqc {

std::string to_string(const OrderingStrategy &s) {
  switch (s.kind) {
    case OrderingStrategy::Kind::Magnitude: return "magnitude";
    case OrderingStrategy::Kind::Lexicographic: return "lex";
    case OrderingStrategy::Kind::Random:
      return "random:" + std::to_string(s.seed);
    case OrderingStrategy::Kind::LexoMag: return "lexomag";
  }
  return "?";
}

OrderingStrategy parse_ordering(std::string_view text) {
  if (text == "magnitude" || text == "mag") return OrderingStrategy::magnitude();
  if (text == "lex" || text == "lexicographic") {
    return OrderingStrategy::lexicographic();
  }
  if (text == "lexomag") return OrderingStrategy::lexomag();
  if (text.starts_with("random")) {
    std::uint64_t seed = 0;
    if (text.size() > 6) {
      if (text[6] != ':') {
        throw std::invalid_argument("expected random:<seed>");
      }
      const auto digits = text.substr(7);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), seed);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad random seed in '" +
                                    std::string(text) + "'");
      }
    }
    return OrderingStrategy::random(seed);
  }
  throw std::invalid_argument("unknown ordering '" + std::string(text) + "'");
}

namespace {

std::vector<PauliTerm> by_lex(const QubitOperator &op) {
  std::vector<PauliTerm> out = op.terms();
  std::stable_sort(out.begin(), out.end(),
                   [](const PauliTerm &a, const PauliTerm &b) {
                     return lex_less(a.string, b.string);
                   });
  return out;
}

std::vector<PauliTerm> by_magnitude(const QubitOperator &op,
                                    MagnitudeDirection dir) {
  std::vector<PauliTerm> out = by_lex(op);
  std::stable_sort(out.begin(), out.end(),
                   [dir](const PauliTerm &a, const PauliTerm &b) {
                     const double ma = std::abs(a.coefficient);
                     const double mb = std::abs(b.coefficient);
                     return dir == MagnitudeDirection::Descending ? ma > mb
                                                                  : ma < mb;
                   });
  return out;
}

}  // namespace

std::vector<PauliTerm> order_terms(const QubitOperator &op,
                                   const OrderingStrategy &strategy,
                                   MagnitudeDirection direction) {
  switch (strategy.kind) {
    case OrderingStrategy::Kind::Lexicographic: return by_lex(op);
    case OrderingStrategy::Kind::Magnitude: return by_magnitude(op, direction);
    case OrderingStrategy::Kind::Random: {
      std::vector<PauliTerm> out = by_lex(op);
      std::mt19937_64 rng(strategy.seed);
      std::shuffle(out.begin(), out.end(), rng);
      return out;
    }
    case OrderingStrategy::Kind::LexoMag: {
      const auto lex = by_lex(op);
      const auto mag = by_magnitude(op, direction);
      std::vector<PauliTerm> out;
      out.reserve(lex.size());
      std::unordered_set<PauliString> emitted;
      std::size_t li = 0, mi = 0;
      bool from_lex = true;
      while (out.size() < lex.size()) {
        const auto &src = from_lex ? lex : mag;
        std::size_t &pos = from_lex ? li : mi;
        while (pos < src.size() && emitted.count(src[pos].string)) ++pos;
        if (pos < src.size()) {
          emitted.insert(src[pos].string);
          out.push_back(src[pos]);
          ++pos;
        }
        from_lex = !from_lex;
      }
      return out;
    }
  }
  return {};
}

double TrotterPlan::angle(std::size_t j) const {
  return 2.0 * ordered_terms.at(j).coefficient.real() * time /
         static_cast<double>(n_steps);
}

TrotterPlan build_plan(std::vector<PauliTerm> ordered, std::size_t n_qubits,
                       std::size_t n_steps, double time, double offset) {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");
  if (!std::isfinite(time)) throw std::invalid_argument("time is not finite");
  TrotterPlan plan;
  plan.n_qubits = n_qubits;
  plan.n_steps = n_steps;
  plan.time = time;
  plan.scalar_offset = offset;
  for (const auto &t : ordered) {
    if (t.string.size() != n_qubits) {
      throw std::invalid_argument("term register size does not match plan");
    }
    if (t.string.is_identity()) {
      throw std::invalid_argument("identity term in a Trotter plan");
    }
    if (std::abs(t.coefficient.imag()) >
        1e-10 * std::max(1.0, std::abs(t.coefficient))) {
      throw std::invalid_argument("Hamiltonian term with complex coefficient");
    }
  }
  plan.ordered_terms = std::move(ordered);
  for (std::size_t j = 0; j < plan.ordered_terms.size(); ++j) {
    if (!std::isfinite(plan.angle(j))) {
      throw std::invalid_argument("non-finite rotation angle");
    }
  }
  return plan;
}

double branch_safe_time(const QubitOperator &op, double time) {
  const double bound = op.one_norm();
  while (bound * time >= std::numbers::pi) time *= 0.5;
  return time;
}

}  // namespace fermiqc
