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

#include "fermiqc/circuits.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fermiqc/errors.hpp"

namespace fermiqc {

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::YB: return "YB";
    case GateKind::YBD: return "YBD";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::RZ: return "RZ";
    case GateKind::X: return "X";
  }
  return "?";
}

Gate Gate::cnot(std::uint32_t control, std::uint32_t target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control equals target");
  }
  return {GateKind::CNOT, control, target, 0.0};
}

Gate Gate::cz(std::uint32_t a, std::uint32_t b) {
  if (a == b) throw std::invalid_argument("CZ on a single qubit");
  return {GateKind::CZ, a, b, 0.0};
}

std::string_view to_string(SynthesisMode m) {
  switch (m) {
    case SynthesisMode::Canonical: return "canonical";
    case SynthesisMode::BasisShift: return "basis_shift";
    case SynthesisMode::Ancilla: return "ancilla";
  }
  return "?";
}

SynthesisMode parse_mode(std::string_view text) {
  if (text == "canonical") return SynthesisMode::Canonical;
  if (text == "basis_shift" || text == "basis-shift") {
    return SynthesisMode::BasisShift;
  }
  if (text == "ancilla") return SynthesisMode::Ancilla;
  throw std::invalid_argument("unknown synthesis mode '" + std::string(text) +
                              "'");
}

void Circuit::append(const Circuit &other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

GateCounts &GateCounts::operator+=(const GateCounts &o) {
  total += o.total;
  entangling += o.entangling;
  single_qubit += o.single_qubit;
  non_clifford += o.non_clifford;
  return *this;
}

GateCounts GateCounts::scaled(std::uint64_t k) const {
  return {total * k, entangling * k, single_qubit * k, non_clifford * k};
}

GateCounts count_gates(const Circuit &c) {
  GateCounts n;
  for (const Gate &g : c.gates) {
    if (g.two_qubit()) {
      ++n.entangling;
    } else if (g.kind == GateKind::RZ) {
      ++n.non_clifford;
    } else {
      ++n.single_qubit;
    }
  }
  n.total = c.gates.size();
  return n;
}

void validate(const Circuit &c) {
  const std::size_t w = c.width();
  for (const Gate &g : c.gates) {
    if (g.q0 >= w || g.q1 >= w) {
      throw DimensionError("gate index outside a " + std::to_string(w) +
                           "-qubit circuit");
    }
    if (g.two_qubit() && g.q0 == g.q1) {
      throw DimensionError("two-qubit gate repeats a qubit");
    }
  }
}

namespace {

struct Involved {
  std::vector<std::uint32_t> qubits;  // ascending
  std::vector<PauliAxis> axes;
};

Involved involved_qubits(const PauliString &term) {
  if (term.is_identity()) {
    throw std::invalid_argument(
        "identity term has no circuit; carry it as an energy offset");
  }
  Involved inv;
  for (std::size_t q : term.support()) {
    inv.qubits.push_back(static_cast<std::uint32_t>(q));
    inv.axes.push_back(term[q]);
  }
  return inv;
}

void basis_in(std::vector<Gate> &g, std::uint32_t q, PauliAxis a) {
  if (a == PauliAxis::X) g.push_back(Gate::h(q));
  if (a == PauliAxis::Y) g.push_back(Gate::yb(q));
}

// Parity chain q[0] -> q[1] -> ... -> q.back().
void chain(std::vector<Gate> &g, const std::vector<std::uint32_t> &q) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    g.push_back(Gate::cnot(q[i], q[i + 1]));
  }
}

// Appends the mirror image of g[0, end): reversed, each gate inverted.
// Only self-inverse gates and YB/YBD appear in the compute halves.
void mirror(std::vector<Gate> &g, std::size_t end) {
  for (std::size_t i = end; i-- > 0;) {
    Gate inv = g[i];
    if (inv.kind == GateKind::YB) {
      inv.kind = GateKind::YBD;
    } else if (inv.kind == GateKind::YBD) {
      inv.kind = GateKind::YB;
    }
    g.push_back(inv);
  }
}

}  // namespace

Circuit synthesize_term(const PauliString &term, double theta) {
  const Involved inv = involved_qubits(term);
  Circuit c;
  c.n_qubits = term.size();
  auto &g = c.gates;
  for (std::size_t i = 0; i < inv.qubits.size(); ++i) {
    basis_in(g, inv.qubits[i], inv.axes[i]);
  }
  chain(g, inv.qubits);
  const std::size_t head = g.size();
  g.push_back(Gate::rz(inv.qubits.back(), theta));
  mirror(g, head);
  return c;
}

// The non-central qubits split into an interior chain (Z axis, no basis
// change) and an exterior chain (X/Y axes, basis changed). Each chain's
// parity reaches the central qubit through its own entangler, so the
// central qubit sees X^ext X^int Rz X^int X^ext. The central basis change
// sits inside the entanglers; with an X-axis centre the entangler is CZ,
// since CZ maps X_c to Z_p X_c while CNOT would leave X_c untouched.
Circuit synthesize_term_basis_shift(const PauliString &term, double theta) {
  const Involved inv = involved_qubits(term);
  Circuit c;
  c.n_qubits = term.size();
  auto &g = c.gates;

  const std::uint32_t centre = inv.qubits.back();
  const PauliAxis centre_axis = inv.axes.back();
  std::vector<std::uint32_t> interior, exterior;
  for (std::size_t i = 0; i + 1 < inv.qubits.size(); ++i) {
    if (inv.axes[i] == PauliAxis::Z) {
      interior.push_back(inv.qubits[i]);
    } else {
      exterior.push_back(inv.qubits[i]);
      basis_in(g, inv.qubits[i], inv.axes[i]);
    }
  }
  chain(g, exterior);
  chain(g, interior);
  auto entangle = [&](std::uint32_t from) {
    g.push_back(centre_axis == PauliAxis::X ? Gate::cz(from, centre)
                                            : Gate::cnot(from, centre));
  };
  if (!exterior.empty()) entangle(exterior.back());
  if (!interior.empty()) entangle(interior.back());
  basis_in(g, centre, centre_axis);
  const std::size_t head = g.size();
  g.push_back(Gate::rz(centre, theta));
  mirror(g, head);
  return c;
}

Circuit synthesize_term_ancilla(const PauliString &term, double theta) {
  const Involved inv = involved_qubits(term);
  Circuit c;
  c.n_qubits = term.size();
  c.ancilla = true;
  const auto anc = static_cast<std::uint32_t>(term.size());
  auto &g = c.gates;
  for (std::size_t i = 0; i < inv.qubits.size(); ++i) {
    basis_in(g, inv.qubits[i], inv.axes[i]);
  }
  for (std::uint32_t q : inv.qubits) g.push_back(Gate::cnot(q, anc));
  const std::size_t head = g.size();
  g.push_back(Gate::rz(anc, theta));
  mirror(g, head);
  return c;
}

Circuit synthesize_term(const PauliString &term, double theta,
                        SynthesisMode mode) {
  switch (mode) {
    case SynthesisMode::Canonical: return synthesize_term(term, theta);
    case SynthesisMode::BasisShift:
      return synthesize_term_basis_shift(term, theta);
    case SynthesisMode::Ancilla: return synthesize_term_ancilla(term, theta);
  }
  throw std::invalid_argument("bad synthesis mode");
}

Circuit synthesize_step(const TrotterPlan &plan, SynthesisMode mode) {
  Circuit c;
  c.n_qubits = plan.n_qubits;
  c.ancilla = mode == SynthesisMode::Ancilla;
  for (std::size_t j = 0; j < plan.ordered_terms.size(); ++j) {
    c.append(synthesize_term(plan.ordered_terms[j].string, plan.angle(j), mode));
  }
  return c;
}

Circuit synthesize_plan(const TrotterPlan &plan, SynthesisMode mode) {
  const Circuit step = synthesize_step(plan, mode);
  Circuit c;
  c.n_qubits = step.n_qubits;
  c.ancilla = step.ancilla;
  c.gates.reserve(step.gates.size() * plan.n_steps);
  for (std::size_t s = 0; s < plan.n_steps; ++s) c.append(step);
  return c;
}

GateCounts term_gate_counts(const PauliString &term, SynthesisMode mode) {
  std::size_t w = 0, basis = 0;
  for (std::size_t i = 0; i < term.word_count(); ++i) {
    const std::uint64_t x = term.x_words()[i];
    const std::uint64_t z = term.z_words()[i];
    w += static_cast<std::size_t>(std::popcount(x | z));
    basis += static_cast<std::size_t>(std::popcount(x));
  }
  if (w == 0) {
    throw std::invalid_argument(
        "identity term has no circuit; carry it as an energy offset");
  }
  GateCounts n;
  n.non_clifford = 1;
  n.single_qubit = 2 * basis;
  switch (mode) {
    case SynthesisMode::Canonical:
    case SynthesisMode::BasisShift: n.entangling = 2 * (w - 1); break;
    case SynthesisMode::Ancilla: n.entangling = 2 * w; break;
  }
  n.total = n.entangling + n.single_qubit + n.non_clifford;
  return n;
}

GateCounts plan_gate_counts(const TrotterPlan &plan, SynthesisMode mode) {
  GateCounts step;
  for (const auto &t : plan.ordered_terms) {
    step += term_gate_counts(t.string, mode);
  }
  return step.scaled(plan.n_steps);
}

void write_circuit(std::ostream &out, const Circuit &c) {
  out << "QUBITS " << c.n_qubits << " ANCILLA " << (c.ancilla ? 1 : 0)
      << '\n';
  char buf[40];
  for (const Gate &g : c.gates) {
    out << to_string(g.kind) << ' ' << g.q0;
    if (g.two_qubit()) out << ' ' << g.q1;
    if (g.kind == GateKind::RZ) {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      out << ' ' << buf;
    }
    out << '\n';
  }
}

namespace {

GateKind kind_from_token(const std::string &tok, std::size_t line) {
  if (tok == "H") return GateKind::H;
  if (tok == "YB") return GateKind::YB;
  if (tok == "YBD") return GateKind::YBD;
  if (tok == "CNOT") return GateKind::CNOT;
  if (tok == "CZ") return GateKind::CZ;
  if (tok == "RZ") return GateKind::RZ;
  if (tok == "X") return GateKind::X;
  throw ParseError("unknown gate '" + tok + "'", line);
}

}  // namespace

Circuit read_circuit(std::istream &in) {
  Circuit c;
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty() || text[0] == '#') continue;
    std::istringstream ls(text);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      std::string anc_tok;
      int anc = 0;
      if (tok != "QUBITS" || !(ls >> c.n_qubits >> anc_tok >> anc) ||
          anc_tok != "ANCILLA" || (anc != 0 && anc != 1)) {
        throw ParseError("expected 'QUBITS <n> ANCILLA <0|1>'", line);
      }
      c.ancilla = anc == 1;
      have_header = true;
      continue;
    }
    Gate g;
    g.kind = kind_from_token(tok, line);
    long long a = -1, b = -1;
    if (!(ls >> a) || a < 0) throw ParseError("missing qubit index", line);
    g.q0 = g.q1 = static_cast<std::uint32_t>(a);
    if (g.two_qubit()) {
      if (!(ls >> b) || b < 0) throw ParseError("missing second qubit", line);
      g.q1 = static_cast<std::uint32_t>(b);
      if (g.q0 == g.q1) throw ParseError("two-qubit gate repeats a qubit", line);
    }
    if (g.kind == GateKind::RZ) {
      std::string num;
      if (!(ls >> num)) throw ParseError("RZ needs an angle", line);
      try {
        std::size_t used = 0;
        g.angle = std::stod(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception &) {
        throw ParseError("bad angle '" + num + "'", line);
      }
    }
    if (std::string extra; ls >> extra) {
      throw ParseError("trailing token '" + extra + "'", line);
    }
    if (g.q0 >= c.width() || g.q1 >= c.width()) {
      throw ParseError("qubit index outside the register", line);
    }
    c.gates.push_back(g);
  }
  if (!have_header) throw ParseError("empty circuit file", line);
  return c;
}

}  // namespace fermiqc
