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

#include "fermiqc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "fermiqc/errors.hpp"

namespace fermiqc {

namespace {

template <typename T>
T parse_number(std::string_view s, const char *what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" +
                                std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Failure messages travel inside a CSV cell.
std::string sanitize(std::string msg) {
  for (char &c : msg) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return msg;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results are
// written by index, so output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto &t : pool) t.join();
}

std::string ordering_name(const OrderingStrategy &o) {
  return o.kind == OrderingStrategy::Kind::Random ? "random" : to_string(o);
}

OrderingStrategy ordering_from(std::string_view name, std::uint64_t seed) {
  if (name == "random") return OrderingStrategy::random(seed);
  return parse_ordering(name);
}

}  // namespace

SystemInput parse_input(std::string_view spec) {
  SystemInput in;
  if (spec.starts_with("synthetic:")) {
    const auto parts = split(spec.substr(10), ':');
    if (parts.empty() || parts.size() > 3) {
      throw std::invalid_argument("expected synthetic:<N>[:<seed>[:<density>]]");
    }
    in.synthetic = true;
    in.n_spin_orbitals = parse_number<std::size_t>(parts[0], "orbital count");
    if (in.n_spin_orbitals == 0 || in.n_spin_orbitals % 2 != 0) {
      throw std::invalid_argument("synthetic systems need an even, nonzero "
                                  "spin-orbital count");
    }
    if (parts.size() > 1) in.seed = parse_number<std::uint64_t>(parts[1], "seed");
    if (parts.size() > 2) {
      in.density = parse_number<double>(parts[2], "density");
      if (!(in.density > 0.0 && in.density <= 1.0)) {
        throw std::invalid_argument("density must lie in (0, 1]");
      }
    }
    in.id = "synthetic_n" + std::to_string(in.n_spin_orbitals) + "_s" +
            std::to_string(in.seed);
    return in;
  }
  in.path = std::string(spec);
  in.id = sanitize(std::filesystem::path(in.path).stem().string());
  return in;
}

IntegralSet load_integrals(const SystemInput &in) {
  if (in.synthetic) {
    return synthetic_integrals(in.n_spin_orbitals / 2, in.seed, in.density);
  }
  std::ifstream f(in.path);
  if (!f) throw std::runtime_error("cannot open '" + in.path + "'");
  return parse_fcidump(f);
}

MappedSystem map_system(const IntegralSet &ints, MappingScheme scheme) {
  MappedSystem m;
  m.op = map_operator(build_hamiltonian(ints), scheme);
  m.core_energy = ints.core_energy();
  return m;
}

ReportFormat parse_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

void validate(const BenchConfig &cfg) {
  if (cfg.inputs.empty()) throw std::invalid_argument("no inputs");
  if (cfg.mappings.empty()) throw std::invalid_argument("no mappings");
  if (cfg.orderings.empty()) throw std::invalid_argument("no orderings");
  if (cfg.modes.empty()) throw std::invalid_argument("no synthesis modes");
  if (cfg.n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
}

namespace {

struct Prepared {
  SystemInput input;
  MappingScheme mapping = MappingScheme::JordanWigner;
  MappedSystem system;
  std::optional<double> exact_energy;
  std::optional<StateVector> ground;
  double error_time = 1.0;
  std::string failure;
};

// Parse, map and (optionally) diagonalise every (input, mapping) pair.
std::vector<Prepared> prepare(const BenchConfig &cfg, bool need_ground) {
  std::vector<Prepared> prep;
  for (const auto &spec : cfg.inputs) {
    SystemInput in;
    std::string bad;
    try {
      in = parse_input(spec);
    } catch (const std::exception &e) {
      in.id = sanitize(spec);
      bad = sanitize(e.what());
    }
    for (MappingScheme m : cfg.mappings) {
      Prepared p;
      p.input = in;
      p.mapping = m;
      p.error_time = cfg.time;
      p.failure = bad;
      prep.push_back(std::move(p));
    }
  }
  parallel_for(prep.size(), cfg.workers, [&](std::size_t i) {
    Prepared &p = prep[i];
    if (!p.failure.empty()) return;
    try {
      p.system = map_system(load_integrals(p.input), p.mapping);
      if (need_ground) {
        const std::size_t n = p.system.op.n_qubits();
        if (n > cfg.error_qubit_limit) {
          throw ResourceError("error analysis limited to " +
                              std::to_string(cfg.error_qubit_limit) +
                              " qubits; system has " + std::to_string(n));
        }
        const Eigenpair g =
            ground_state(operator_matrix(p.system.op, cfg.error_qubit_limit));
        p.exact_energy = g.energy + p.system.core_energy;
        p.ground = g.state;
        p.error_time = branch_safe_time(p.system.op, cfg.time);
      }
    } catch (const std::exception &e) {
      p.failure = sanitize(e.what());
    }
  });
  return prep;
}

TrotterPlan plan_for(const Prepared &p, const OrderingStrategy &o,
                     MagnitudeDirection dir, std::size_t n_steps,
                     double time) {
  return build_plan(order_terms(p.system.op, o, dir), p.system.op.n_qubits(),
                    n_steps, time, p.system.offset());
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig &cfg) {
  validate(cfg);
  const std::vector<Prepared> prep = prepare(cfg, cfg.trotter_error);

  struct Cell {
    std::size_t prep, ordering, mode;
  };
  std::vector<Cell> cells;
  for (std::size_t p = 0; p < prep.size(); ++p) {
    for (std::size_t o = 0; o < cfg.orderings.size(); ++o) {
      for (std::size_t m = 0; m < cfg.modes.size(); ++m) {
        cells.push_back({p, o, m});
      }
    }
  }
  std::vector<BenchRow> rows(cells.size());
  std::mutex log_mu;
  parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
    const Cell &cell = cells[i];
    const Prepared &p = prep[cell.prep];
    BenchRow &row = rows[i];
    row.system = p.input.id;
    row.n_qubits = p.system.op.n_qubits();
    row.mapping = p.mapping;
    row.ordering = cfg.orderings[cell.ordering];
    row.mode = cfg.modes[cell.mode];
    row.failure = p.failure;
    if (row.failure.empty()) {
      try {
        const TrotterPlan plan =
            plan_for(p, row.ordering, cfg.direction, cfg.n_steps, cfg.time);
        row.raw = plan_gate_counts(plan, row.mode);
        if (cfg.optimize.level == OptimizeLevel::None) {
          row.optimized = row.raw;
        } else {
          OptimizationReport rep;
          row.optimized =
              count_gates(compile_plan(plan, row.mode, cfg.optimize, &rep));
          row.removed_per_pass = rep.removed_per_pass;
        }
        row.savings =
            row.raw.total == 0
                ? 0.0
                : static_cast<double>(row.raw.total - row.optimized.total) /
                      static_cast<double>(row.raw.total);
        if (cfg.trotter_error) {
          const TrotterPlan eplan = plan_for(p, row.ordering, cfg.direction,
                                             cfg.n_steps, p.error_time);
          row.trotter_error =
              trotter_error(eplan, *p.exact_energy, *p.ground).error;
        }
      } catch (const std::exception &e) {
        row = BenchRow{row.system, row.n_qubits, row.mapping, row.ordering,
                       row.mode,   {},           {},          0.0,
                       std::nullopt, sanitize(e.what()), {}};
      }
    }
    if (cfg.log) {
      std::lock_guard lock(log_mu);
      cfg.log(row.system + " " + std::string(to_string(row.mapping)) + " " +
              to_string(row.ordering) + " " +
              std::string(to_string(row.mode)) +
              (row.failed() ? " FAILED: " + row.failure
                            : " total " + std::to_string(row.optimized.total)));
    }
  });

  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow &a, const BenchRow &b) {
                     return std::make_tuple(a.system, a.mapping,
                                            to_string(a.ordering), a.mode) <
                            std::make_tuple(b.system, b.mapping,
                                            to_string(b.ordering), b.mode);
                   });
  return rows;
}

void emit_report(std::ostream &out, const std::vector<BenchRow> &rows,
                 ReportFormat format) {
  if (format == ReportFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const BenchRow &r : rows) {
      out << r.system << ',' << r.n_qubits << ',' << to_string(r.mapping)
          << ',' << ordering_name(r.ordering) << ',' << r.ordering.seed << ','
          << to_string(r.mode) << ',' << r.raw.total << ','
          << r.raw.entangling << ',' << r.raw.single_qubit << ','
          << r.raw.non_clifford << ',' << r.optimized.total << ','
          << r.optimized.entangling << ',' << r.optimized.single_qubit << ','
          << r.optimized.non_clifford << ',' << fmt_double(r.savings) << ',';
      if (r.failed()) {
        out << "failed:" << r.failure;
      } else if (r.trotter_error) {
        out << fmt_double(*r.trotter_error);
      }
      out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing report");
    return;
  }
  auto counts = [](const GateCounts &c) {
    return nlohmann::ordered_json{{"total", c.total},
                                  {"entangling", c.entangling},
                                  {"single", c.single_qubit},
                                  {"nonclifford", c.non_clifford}};
  };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BenchRow &r : rows) {
    nlohmann::ordered_json j;
    j["system"] = r.system;
    j["n_qubits"] = r.n_qubits;
    j["mapping"] = to_string(r.mapping);
    j["ordering"] = ordering_name(r.ordering);
    j["seed"] = r.ordering.seed;
    j["mode"] = to_string(r.mode);
    j["raw"] = counts(r.raw);
    j["optimized"] = counts(r.optimized);
    j["savings"] = r.savings;
    j["trotter_error"] = r.trotter_error
                             ? nlohmann::ordered_json(*r.trotter_error)
                             : nlohmann::ordered_json(nullptr);
    j["removed_per_pass"] = r.removed_per_pass;
    if (r.failed()) j["failure"] = r.failure;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing report");
}

std::vector<BenchRow> parse_report(std::istream &in, ReportFormat format) {
  std::vector<BenchRow> rows;
  if (format == ReportFormat::Json) {
    const auto arr = nlohmann::json::parse(in);
    auto counts = [](const nlohmann::json &j) {
      return GateCounts{j.at("total").get<std::uint64_t>(),
                        j.at("entangling").get<std::uint64_t>(),
                        j.at("single").get<std::uint64_t>(),
                        j.at("nonclifford").get<std::uint64_t>()};
    };
    for (const auto &j : arr) {
      BenchRow r;
      r.system = j.at("system").get<std::string>();
      r.n_qubits = j.at("n_qubits").get<std::size_t>();
      r.mapping = parse_mapping(j.at("mapping").get<std::string>());
      r.ordering = ordering_from(j.at("ordering").get<std::string>(),
                                 j.at("seed").get<std::uint64_t>());
      r.mode = parse_mode(j.at("mode").get<std::string>());
      r.raw = counts(j.at("raw"));
      r.optimized = counts(j.at("optimized"));
      r.savings = j.at("savings").get<double>();
      if (!j.at("trotter_error").is_null()) {
        r.trotter_error = j.at("trotter_error").get<double>();
      }
      r.removed_per_pass =
          j.at("removed_per_pass").get<std::vector<std::uint64_t>>();
      if (j.contains("failure")) r.failure = j.at("failure").get<std::string>();
      rows.push_back(std::move(r));
    }
    return rows;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1) {
      if (line != kCsvHeader) throw ParseError("unexpected CSV header", 1);
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 16) throw ParseError("expected 16 fields", lineno);
    try {
      BenchRow r;
      r.system = std::string(f[0]);
      r.n_qubits = parse_number<std::size_t>(f[1], "n_qubits");
      r.mapping = parse_mapping(f[2]);
      r.ordering =
          ordering_from(f[3], parse_number<std::uint64_t>(f[4], "seed"));
      r.mode = parse_mode(f[5]);
      auto u = [&](std::size_t k) {
        return parse_number<std::uint64_t>(f[k], "count");
      };
      r.raw = {u(6), u(7), u(8), u(9)};
      r.optimized = {u(10), u(11), u(12), u(13)};
      r.savings = parse_number<double>(f[14], "savings");
      if (f[15].starts_with("failed:")) {
        r.failure = std::string(f[15].substr(7));
      } else if (!f[15].empty()) {
        r.trotter_error = parse_number<double>(f[15], "trotter_error");
      }
      rows.push_back(std::move(r));
    } catch (const ParseError &) {
      throw;
    } catch (const std::exception &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (lineno == 0) throw ParseError("empty report", 0);
  return rows;
}

std::vector<ErrorRow> run_error_sweep(const BenchConfig &cfg,
                                      const std::vector<std::size_t> &steps) {
  validate(cfg);
  if (steps.empty()) throw std::invalid_argument("no step counts");
  const std::vector<Prepared> prep = prepare(cfg, true);
  struct Cell {
    std::size_t prep, ordering, steps;
  };
  std::vector<Cell> cells;
  for (std::size_t p = 0; p < prep.size(); ++p) {
    for (std::size_t o = 0; o < cfg.orderings.size(); ++o) {
      for (std::size_t s = 0; s < steps.size(); ++s) cells.push_back({p, o, s});
    }
  }
  std::vector<ErrorRow> rows(cells.size());
  parallel_for(cells.size(), cfg.workers, [&](std::size_t i) {
    const Cell &cell = cells[i];
    const Prepared &p = prep[cell.prep];
    ErrorRow &row = rows[i];
    row.system = p.input.id;
    row.n_qubits = p.system.op.n_qubits();
    row.mapping = p.mapping;
    row.ordering = cfg.orderings[cell.ordering];
    row.report.n_steps = steps[cell.steps];
    row.failure = p.failure;
    if (!row.failure.empty()) return;
    try {
      const TrotterPlan plan = plan_for(p, row.ordering, cfg.direction,
                                        steps[cell.steps], p.error_time);
      row.report = trotter_error(plan, *p.exact_energy, *p.ground);
      row.report.ordering = row.ordering;
      row.report.mapping = row.mapping;
    } catch (const std::exception &e) {
      row.failure = sanitize(e.what());
    }
  });
  return rows;
}

void emit_error_report(std::ostream &out, const std::vector<ErrorRow> &rows,
                       ReportFormat format) {
  if (format == ReportFormat::Csv) {
    out << "system,n_qubits,mapping,ordering,seed,n_steps,time,exact_energy,"
           "estimated_energy,error,overlap,status\n";
    for (const ErrorRow &r : rows) {
      out << r.system << ',' << r.n_qubits << ',' << to_string(r.mapping)
          << ',' << ordering_name(r.ordering) << ',' << r.ordering.seed << ','
          << r.report.n_steps << ',';
      if (r.failure.empty()) {
        out << fmt_double(r.report.time) << ','
            << fmt_double(r.report.exact_energy) << ','
            << fmt_double(r.report.estimated_energy) << ','
            << fmt_double(r.report.error) << ','
            << fmt_double(r.report.overlap) << ','
            << (r.report.low_overlap ? "low_overlap" : "ok");
      } else {
        out << ",,,,,failed:" << r.failure;
      }
      out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing report");
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ErrorRow &r : rows) {
    nlohmann::ordered_json j;
    j["system"] = r.system;
    j["n_qubits"] = r.n_qubits;
    j["mapping"] = to_string(r.mapping);
    j["ordering"] = ordering_name(r.ordering);
    j["seed"] = r.ordering.seed;
    j["n_steps"] = r.report.n_steps;
    if (r.failure.empty()) {
      j["time"] = r.report.time;
      j["exact_energy"] = r.report.exact_energy;
      j["estimated_energy"] = r.report.estimated_energy;
      j["error"] = r.report.error;
      j["overlap"] = r.report.overlap;
      j["low_overlap"] = r.report.low_overlap;
    } else {
      j["failure"] = r.failure;
    }
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing report");
}

}  // namespace fermiqc
