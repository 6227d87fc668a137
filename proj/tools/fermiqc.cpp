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

// fermiqc: map, compile, optimize, bench, trotter-error.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fermiqc/bench.hpp"
#include "fermiqc/circuits.hpp"
#include "fermiqc/mappings.hpp"
#include "fermiqc/optimizer.hpp"
#include "fermiqc/qubit_operator.hpp"
#include "fermiqc/trotter.hpp"

namespace {

using namespace fermiqc;

constexpr int kCellFailure = 2;

// Writes to the -o path, or stdout when it is empty or "-".
template <typename Fn>
void with_output(const std::string &path, Fn fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  fn(f);
  f.close();
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::ifstream open_input(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return f;
}

MagnitudeDirection parse_direction(const std::string &s) {
  if (s == "descending") return MagnitudeDirection::Descending;
  if (s == "ascending") return MagnitudeDirection::Ascending;
  throw std::invalid_argument("magnitude direction must be ascending or "
                              "descending");
}

struct Common {
  std::vector<std::string> mappings{"jw", "bk"};
  std::vector<std::string> orderings{"magnitude"};
  std::vector<std::string> modes{"canonical"};
  std::string direction = "descending";
  std::string optimize = "full";
  std::size_t window = 0;
  bool cross_step = false;
  std::size_t steps = 1;
  double time = 1.0;
  std::size_t workers = 1;
  std::string format = "csv";
  std::string output;
};

BenchConfig to_config(const std::vector<std::string> &inputs,
                      const Common &c) {
  BenchConfig cfg;
  cfg.inputs = inputs;
  cfg.mappings.clear();
  for (const auto &m : c.mappings) cfg.mappings.push_back(parse_mapping(m));
  cfg.orderings.clear();
  for (const auto &o : c.orderings) cfg.orderings.push_back(parse_ordering(o));
  cfg.modes.clear();
  for (const auto &m : c.modes) cfg.modes.push_back(parse_mode(m));
  cfg.direction = parse_direction(c.direction);
  cfg.optimize = {parse_optimize_level(c.optimize), c.window, c.cross_step};
  cfg.n_steps = c.steps;
  cfg.time = c.time;
  cfg.workers = c.workers == 0
                    ? std::max(1U, std::thread::hardware_concurrency())
                    : c.workers;
  return cfg;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Fermion-to-qubit mapping, Trotter circuit compiler and "
               "benchmark"};
  app.require_subcommand(1);

  // map
  std::string map_input, map_mapping = "jw", map_output;
  auto *map = app.add_subcommand("map", "integrals -> Pauli operator file");
  map->add_option("input", map_input,
                  "FCIDUMP file or synthetic:<N>[:<seed>[:<density>]]")
      ->required();
  map->add_option("--mapping", map_mapping, "jw or bk")->capture_default_str();
  map->add_option("-o,--output", map_output, "output path (default stdout)");

  // compile
  std::string comp_input, comp_output, comp_ordering = "magnitude",
                                       comp_mode = "canonical",
                                       comp_opt = "none",
                                       comp_direction = "descending";
  std::size_t comp_steps = 1, comp_window = 0;
  double comp_time = 1.0;
  bool comp_cross = false;
  auto *compile = app.add_subcommand("compile", "Pauli file -> circuit file");
  compile->add_option("input", comp_input, "Pauli operator file")->required();
  compile->add_option("--ordering", comp_ordering,
                      "magnitude | lex | random:<seed> | lexomag")
      ->capture_default_str();
  compile->add_option("--magnitude-direction", comp_direction,
                      "descending | ascending")
      ->capture_default_str();
  compile->add_option("--steps", comp_steps, "Trotter steps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  compile->add_option("--time", comp_time, "evolution time (a.u.)")
      ->capture_default_str();
  compile->add_option("--mode", comp_mode, "canonical | basis_shift | ancilla")
      ->capture_default_str();
  compile->add_option("--optimize", comp_opt, "none | cancel | full")
      ->capture_default_str();
  compile->add_option("--window", comp_window,
                      "commutation look-ahead, 0 = unbounded")
      ->capture_default_str();
  compile->add_flag("--cross-step", comp_cross,
                    "allow cancellation across Trotter-step seams");
  compile->add_option("-o,--output", comp_output, "output path");

  // optimize
  std::string opt_input, opt_output, opt_level = "full";
  std::size_t opt_window = 0;
  auto *optimize_cmd =
      app.add_subcommand("optimize", "circuit file -> circuit file");
  optimize_cmd->add_option("input", opt_input, "circuit file")->required();
  optimize_cmd->add_option("--optimize", opt_level, "none | cancel | full")
      ->capture_default_str();
  optimize_cmd->add_option("--window", opt_window,
                           "commutation look-ahead, 0 = unbounded")
      ->capture_default_str();
  optimize_cmd->add_option("-o,--output", opt_output, "output path");

  // bench and trotter-error share most flags.
  auto add_common = [](CLI::App *cmd, Common &c, bool circuits) {
    cmd->add_option("--mapping", c.mappings, "jw, bk (repeatable)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--ordering", c.orderings,
                    "magnitude | lex | random:<seed> | lexomag (repeatable)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--magnitude-direction", c.direction,
                    "descending | ascending")
        ->capture_default_str();
    if (circuits) {
      cmd->add_option("--mode", c.modes,
                      "canonical | basis_shift | ancilla (repeatable)")
          ->delimiter(',')
          ->capture_default_str();
      cmd->add_option("--optimize", c.optimize, "none | cancel | full")
          ->capture_default_str();
      cmd->add_option("--window", c.window,
                      "commutation look-ahead, 0 = unbounded")
          ->capture_default_str();
      cmd->add_flag("--cross-step", c.cross_step,
                    "allow cancellation across Trotter-step seams");
      cmd->add_option("--steps", c.steps, "Trotter steps")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--time", c.time, "evolution time (a.u.)")
        ->capture_default_str();
    cmd->add_option("--workers", c.workers, "parallel cells, 0 = all cores")
        ->capture_default_str();
    cmd->add_option("--format", c.format, "csv | json")->capture_default_str();
    cmd->add_option("-o,--output", c.output, "output path (default stdout)");
  };

  std::vector<std::string> bench_inputs;
  Common bench_opts;
  bool bench_error = false, verbose = false;
  auto *bench = app.add_subcommand("bench", "full sweep -> report");
  bench->add_option("inputs", bench_inputs,
                    "FCIDUMP files and synthetic:<N>[:<seed>[:<density>]]")
      ->required();
  add_common(bench, bench_opts, true);
  bench->add_flag("--trotter-error", bench_error,
                  "also measure Trotter error (small systems only)");
  bench->add_flag("-v,--verbose", verbose, "one log line per cell on stderr");

  std::vector<std::string> err_inputs;
  std::vector<std::size_t> err_steps{1};
  Common err_opts;
  auto *terr = app.add_subcommand("trotter-error", "Trotter error sweep");
  terr->add_option("inputs", err_inputs, "FCIDUMP files or synthetic specs")
      ->required();
  add_common(terr, err_opts, false);
  terr->add_option("--steps", err_steps, "step counts (repeatable)")
      ->delimiter(',')
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*map) {
      const SystemInput in = parse_input(map_input);
      const IntegralSet ints = load_integrals(in);
      const MappedSystem sys = map_system(ints, parse_mapping(map_mapping));
      // The core energy joins the identity coefficient so the file carries
      // the whole energy shift.
      std::vector<PauliTerm> terms = sys.op.terms();
      terms.push_back({sys.op.constant() + ints.core_energy(),
                       PauliString(sys.op.n_qubits())});
      const QubitOperator out =
          QubitOperator::from_terms(sys.op.n_qubits(), terms, 0.0);
      with_output(map_output, [&](std::ostream &o) { write_pauli_text(o, out); });
      return 0;
    }
    if (*compile) {
      auto f = open_input(comp_input);
      const QubitOperator op = read_pauli_text(f);
      const TrotterPlan plan = build_plan(
          order_terms(op, parse_ordering(comp_ordering),
                      parse_direction(comp_direction)),
          op.n_qubits(), comp_steps, comp_time, op.constant().real());
      const OptimizeOptions opts{parse_optimize_level(comp_opt), comp_window,
                                 comp_cross};
      const Circuit c = compile_plan(plan, parse_mode(comp_mode), opts);
      with_output(comp_output, [&](std::ostream &o) { write_circuit(o, c); });
      const GateCounts n = count_gates(c);
      std::cerr << "gates " << n.total << " entangling " << n.entangling
                << " single " << n.single_qubit << " rz " << n.non_clifford
                << '\n';
      return 0;
    }
    if (*optimize_cmd) {
      auto f = open_input(opt_input);
      const Circuit in = read_circuit(f);
      OptimizationReport rep;
      const Circuit out = optimize(
          in, {parse_optimize_level(opt_level), opt_window, false}, &rep);
      with_output(opt_output, [&](std::ostream &o) { write_circuit(o, out); });
      std::cerr << "removed per pass:";
      for (auto r : rep.removed_per_pass) std::cerr << ' ' << r;
      std::cerr << "\ngates " << in.gates.size() << " -> " << out.gates.size()
                << '\n';
      return 0;
    }
    if (*bench) {
      BenchConfig cfg = to_config(bench_inputs, bench_opts);
      cfg.trotter_error = bench_error;
      if (verbose) cfg.log = [](const std::string &s) { std::cerr << s << '\n'; };
      const auto fmt = parse_format(bench_opts.format);
      const auto rows = run_bench(cfg);
      with_output(bench_opts.output,
                  [&](std::ostream &o) { emit_report(o, rows, fmt); });
      for (const auto &r : rows) {
        if (r.failed()) return kCellFailure;
      }
      return 0;
    }
    if (*terr) {
      const BenchConfig cfg = to_config(err_inputs, err_opts);
      const auto fmt = parse_format(err_opts.format);
      const auto rows = run_error_sweep(cfg, err_steps);
      with_output(err_opts.output,
                  [&](std::ostream &o) { emit_error_report(o, rows, fmt); });
      for (const auto &r : rows) {
        if (!r.failure.empty()) return kCellFailure;
      }
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "fermiqc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
