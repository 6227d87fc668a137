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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermiqc/circuits.hpp"
#include "fermiqc/fermion.hpp"
#include "fermiqc/mappings.hpp"
#include "fermiqc/optimizer.hpp"
#include "fermiqc/qubit_operator.hpp"
#include "fermiqc/simulator.hpp"
#include "fermiqc/trotter.hpp"

namespace fermiqc {

/**
 * A bench input: an FCIDUMP path, or "synthetic:<spin-orbitals>[:<seed>
 * [:<density>]]" for the random integral generator (density defaults to 1).
 */
struct SystemInput {
  std::string id;  // file stem, or synthetic_n<N>_s<seed>
  std::string path;
  bool synthetic = false;
  std::size_t n_spin_orbitals = 0;
  std::uint64_t seed = 0;
  double density = 1.0;
};

SystemInput parse_input(std::string_view spec);
IntegralSet load_integrals(const SystemInput &in);

/// The mapped Hamiltonian plus the classical energy shift.
struct MappedSystem {
  QubitOperator op;
  double core_energy = 0.0;
  double offset() const { return op.constant().real() + core_energy; }
};

MappedSystem map_system(const IntegralSet &ints, MappingScheme scheme);

enum class ReportFormat { Csv, Json };
ReportFormat parse_format(std::string_view text);

struct BenchConfig {
  std::vector<std::string> inputs;
  std::vector<MappingScheme> mappings{MappingScheme::JordanWigner,
                                      MappingScheme::BravyiKitaev};
  std::vector<OrderingStrategy> orderings{OrderingStrategy::magnitude()};
  std::vector<SynthesisMode> modes{SynthesisMode::Canonical};
  MagnitudeDirection direction = MagnitudeDirection::Descending;
  OptimizeOptions optimize;
  std::size_t n_steps = 1;
  double time = 1.0;
  bool trotter_error = false;
  std::size_t error_qubit_limit = kDefaultSimulationQubitLimit;
  std::size_t workers = 1;
  /// Optional progress sink, called once per finished cell from any worker.
  std::function<void(const std::string &)> log;
};

/// Throws std::invalid_argument for an empty input, mapping or ordering set.
void validate(const BenchConfig &cfg);

struct BenchRow {
  std::string system;
  std::size_t n_qubits = 0;
  MappingScheme mapping = MappingScheme::JordanWigner;
  OrderingStrategy ordering;
  SynthesisMode mode = SynthesisMode::Canonical;
  GateCounts raw;
  GateCounts optimized;
  double savings = 0.0;
  std::optional<double> trotter_error;
  std::string failure;                           // empty on success
  std::vector<std::uint64_t> removed_per_pass;  // JSON only

  bool failed() const { return !failure.empty(); }
  friend bool operator==(const BenchRow &, const BenchRow &) = default;
};

/// Sorted by (system, mapping, ordering, mode). Failures stay in their row.
std::vector<BenchRow> run_bench(const BenchConfig &cfg);

inline constexpr std::string_view kCsvHeader =
    "system,n_qubits,mapping,ordering,seed,mode,raw_total,raw_entangling,"
    "raw_single,raw_nonclifford,opt_total,opt_entangling,opt_single,"
    "opt_nonclifford,savings,trotter_error";

void emit_report(std::ostream &out, const std::vector<BenchRow> &rows,
                 ReportFormat format);
std::vector<BenchRow> parse_report(std::istream &in, ReportFormat format);

/// One row of the trotter-error subcommand.
struct ErrorRow {
  std::string system;
  std::size_t n_qubits = 0;
  MappingScheme mapping = MappingScheme::JordanWigner;
  OrderingStrategy ordering;
  TrotterErrorReport report;
  std::string failure;
};

/**
 * Trotter error of every (input, mapping, ordering, n_steps) cell. The time
 * is shrunk per system until the branch condition holds. Systems above the
 * qubit limit fail their cells rather than the sweep.
 */
std::vector<ErrorRow> run_error_sweep(const BenchConfig &cfg,
                                      const std::vector<std::size_t> &steps);

void emit_error_report(std::ostream &out, const std::vector<ErrorRow> &rows,
                       ReportFormat format);

}  // namespace fermiqc
