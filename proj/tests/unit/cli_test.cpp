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

// Drives the fermiqc executable end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <gtest/gtest.h>

#include "fermiqc/bench.hpp"
#include "fermiqc/circuits.hpp"
#include "fermiqc/qubit_operator.hpp"
#include "test_util.hpp"

namespace fermiqc {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fermiqc_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string &args) {
    const std::string cmd = std::string("\"") + FERMIQC_CLI + "\" " + args + " 2>" +
                            (dir_ / "stderr.txt").string();
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

TEST_F(Cli, MapCompileOptimizePipeline) {
  const std::string h2 = testing::data_path("h2_sto3g.fcidump");
  ASSERT_EQ(run("map " + h2 + " --mapping bk -o " + path("h2.pauli")), 0);
  std::ifstream pf(path("h2.pauli"));
  const auto op = read_pauli_text(pf);
  EXPECT_EQ(op.n_qubits(), 4u);
  EXPECT_EQ(op.size(), 14u);
  // Identity carries the core energy as well.
  EXPECT_NEAR(op.constant().real(), -0.098863969335455493, 1e-12);

  ASSERT_EQ(run("compile " + path("h2.pauli") + " --ordering lex --mode canonical -o " +
                path("c.txt")),
            0);
  std::ifstream cf(path("c.txt"));
  const auto raw = read_circuit(cf);
  EXPECT_EQ(count_gates(raw).non_clifford, 14u);

  ASSERT_EQ(run("optimize " + path("c.txt") + " -o " + path("o.txt")), 0);
  std::ifstream of(path("o.txt"));
  const auto opt = read_circuit(of);
  EXPECT_LT(opt.gates.size(), raw.gates.size());
  EXPECT_LT(testing::max_abs_diff(testing::circuit_oracle(opt), testing::circuit_oracle(raw)), 1e-10);
}

TEST_F(Cli, BenchIsByteIdentical) {
  const std::string args = "bench " + testing::data_path("h2_sto3g.fcidump") +
                           " synthetic:8:5 --ordering magnitude,random:3 --mode canonical,ancilla"
                           " --trotter-error --format json";
  ASSERT_EQ(run(args + " --workers 1 -o " + path("a.json")), 0);
  ASSERT_EQ(run(args + " --workers 3 -o " + path("b.json")), 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  std::ifstream in(path("a.json"));
  EXPECT_EQ(parse_report(in, ReportFormat::Json).size(), 2u * 2 * 2 * 2);
}

TEST_F(Cli, FailedCellGivesExitTwo) {
  EXPECT_EQ(run("bench /nonexistent.fcidump " + testing::data_path("h2_sto3g.fcidump") + " -o " +
                path("r.csv")),
            2);
  const auto csv = slurp(path("r.csv"));
  EXPECT_NE(csv.find("failed:"), std::string::npos);
  EXPECT_NE(csv.find("h2_sto3g,4,jw"), std::string::npos);
}

TEST_F(Cli, TrotterErrorSweep) {
  ASSERT_EQ(run("trotter-error " + testing::data_path("h2_sto3g.fcidump") +
                " --ordering magnitude --steps 1,100 -o " + path("e.csv")),
            0);
  const auto csv = slurp(path("e.csv"));
  EXPECT_EQ(csv.rfind("system,n_qubits,mapping,ordering,seed,n_steps,time,exact_energy,"
                      "estimated_energy,error,overlap,status\n", 0),
            0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST_F(Cli, BadArgumentsAreRejected) {
  EXPECT_NE(run("compile /nonexistent.pauli"), 0);
  EXPECT_NE(run("bench " + testing::data_path("h2_sto3g.fcidump") + " --mapping parity"), 0);
}

}  // namespace
}  // namespace fermiqc
