// Copyright 2026 The stabsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stabsearch/curve.hpp"
#include "stabsearch/io.hpp"
#include "stabsearch/tableau.hpp"
#include "support/dense.hpp"

namespace stabsearch {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(STABSEARCH_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    return r;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) {
    r.out.append(buf, n);
  }
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return testing::data_path(name).string(); }

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("stabsearch_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

TEST(Cli, EnergyMatchesLibraryToPrintedDigits) {
  const CliRun r = run("energy " + data("h2_0.74.ham") + " " + data("h2_hf.stab"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto s = read_stabilizers(data("h2_hf.stab"));
  const double e = energy(StabilizerTableau::from_generators(4, s.generators),
                          read_hamiltonian(data("h2_0.74.ham")));
  char expected[64];
  std::snprintf(expected, sizeof(expected), "energy: %.9f\n", e);
  EXPECT_EQ(r.out, expected);
  EXPECT_EQ(r.out, "energy: -1.831000000\n");
}

TEST(Cli, EnergyVerbose) {
  const CliRun r = run("energy --verbose " + data("h2_0.74.ham") + " " + data("h2_hf.stab"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.174 ZIZI +1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("0.045 XXYY 0\n"), std::string::npos) << r.out;
}

TEST(Cli, EnergyEmptyHamiltonian) {
  const fs::path d = scratch("empty");
  std::ofstream(d / "empty.ham") << "# no terms\n";
  const CliRun r = run("energy " + (d / "empty.ham").string() + " " + data("h2_hf.stab"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "energy: 0.000000000\n");
}

TEST(Cli, AnticommutingStabilizersNamed) {
  const fs::path d = scratch("anti");
  std::ofstream(d / "bad.stab") << "+XIII\n+ZIII\n";
  const CliRun r = run("energy " + data("h2_0.74.ham") + " " + (d / "bad.stab").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("+XIII"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("+ZIII"), std::string::npos) << r.out;
}

TEST(Cli, ParseErrorHasLineNumber) {
  const fs::path d = scratch("parse");
  std::ofstream(d / "bad.ham") << "# header\n0.5 ZZ\n0.1 ZQ\n";
  const CliRun r = run("search " + (d / "bad.ham").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("search").code, 1);
  EXPECT_EQ(run("search --beam notanumber x.ham").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SearchEquilibrium) {
  const fs::path d = scratch("search");
  const CliRun r = run("search " + data("h2_0.74.ham") + " --out " + d.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("candidates: 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("best_energy: -1.831000000"), std::string::npos);
  const auto s = read_stabilizers(d / "candidate_0.stab");
  const auto hf = read_stabilizers(data("h2_hf.stab"));
  EXPECT_TRUE(StabilizerTableau::from_generators(4, s.generators)
                  .same_group(StabilizerTableau::from_generators(4, hf.generators)));
}

TEST(Cli, SearchStretchedIsDeterministic) {
  const std::string args =
      "search " + data("h2_2.8.ham") + " --tie-tol 0.05 --enumerate-degenerate --seed 3";
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, 0);
  // The stats line carries wall time; compare everything else.
  auto strip = [](std::string s) {
    const auto p = s.find("terms_scanned");
    return s.erase(p, s.find('\n', p) - p);
  };
  EXPECT_EQ(strip(a.out), strip(b.out));
  EXPECT_NE(a.out.find("-XXXX"), std::string::npos);
  EXPECT_NE(a.out.find("degenerate_with [1,2,3,4]"), std::string::npos) << a.out;
}

TEST(Cli, Decode) {
  CliRun r = run("decode " + data("h2_hf.stab") + " --split 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.0 |01;01>\n");
  r = run("decode " + data("h2_spin_resonating.stab") + " --split 2");
  EXPECT_EQ(r.out, "0.707106781 |01;10>\n-0.707106781 |10;01>\n");
  r = run("decode " + data("h2o_pattern_odd.stab") + " --split 4");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  EXPECT_EQ(run("decode " + data("h2_stretched_partial.stab")).code, 2);
  EXPECT_EQ(run("decode " + data("h2o_pattern_odd.stab") + " --limit 4").code, 3);
}

TEST(Cli, OracleExact) {
  const CliRun r = run("oracle exact " + data("h2_0.74.ham"));
  EXPECT_EQ(r.code, 0);
  char expected[64];
  std::snprintf(expected, sizeof(expected), "ground_energy: %.9f\n",
                testing::dense_ground_energy(read_hamiltonian(data("h2_0.74.ham"))));
  EXPECT_EQ(r.out.substr(0, r.out.find('\n') + 1), expected);
  EXPECT_NE(r.out.find("residual: "), std::string::npos);
  EXPECT_NE(r.out.find("iterations: "), std::string::npos);
}

TEST(Cli, OracleCaps) {
  const fs::path d = scratch("caps");
  std::ofstream(d / "big.ham") << "1.0 " << std::string(21, 'Z') << "\n";
  std::ofstream(d / "five.ham") << "1.0 ZZZZZ\n";
  EXPECT_EQ(run("oracle exact " + (d / "big.ham").string()).code, 3);
  EXPECT_EQ(run("oracle enumerate " + (d / "five.ham").string()).code, 3);
  EXPECT_EQ(run("oracle " + data("h2_0.74.ham")).code, 1);
}

TEST(Cli, OracleEnumerate) {
  const CliRun r = run("oracle enumerate " + data("h2_0.74.ham"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("min_energy: -1.831000000\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("states_scanned: 36720\n"), std::string::npos);
}

TEST(Cli, Prune) {
  const fs::path d = scratch("prune");
  std::ofstream(d / "h.ham") << "%n_qubits 2\n1e-7 XX\n0.5 ZI\n-2e-6 YY\n";
  const CliRun r = run("prune " + (d / "h.ham").string() + " --prune 1e-6 --out " +
                    (d / "p.ham").string());
  EXPECT_EQ(r.code, 0) << r.out;
  const PauliSum p = read_hamiltonian(d / "p.ham");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(format_pauli(p.string(1)), "YY");
}

TEST(Cli, CurveWritesCsvAndRoundTrips) {
  const fs::path d = scratch("curve");
  const fs::path out = d / "h2.csv";
  const CliRun r = run("curve " + data("h2_curve.json") + " --jobs 2 --out " + out.string());
  EXPECT_EQ(r.code, 0) << r.out;
  std::ifstream in(out);
  const auto pts = parse_curve_csv(in);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].label, "d0.74");
  EXPECT_NEAR(pts[1].stabilizer_energy, -1.121, 1e-12);
  EXPECT_FALSE(fs::exists(out.string() + ".partial"));
}

TEST(Curve, FailureLeavesNoOutput) {
  const fs::path d = scratch("curve_fail");
  std::ofstream(d / "bad.ham") << "0.1 ZQ\n";
  std::ofstream(d / "m.json") << R"({"schema": "stabsearch-curve", "version": 1,
    "output": "out.csv", "entries": [
    {"label": "ok", "parameter": 1, "hamiltonian": ")"
                              << data("h2_0.74.ham") << R"("},
    {"label": "bad-entry", "parameter": 2, "hamiltonian": "bad.ham"}]})";
  const CliRun r = run("curve " + (d / "m.json").string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("bad-entry"), std::string::npos) << r.out;
  EXPECT_FALSE(fs::exists(d / "out.csv"));
  EXPECT_FALSE(fs::exists(d / "out.csv.partial"));
}

}  // namespace
}  // namespace stabsearch
