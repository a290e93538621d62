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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stabsearch/curve.hpp"
#include "stabsearch/decode.hpp"
#include "stabsearch/error.hpp"
#include "stabsearch/io.hpp"
#include "stabsearch/oracle.hpp"
#include "stabsearch/search.hpp"
#include "stabsearch/tableau.hpp"

namespace fs = std::filesystem;
using namespace stabsearch;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3, kInternal = 4 };

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", v);
  return buf;
}

struct SearchFlags {
  double tie_tol = SearchConfig{}.tie_tolerance;
  std::size_t beam = SearchConfig{}.beam_width;
  std::size_t max_results = SearchConfig{}.max_results;
  bool enumerate_degenerate = false;
  bool hillclimb = false;
  double prune = 0.0;
  std::uint64_t seed = 0;

  CLI::Option* tie_opt = nullptr;
  CLI::Option* beam_opt = nullptr;
  CLI::Option* max_opt = nullptr;
  CLI::Option* enum_opt = nullptr;
  CLI::Option* hill_opt = nullptr;
  CLI::Option* prune_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  void attach(CLI::App* app) {
    tie_opt = app->add_option("--tie-tol", tie_tol, "Relative tie band for branching");
    beam_opt = app->add_option("--beam", beam, "Beam width");
    max_opt = app->add_option("--max-results", max_results, "Maximum candidates reported");
    enum_opt = app->add_flag("--enumerate-degenerate", enumerate_degenerate,
                             "Return every degenerate completion");
    hill_opt = app->add_flag("--hillclimb", hillclimb, "Refine signs by local descent");
    prune_opt = app->add_option("--prune", prune, "Drop terms with |c| below this (Hartree)");
    seed_opt = app->add_option("--seed", seed, "Tie-breaking seed");
  }

  // Flags given on the command line override `base`.
  SearchConfig apply(SearchConfig base) const {
    if (tie_opt->count()) base.tie_tolerance = tie_tol;
    if (beam_opt->count()) base.beam_width = beam;
    if (max_opt->count()) base.max_results = max_results;
    if (enum_opt->count()) base.completion = CompletionPolicy::EnumerateDegenerate;
    if (hill_opt->count()) base.hillclimb = true;
    if (prune_opt->count()) base.prune_threshold = prune;
    if (seed_opt->count()) base.rng_seed = seed;
    return base;
  }
};

int cmd_energy(const std::string& ham_path, const std::string& stab_path, bool verbose) {
  const PauliSum h = read_hamiltonian(ham_path);
  const StabilizerList s = read_stabilizers(stab_path);
  const auto t = StabilizerTableau::from_generators(s.n_qubits, s.generators);
  if (!h.empty() && h.n_qubits() != s.n_qubits) {
    throw SizeMismatch("Hamiltonian has " + std::to_string(h.n_qubits()) +
                       " qubits, stabilizers have " + std::to_string(s.n_qubits));
  }
  if (verbose) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const int e = t.expectation(h.x(i), h.z(i));
      std::cout << format_double(h.coefficient(i)) << ' ' << format_pauli(h.string(i)) << ' '
                << (e > 0 ? "+1" : e < 0 ? "-1" : "0") << '\n';
    }
  }
  std::cout << "energy: " << fixed9(energy(t, h)) << '\n';
  return kOk;
}

void print_candidates(const SearchResult& r) {
  std::cout << "candidates: " << r.candidates.size() << '\n';
  std::cout << "best_energy: " << fixed9(r.best_energy) << '\n';
  std::cout << "terms_scanned: " << r.stats.terms_scanned << " branches: " << r.stats.branches
            << " wall_time_s: " << format_double(r.stats.wall_seconds) << '\n';
  for (std::size_t k = 0; k < r.candidates.size(); ++k) {
    const auto& c = r.candidates[k];
    std::cout << "candidate " << k << " energy " << fixed9(c.energy) << " degenerate_with [";
    for (std::size_t j = 0; j < c.degenerate_with.size(); ++j) {
      std::cout << (j ? "," : "") << c.degenerate_with[j];
    }
    std::cout << "]\n";
    for (const auto& g : c.tableau.generators()) {
      std::cout << "  " << format_signed_pauli(g) << '\n';
    }
  }
}

int cmd_search(const std::string& ham_path, const SearchConfig& config, const std::string& out_dir) {
  const PauliSum h = read_hamiltonian(ham_path);
  const SearchResult r = branch_search(h, config);
  print_candidates(r);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t k = 0; k < r.candidates.size(); ++k) {
      const auto& t = r.candidates[k].tableau;
      std::ofstream f(fs::path(out_dir) / ("candidate_" + std::to_string(k) + ".stab"));
      f << "# energy " << format_double(r.candidates[k].energy) << '\n';
      write_stabilizers(f, t.n_qubits(), t.generators());
    }
  }
  return kOk;
}

int cmd_decode(const std::string& stab_path, std::size_t limit, std::size_t split) {
  const StabilizerList s = read_stabilizers(stab_path);
  const auto t = StabilizerTableau::from_generators(s.n_qubits, s.generators);
  const DecodedState state = decode_state(t, limit);
  for (std::size_t j = 0; j < state.support.size(); ++j) {
    std::cout << format_amplitude(state.amplitude(j)) << ' '
              << format_ket(state.support[j], state.n_qubits, split) << '\n';
  }
  return kOk;
}

int cmd_curve(const std::string& manifest_path, const SearchFlags& flags, unsigned jobs,
              const std::string& out_override) {
  const CurveManifest m = read_manifest(manifest_path);
  const fs::path out = out_override.empty() ? m.output : fs::path(out_override);
  const fs::path partial = out.string() + ".partial";
  try {
    const auto points = run_curve(m, flags.apply(m.search), jobs);
    {
      std::ofstream f(partial);
      const auto cols = reference_columns(m);
      write_curve_csv(f, points, cols);
      if (!f) {
        throw std::runtime_error("cannot write '" + partial.string() + "'");
      }
    }
    fs::rename(partial, out);
    std::cout << "wrote " << points.size() << " points to " << out.string() << '\n';
  } catch (...) {
    std::error_code ec;
    fs::remove(partial, ec);
    throw;
  }
  return kOk;
}

int cmd_oracle_exact(const std::string& ham_path, double tol) {
  const PauliSum h = read_hamiltonian(ham_path);
  try {
    const auto g = oracle::exact_ground_energy(h, tol);
    std::cout << "ground_energy: " << fixed9(g.energy) << '\n'
              << "residual: " << format_double(g.residual) << '\n'
              << "iterations: " << g.iterations << '\n';
  } catch (const oracle::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "; best estimate " << fixed9(e.best().energy)
              << " (residual " << format_double(e.best().residual) << ")\n";
    return kCapacity;
  }
  return kOk;
}

int cmd_oracle_enumerate(const std::string& ham_path) {
  const PauliSum h = read_hamiltonian(ham_path);
  const auto r = oracle::enumerate_stabilizer_energies(h);
  std::cout << "min_energy: " << fixed9(r.min_energy) << '\n'
            << "states_scanned: " << r.states_scanned << '\n'
            << "argmin: " << r.argmin.size() << '\n';
  for (std::size_t k = 0; k < r.argmin.size(); ++k) {
    std::cout << "state " << k << '\n';
    for (const auto& g : r.argmin[k].generators()) {
      std::cout << "  " << format_signed_pauli(g) << '\n';
    }
  }
  return kOk;
}

int cmd_prune(const std::string& ham_path, double threshold, const std::string& out) {
  const PauliSum h = read_hamiltonian(ham_path);
  const PauliSum p = prune(h, threshold);
  if (out.empty()) {
    write_hamiltonian(std::cout, p);
  } else {
    std::ofstream f(out);
    write_hamiltonian(f, p);
  }
  std::cerr << "kept " << p.size() << " of " << h.size() << " terms\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-state ground-state approximation for qubit Hamiltonians"};
  app.require_subcommand(1);

  std::string ham_path;
  std::string stab_path;
  std::string out;
  bool verbose = false;
  std::size_t limit = 4096;
  std::size_t split = 0;
  unsigned jobs = 1;
  double tol = 1e-10;
  double prune_threshold = 1e-6;
  SearchFlags search_flags;
  SearchFlags curve_flags;

  auto* energy = app.add_subcommand("energy", "Energy of a stabilizer state");
  energy->add_option("hamiltonian", ham_path)->required();
  energy->add_option("stabilizers", stab_path)->required();
  energy->add_flag("--verbose", verbose, "Print each term's expectation");

  auto* search = app.add_subcommand("search", "Find low-energy stabilizer states");
  search->add_option("hamiltonian", ham_path)->required();
  search_flags.attach(search);
  search->add_option("--out", out, "Directory for candidate stabilizer files");

  auto* decode = app.add_subcommand("decode", "Expand a stabilizer state into kets");
  decode->add_option("stabilizers", stab_path)->required();
  decode->add_option("--limit", limit, "Maximum number of kets");
  decode->add_option("--split", split, "Characters before the ';' in each ket");

  auto* curve = app.add_subcommand("curve", "Run a dissociation-curve sweep");
  std::string manifest;
  curve->add_option("manifest", manifest)->required();
  curve_flags.attach(curve);
  curve->add_option("--jobs", jobs, "Entries run concurrently");
  curve->add_option("--out", out, "CSV path (overrides the manifest)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference results");
  oracle_cmd->require_subcommand(1);
  auto* exact = oracle_cmd->add_subcommand("exact", "Exact ground energy (n <= 20)");
  exact->add_option("hamiltonian", ham_path)->required();
  exact->add_option("--tol", tol, "Residual tolerance");
  auto* enumerate = oracle_cmd->add_subcommand("enumerate", "Best stabilizer state (n <= 4)");
  enumerate->add_option("hamiltonian", ham_path)->required();

  auto* prune_cmd = app.add_subcommand("prune", "Drop small terms from a Hamiltonian");
  prune_cmd->add_option("hamiltonian", ham_path)->required();
  prune_cmd->add_option("--prune", prune_threshold, "Threshold in Hartree");
  prune_cmd->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*energy) return cmd_energy(ham_path, stab_path, verbose);
    if (*search) return cmd_search(ham_path, search_flags.apply(SearchConfig{}), out);
    if (*decode) return cmd_decode(stab_path, limit, split);
    if (*curve) return cmd_curve(manifest, curve_flags, jobs, out);
    if (*exact) return cmd_oracle_exact(ham_path, tol);
    if (*enumerate) return cmd_oracle_enumerate(ham_path);
    if (*prune_cmd) return cmd_prune(ham_path, prune_threshold, out);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const CurveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kUsage;
}
