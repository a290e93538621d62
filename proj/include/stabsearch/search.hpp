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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stabsearch/pauli_sum.hpp"
#include "stabsearch/tableau.hpp"

namespace stabsearch {

enum class CompletionPolicy {
  /// One completion; each added Z-type generator takes its lower-energy sign.
  DiagonalGreedy,
  /// Every sign choice whose energies tie within kDegeneracyTolerance.
  EnumerateDegenerate,
};

/// Energies closer than this (Hartree) are treated as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

struct SearchConfig {
  /// Consecutive sorted |c| within this relative band are branch-eligible.
  double tie_tolerance = 0.05;
  /// Partial tableaux kept after each branching step.
  std::size_t beam_width = 16;
  std::size_t max_results = 16;
  CompletionPolicy completion = CompletionPolicy::DiagonalGreedy;
  /// Terms with |c| below this are dropped before searching.
  double prune_threshold = 0.0;
  bool hillclimb = false;
  /// Breaks exact score ties when the beam is truncated.
  std::uint64_t rng_seed = 0;
  /// Total number of admit/skip splits allowed per search.
  std::size_t max_branches = 4096;
  /// Candidates more than this above the best energy are dropped.
  double energy_window = kDegeneracyTolerance;
};

/// Above this many qubits the beam is capped at kLargeBeam.
inline constexpr std::size_t kLargeQubitCount = 32;
inline constexpr std::size_t kLargeBeam = 8;

struct Candidate {
  StabilizerTableau tableau;  // canonical, g = n
  double energy = 0.0;
  /// Other candidates within kDegeneracyTolerance of this one.
  std::vector<std::size_t> degenerate_with;
};

struct SearchStats {
  std::size_t terms_scanned = 0;
  std::size_t branches = 0;
  double wall_seconds = 0.0;
};

struct SearchResult {
  std::vector<Candidate> candidates;  // ascending energy, distinct groups
  double best_energy = 0.0;
  SearchStats stats;
};

/// Scans non-identity terms by descending |c| and admits -sign(c) P whenever
/// it commutes with and is independent of the tableau so far; then completes
/// to n generators.
SearchResult greedy_search(const PauliSum& h, const SearchConfig& config);

/// Greedy scan that splits into admit/skip branches on terms whose |c| lies
/// within the tie band of a neighbour, keeping the best `beam_width` partial
/// tableaux by the energy of the terms scanned so far.
SearchResult branch_search(const PauliSum& h, const SearchConfig& config);

/// Extends t to n generators with Z-type strings from its centralizer,
/// Hamiltonian diagonal terms first. Each addition takes the sign that
/// minimizes the energy of the terms it newly determines. Never returns more
/// than `max_completions` tableaux.
std::vector<StabilizerTableau> complete_tableau(const StabilizerTableau& t, const PauliSum& h,
                                                CompletionPolicy policy,
                                                std::size_t max_completions = 256);

/// Local descent over generator signs: single flips and pair flips (a flip
/// after replacing one generator by its product with another). Stops at a
/// local minimum; the result never has higher energy than t.
StabilizerTableau sign_hillclimb(const StabilizerTableau& t, const PauliSum& h);

}  // namespace stabsearch
