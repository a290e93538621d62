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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stabsearch/search.hpp"

namespace stabsearch {

/// One geometry of a dissociation sweep.
struct CurveEntry {
  std::string label;
  double parameter = 0.0;  // bond length in Angstrom or a scale factor
  std::filesystem::path hamiltonian;
  std::vector<std::pair<std::string, double>> references;  // method -> Hartree
};

/// JSON sweep description, schema "stabsearch-curve" version 1:
///
///   {
///     "schema": "stabsearch-curve", "version": 1,
///     "output": "h2.csv",
///     "exact_reference": true,
///     "search": {"tie_tolerance": 0.05, "beam_width": 16, ...},
///     "entries": [{"label": "d0.74", "parameter": 0.74,
///                  "hamiltonian": "h2_0.74.ham",
///                  "references": {"hf": -1.117}}]
///   }
///
/// Relative paths resolve against the manifest's directory.
struct CurveManifest {
  std::vector<CurveEntry> entries;
  std::filesystem::path output;
  bool exact_reference = false;  // adds an "exact" column from the oracle
  SearchConfig search;
};

struct CurvePoint {
  std::string label;
  double parameter = 0.0;
  double stabilizer_energy = 0.0;
  std::size_t n_candidates = 0;
  std::size_t degeneracy = 1;
  std::vector<std::pair<std::string, std::optional<double>>> references;
  double wall_time = 0.0;
};

/// A sweep entry failed; carries the entry label.
class CurveError : public std::runtime_error {
 public:
  CurveError(const std::string& label, const std::string& what)
      : std::runtime_error("entry '" + label + "': " + what), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

/// Throws ParseError on schema violations, non-monotone parameters, or
/// unresolvable paths.
CurveManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir);
CurveManifest read_manifest(const std::filesystem::path& path);

/// Reference column names in first-appearance order, then "exact" if enabled.
std::vector<std::string> reference_columns(const CurveManifest& m);

/// Runs branch_search on every entry, up to `jobs` at a time. Points come
/// back in manifest order.
std::vector<CurvePoint> run_curve(const CurveManifest& m, const SearchConfig& config,
                                  unsigned jobs = 1);

/// Columns: label,parameter,stabilizer_energy,degeneracy,<references...>,wall_time_s
void write_curve_csv(std::ostream& out, std::span<const CurvePoint> points,
                     std::span<const std::string> reference_columns);
std::vector<CurvePoint> parse_curve_csv(std::istream& in);

}  // namespace stabsearch
