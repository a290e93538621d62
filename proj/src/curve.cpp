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

#include "stabsearch/curve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "stabsearch/error.hpp"
#include "stabsearch/io.hpp"
#include "stabsearch/oracle.hpp"

namespace stabsearch {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "stabsearch-curve";
constexpr int kVersion = 1;

SearchConfig parse_search(const json& j) {
  SearchConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "tie_tolerance") {
      c.tie_tolerance = value.get<double>();
    } else if (key == "beam_width") {
      c.beam_width = value.get<std::size_t>();
    } else if (key == "max_results") {
      c.max_results = value.get<std::size_t>();
    } else if (key == "enumerate_degenerate") {
      c.completion = value.get<bool>() ? CompletionPolicy::EnumerateDegenerate
                                       : CompletionPolicy::DiagonalGreedy;
    } else if (key == "prune") {
      c.prune_threshold = value.get<double>();
    } else if (key == "hillclimb") {
      c.hillclimb = value.get<bool>();
    } else if (key == "seed") {
      c.rng_seed = value.get<std::uint64_t>();
    } else if (key == "max_branches") {
      c.max_branches = value.get<std::size_t>();
    } else if (key == "energy_window") {
      c.energy_window = value.get<double>();
    } else {
      throw ParseError("manifest: unknown search setting '" + key + "'");
    }
  }
  return c;
}

bool csv_safe(const std::string& s) {
  return s.find_first_of(",\"\n\r") == std::string::npos;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

}  // namespace

CurveManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  CurveManifest m;
  try {
    if (j.value("schema", std::string()) != kSchema) {
      throw ParseError(std::string("manifest: expected \"schema\": \"") + kSchema + "\"");
    }
    if (j.value("version", 0) != kVersion) {
      throw ParseError("manifest: unsupported version (expected " + std::to_string(kVersion) + ")");
    }
    m.output = base_dir / j.at("output").get<std::string>();
    m.exact_reference = j.value("exact_reference", false);
    if (j.contains("search")) {
      m.search = parse_search(j.at("search"));
    }
    for (const auto& e : j.at("entries")) {
      CurveEntry entry;
      entry.label = e.at("label").get<std::string>();
      entry.parameter = e.at("parameter").get<double>();
      entry.hamiltonian = base_dir / e.at("hamiltonian").get<std::string>();
      if (e.contains("references")) {
        for (const auto& [k, v] : e.at("references").items()) {
          entry.references.emplace_back(k, v.get<double>());
        }
      }
      if (!csv_safe(entry.label)) {
        throw ParseError("manifest: label '" + entry.label + "' contains CSV metacharacters");
      }
      m.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  if (m.entries.empty()) {
    throw ParseError("manifest: no entries");
  }
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < m.entries.size(); ++i) {
    up = up && m.entries[i].parameter > m.entries[i - 1].parameter;
    down = down && m.entries[i].parameter < m.entries[i - 1].parameter;
  }
  if (!up && !down) {
    throw ParseError("manifest: parameters must be strictly monotone");
  }
  for (const auto& e : m.entries) {
    if (!std::filesystem::is_regular_file(e.hamiltonian)) {
      throw ParseError("manifest: entry '" + e.label + "': cannot find '" +
                       e.hamiltonian.string() + "'");
    }
  }
  return m;
}

CurveManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  return parse_manifest(in, path.parent_path());
}

std::vector<std::string> reference_columns(const CurveManifest& m) {
  std::vector<std::string> cols;
  for (const auto& e : m.entries) {
    for (const auto& [name, value] : e.references) {
      if (std::find(cols.begin(), cols.end(), name) == cols.end()) {
        cols.push_back(name);
      }
    }
  }
  if (m.exact_reference && std::find(cols.begin(), cols.end(), "exact") == cols.end()) {
    cols.emplace_back("exact");
  }
  return cols;
}

std::vector<CurvePoint> run_curve(const CurveManifest& m, const SearchConfig& config,
                                  unsigned jobs) {
  const auto columns = reference_columns(m);
  std::vector<CurvePoint> points(m.entries.size());
  std::vector<std::exception_ptr> errors(m.entries.size());

  auto run_one = [&](std::size_t k) {
    const auto& entry = m.entries[k];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const PauliSum h = read_hamiltonian(entry.hamiltonian);
      const SearchResult r = branch_search(h, config);
      CurvePoint p;
      p.label = entry.label;
      p.parameter = entry.parameter;
      p.stabilizer_energy = r.best_energy;
      p.n_candidates = r.candidates.size();
      p.degeneracy = 1 + r.candidates.front().degenerate_with.size();
      for (const auto& col : columns) {
        std::optional<double> value;
        for (const auto& [name, v] : entry.references) {
          if (name == col) {
            value = v;
          }
        }
        if (col == "exact" && m.exact_reference && !value &&
            h.n_qubits() <= oracle::kStatevectorCap) {
          value = oracle::exact_ground_energy(h).energy;
        }
        p.references.emplace_back(col, value);
      }
      p.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      points[k] = std::move(p);
    } catch (const std::exception& e) {
      errors[k] = std::make_exception_ptr(CurveError(entry.label, e.what()));
    }
  };

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(m.entries.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < m.entries.size(); k = next++) {
      run_one(k);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < jobs; ++w) {
      pool.emplace_back(worker);
    }
    worker();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return points;
}

void write_curve_csv(std::ostream& out, std::span<const CurvePoint> points,
                     std::span<const std::string> reference_columns) {
  out << "label,parameter,stabilizer_energy,degeneracy";
  for (const auto& c : reference_columns) {
    out << ',' << c;
  }
  out << ",wall_time_s\n";
  for (const auto& p : points) {
    out << p.label << ',' << format_double(p.parameter) << ','
        << format_double(p.stabilizer_energy) << ',' << p.degeneracy;
    for (const auto& c : reference_columns) {
      out << ',';
      for (const auto& [name, v] : p.references) {
        if (name == c && v) {
          out << format_double(*v);
        }
      }
    }
    out << ',' << format_double(p.wall_time) << '\n';
  }
}

std::vector<CurvePoint> parse_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("curve csv: missing header");
  }
  const auto header = split_csv(line);
  if (header.size() < 5 || header[0] != "label" || header[1] != "parameter" ||
      header[2] != "stabilizer_energy" || header[3] != "degeneracy" ||
      header.back() != "wall_time_s") {
    throw ParseError("curve csv: unexpected header", 1);
  }
  std::vector<CurvePoint> points;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) {
      continue;
    }
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw ParseError("curve csv: expected " + std::to_string(header.size()) + " cells", row);
    }
    try {
      CurvePoint p;
      p.label = cells[0];
      p.parameter = parse_double(cells[1]);
      p.stabilizer_energy = parse_double(cells[2]);
      p.degeneracy = static_cast<std::size_t>(std::stoul(cells[3]));
      for (std::size_t c = 4; c + 1 < cells.size(); ++c) {
        std::optional<double> v;
        if (!cells[c].empty()) {
          v = parse_double(cells[c]);
        }
        p.references.emplace_back(header[c], v);
      }
      p.wall_time = parse_double(cells.back());
      points.push_back(std::move(p));
    } catch (const std::logic_error&) {
      throw ParseError("curve csv: bad number", row);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), row);
    }
  }
  return points;
}

}  // namespace stabsearch
