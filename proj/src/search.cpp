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

#include "stabsearch/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "stabsearch/error.hpp"

namespace stabsearch {

namespace {

// Non-identity, non-zero terms by descending |c|, then letter order.
std::vector<std::size_t> scan_order(const PauliSum& h) {
  std::vector<std::size_t> order;
  order.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h.is_identity(i) && h.coefficient(i) != 0.0) {
      order.push_back(i);
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ca = std::abs(h.coefficient(a));
    const double cb = std::abs(h.coefficient(b));
    if (ca != cb) {
      return ca > cb;
    }
    return bits::letter_compare(h.x(a), h.z(a), h.x(b), h.z(b)) < 0;
  });
  return order;
}

int admission_sign(double c) { return c > 0 ? -1 : 1; }

struct Partial {
  StabilizerTableau tableau;
  double score = 0.0;
  // Scanned terms left undecided by a skip branch; they may become
  // determined by later generators.
  std::vector<std::size_t> pending;
};

void settle(Partial& p, const PauliSum& h) {
  std::erase_if(p.pending, [&](std::size_t i) {
    if (auto s = p.tableau.membership_sign(h.x(i), h.z(i))) {
      p.score += *s * h.coefficient(i);
      return true;
    }
    return p.tableau.anticommuting_generator(h.x(i), h.z(i)).has_value();
  });
}

void rank_beam(std::vector<Partial>& beam, std::size_t width, std::uint64_t seed) {
  // Drop duplicate groups, keeping the lowest score.
  std::stable_sort(beam.begin(), beam.end(), [](const Partial& a, const Partial& b) {
    auto c = a.tableau.canonical_compare(b.tableau);
    return c != 0 ? c < 0 : a.score < b.score;
  });
  auto last = std::unique(beam.begin(), beam.end(), [](const Partial& a, const Partial& b) {
    return a.tableau.same_group(b.tableau);
  });
  beam.erase(last, beam.end());

  std::vector<std::uint64_t> keys(beam.size());
  for (std::size_t i = 0; i < beam.size(); ++i) {
    keys[i] = beam[i].tableau.canonical_hash(seed);
  }
  std::vector<std::size_t> idx(beam.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (beam[a].score != beam[b].score) {
      return beam[a].score < beam[b].score;
    }
    if (keys[a] != keys[b]) {
      return keys[a] < keys[b];
    }
    return beam[a].tableau.canonical_compare(beam[b].tableau) < 0;
  });
  std::vector<Partial> out;
  out.reserve(std::min(width, idx.size()));
  for (std::size_t k = 0; k < idx.size() && k < width; ++k) {
    out.push_back(std::move(beam[idx[k]]));
  }
  beam = std::move(out);
}

bool tied(double larger, double smaller, double tolerance) {
  return tolerance > 0 && (larger - smaller) <= tolerance * larger;
}

SearchResult run_search(const PauliSum& input, const SearchConfig& config, bool branching) {
  const auto t0 = std::chrono::steady_clock::now();
  if (config.beam_width == 0) {
    throw std::invalid_argument("search: beam_width must be at least 1");
  }
  if (config.tie_tolerance < 0) {
    throw std::invalid_argument("search: tie_tolerance must be non-negative");
  }
  const PauliSum h = config.prune_threshold > 0 ? prune(input, config.prune_threshold) : input;
  if (h.empty() || h.n_qubits() == 0) {
    throw std::invalid_argument("search: Hamiltonian is empty after pruning");
  }
  const std::size_t n = h.n_qubits();
  const double tolerance = branching ? config.tie_tolerance : 0.0;
  std::size_t width = branching ? config.beam_width : 1;
  if (n > kLargeQubitCount) {
    width = std::min(width, kLargeBeam);
  }

  const auto order = scan_order(h);
  SearchResult result;
  std::vector<Partial> beam(1, Partial{StabilizerTableau(n), 0.0, {}});

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (std::all_of(beam.begin(), beam.end(),
                    [](const Partial& p) { return p.tableau.is_full(); })) {
      break;
    }
    result.stats.terms_scanned = pos + 1;
    const std::size_t i = order[pos];
    const double c = h.coefficient(i);
    const double mag = std::abs(c);
    const bool in_tie_band =
        (pos > 0 && tied(std::abs(h.coefficient(order[pos - 1])), mag, tolerance)) ||
        (pos + 1 < order.size() && tied(mag, std::abs(h.coefficient(order[pos + 1])), tolerance));

    std::vector<Partial> next;
    next.reserve(beam.size() * 2);
    bool split = false;
    for (auto& entry : beam) {
      auto& t = entry.tableau;
      if (t.anticommuting_generator(h.x(i), h.z(i))) {
        next.push_back(std::move(entry));
        continue;
      }
      if (auto s = t.membership_sign(h.x(i), h.z(i))) {
        entry.score += *s * c;
        next.push_back(std::move(entry));
        continue;
      }
      const SignedPauli candidate{admission_sign(c), h.string(i)};
      if (in_tie_band && result.stats.branches < config.max_branches) {
        Partial skip = entry;
        skip.pending.push_back(i);
        next.push_back(std::move(skip));
        ++result.stats.branches;
        split = true;
      }
      if (t.try_add(candidate).result != AddResult::Added) {
        throw InvariantError("search: admissible term was not added");
      }
      entry.score -= mag;
      settle(entry, h);
      next.push_back(std::move(entry));
    }
    if (split) {
      rank_beam(next, width, config.rng_seed);
    }
    beam = std::move(next);
  }

  // Complete every surviving partial tableau, plus the all-Z completion of
  // the empty tableau as a floor.
  const std::size_t per_entry = std::max<std::size_t>(config.max_results, 1);
  std::vector<StabilizerTableau> finals;
  for (const auto& entry : beam) {
    auto done = complete_tableau(entry.tableau, h, config.completion, per_entry);
    std::move(done.begin(), done.end(), std::back_inserter(finals));
  }
  auto floor = complete_tableau(StabilizerTableau(n), h, CompletionPolicy::DiagonalGreedy, 1);
  finals.push_back(std::move(floor.front()));

  std::vector<Candidate> pool;
  pool.reserve(finals.size());
  for (auto& t : finals) {
    StabilizerTableau final_t = config.hillclimb ? sign_hillclimb(t, h) : std::move(t);
    const double e = energy(final_t, h);
    pool.push_back({final_t.canonical(), e, {}});
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
    if (a.energy != b.energy) {
      return a.energy < b.energy;
    }
    return a.tableau.canonical_compare(b.tableau) < 0;
  });

  const double best = pool.front().energy;
  for (auto& cand : pool) {
    if (result.candidates.size() >= config.max_results && !result.candidates.empty()) {
      break;
    }
    if (cand.energy > best + config.energy_window) {
      break;
    }
    const bool duplicate =
        std::any_of(result.candidates.begin(), result.candidates.end(),
                    [&](const Candidate& kept) { return kept.tableau.same_group(cand.tableau); });
    if (!duplicate) {
      result.candidates.push_back(std::move(cand));
    }
  }
  for (std::size_t a = 0; a < result.candidates.size(); ++a) {
    for (std::size_t b = 0; b < result.candidates.size(); ++b) {
      if (a != b && std::abs(result.candidates[a].energy - result.candidates[b].energy) <=
                        kDegeneracyTolerance) {
        result.candidates[a].degenerate_with.push_back(b);
      }
    }
  }
  result.best_energy = result.candidates.front().energy;
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

// A Z-type string commuting with t and outside its group. Single-qubit Z
// first (lowest qubit first), then a null-space vector of the X parts.
PauliString fallback_z(const StabilizerTableau& t) {
  const std::size_t n = t.n_qubits();
  const std::size_t nw = words_for(n);
  for (std::size_t q = 0; q < n; ++q) {
    PauliString z(n);
    z.set(q, Pauli::Z);
    if (!t.anticommuting_generator(z.x(), z.z()) && !t.membership_sign(z.x(), z.z())) {
      return z;
    }
  }
  // Row-reduce the X parts; each free column yields a null-space vector.
  std::vector<std::vector<Word>> rows;
  for (const auto& g : t.generators()) {
    rows.emplace_back(g.string.x().begin(), g.string.x().end());
  }
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && !bits::test(rows[sel], col)) {
      ++sel;
    }
    if (sel == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[sel]);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o != r && bits::test(rows[o], col)) {
        for (std::size_t w = 0; w < nw; ++w) {
          rows[o][w] ^= rows[r][w];
        }
      }
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    PauliString z(n);
    z.set(f, Pauli::Z);
    for (std::size_t k = 0; k < pivot_of_row.size(); ++k) {
      if (bits::test(rows[k], f)) {
        z.set(pivot_of_row[k], Pauli::Z);
      }
    }
    if (!t.membership_sign(z.x(), z.z())) {
      return z;
    }
  }
  throw InvariantError("complete_tableau: no admissible Z-type completion");
}

struct Completion {
  StabilizerTableau tableau;
  std::vector<std::size_t> pending;
  std::size_t cursor = 0;
};

}  // namespace

SearchResult greedy_search(const PauliSum& h, const SearchConfig& config) {
  return run_search(h, config, false);
}

SearchResult branch_search(const PauliSum& h, const SearchConfig& config) {
  return run_search(h, config, true);
}

std::vector<StabilizerTableau> complete_tableau(const StabilizerTableau& t, const PauliSum& h,
                                                CompletionPolicy policy,
                                                std::size_t max_completions) {
  const std::size_t n = t.n_qubits();
  const std::size_t nw = words_for(n);
  if (!h.empty() && h.n_qubits() != n) {
    throw SizeMismatch("complete_tableau: qubit counts differ");
  }
  max_completions = std::max<std::size_t>(max_completions, 1);

  Completion start{t, {}, 0};
  std::vector<std::size_t> z_terms;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.is_identity(i) || h.coefficient(i) == 0.0) {
      continue;
    }
    if (t.anticommuting_generator(h.x(i), h.z(i)) || t.membership_sign(h.x(i), h.z(i))) {
      continue;
    }
    start.pending.push_back(i);
    if (bits::all_zero(h.x(i))) {
      z_terms.push_back(i);
    }
  }
  std::sort(z_terms.begin(), z_terms.end(), [&](std::size_t a, std::size_t b) {
    const double ca = std::abs(h.coefficient(a));
    const double cb = std::abs(h.coefficient(b));
    if (ca != cb) {
      return ca > cb;
    }
    return bits::letter_compare(h.x(a), h.z(a), h.x(b), h.z(b)) < 0;
  });

  std::vector<StabilizerTableau> results;
  std::vector<Completion> stack{std::move(start)};
  std::vector<Word> qz(nw);
  while (!stack.empty()) {
    Completion work = std::move(stack.back());
    stack.pop_back();
    auto& tab = work.tableau;
    while (!tab.is_full()) {
      while (work.cursor < z_terms.size() &&
             tab.membership_sign(h.x(z_terms[work.cursor]), h.z(z_terms[work.cursor]))) {
        ++work.cursor;
      }
      PauliString z;
      int preferred = 1;
      if (work.cursor < z_terms.size()) {
        z = h.string(z_terms[work.cursor]);
        preferred = admission_sign(h.coefficient(z_terms[work.cursor]));
      } else {
        z = fallback_z(tab);
      }

      // Adding s*z fixes each pending p with p*z = i^e q, q in the group
      // with sign sigma, to s * sigma * i^{-e}. Energy shift is s * drive.
      double drive = 0.0;
      for (std::size_t i : work.pending) {
        auto x = h.x(i);
        for (std::size_t w = 0; w < nw; ++w) {
          qz[w] = h.z(i)[w] ^ z.z()[w];
        }
        auto sigma = tab.membership_sign(x, qz);
        if (!sigma) {
          continue;
        }
        const std::size_t e = (bits::and_count(x, h.z(i)) + 4 * n - bits::and_count(x, qz)) % 4;
        drive += h.coefficient(i) * *sigma * (e == 0 ? 1 : -1);
      }

      int sign = preferred;
      if (std::abs(2 * drive) <= kDegeneracyTolerance) {
        if (policy == CompletionPolicy::EnumerateDegenerate &&
            results.size() + stack.size() + 1 < max_completions) {
          Completion alt = work;
          alt.tableau.try_add({-preferred, z});
          std::erase_if(alt.pending, [&](std::size_t i) {
            return alt.tableau.membership_sign(h.x(i), h.z(i)) ||
                   !bits::commutes(h.x(i), h.z(i), z.x(), z.z());
          });
          stack.push_back(std::move(alt));
        }
      } else {
        sign = drive > 0 ? -1 : 1;
      }
      if (tab.try_add({sign, z}).result != AddResult::Added) {
        throw InvariantError("complete_tableau: completion candidate rejected");
      }
      std::erase_if(work.pending, [&](std::size_t i) {
        return tab.membership_sign(h.x(i), h.z(i)) ||
               !bits::commutes(h.x(i), h.z(i), z.x(), z.z());
      });
    }
    results.push_back(std::move(tab));
  }
  return results;
}

StabilizerTableau sign_hillclimb(const StabilizerTableau& t, const PauliSum& h) {
  if (!t.is_full()) {
    throw std::invalid_argument("sign_hillclimb: tableau must have n generators");
  }
  const std::size_t g = t.size();
  std::vector<SignedPauli> gens(t.generators().begin(), t.generators().end());
  if (h.empty() || g == 0) {
    return t;
  }

  struct Member {
    double value;  // current c * <P>
    std::vector<std::size_t> gens;
  };
  std::vector<Member> members;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.is_identity(i)) {
      continue;
    }
    if (auto d = t.decompose(h.x(i), h.z(i))) {
      Member m{d->sign * h.coefficient(i), {}};
      for (std::size_t j = 0; j < g; ++j) {
        if (bits::test(d->generator_mask, j)) {
          m.gens.push_back(j);
        }
      }
      members.push_back(std::move(m));
    }
  }

  const double threshold = 1e-12;
  std::vector<double> single(g);
  std::vector<double> pair(g * g);
  for (;;) {
    std::fill(single.begin(), single.end(), 0.0);
    std::fill(pair.begin(), pair.end(), 0.0);
    for (const auto& m : members) {
      for (std::size_t a = 0; a < m.gens.size(); ++a) {
        single[m.gens[a]] += m.value;
        for (std::size_t b = a + 1; b < m.gens.size(); ++b) {
          pair[m.gens[a] * g + m.gens[b]] += m.value;
        }
      }
    }
    // Flipping a set F negates every member whose generator set meets F an
    // odd number of times.
    double best = -threshold;
    std::size_t bi = g;
    std::size_t bj = g;
    for (std::size_t i = 0; i < g; ++i) {
      if (-2 * single[i] < best) {
        best = -2 * single[i];
        bi = i;
        bj = g;
      }
      for (std::size_t j = i + 1; j < g; ++j) {
        const double delta = -2 * (single[i] + single[j] - 2 * pair[i * g + j]);
        if (delta < best) {
          best = delta;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == g) {
      break;
    }
    gens[bi].sign = -gens[bi].sign;
    if (bj != g) {
      gens[bj].sign = -gens[bj].sign;
    }
    for (auto& m : members) {
      bool odd = false;
      for (std::size_t j : m.gens) {
        odd ^= (j == bi) || (j == bj);
      }
      if (odd) {
        m.value = -m.value;
      }
    }
  }
  return StabilizerTableau::from_generators(t.n_qubits(), gens);
}

}  // namespace stabsearch
