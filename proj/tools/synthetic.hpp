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

// Deterministic synthetic Hamiltonian with the term families a Jordan-Wigner
// molecular Hamiltonian produces: number terms Z_p, density couplings Z_p Z_q,
// hopping X_p Z..Z X_q and Y_p Z..Z Y_q, hopping dressed by a spectator Z_r,
// and double-excitation strings over four spin orbitals with an even number
// of Y factors. Magnitudes are log-uniform within each family.

#include <cmath>
#include <cstdint>
#include <random>

#include "stabsearch/pauli_sum.hpp"

namespace stabsearch::synthetic {

struct Options {
  std::size_t n_qubits = 72;
  std::size_t n_terms = 2'500'000;
  std::uint64_t seed = 20240607;
};

namespace detail {

class Emitter {
 public:
  Emitter(const Options& o, PauliSumBuilder& b)
      : n_(o.n_qubits), words_(words_for(o.n_qubits)), b_(b), rng_(o.seed),
        x_(words_), z_(words_) {}

  void reset() {
    std::fill(x_.begin(), x_.end(), 0);
    std::fill(z_.begin(), z_.end(), 0);
  }
  void put(std::size_t q, char c) {
    const Word bit = Word{1} << (q % kWordBits);
    if (c == 'X' || c == 'Y') x_[q / kWordBits] ^= bit;
    if (c == 'Z' || c == 'Y') z_[q / kWordBits] ^= bit;
  }
  // Z on every qubit strictly between lo and hi.
  void parity(std::size_t lo, std::size_t hi) {
    for (std::size_t q = lo + 1; q < hi; ++q) {
      put(q, 'Z');
    }
  }
  void emit(double lo_exp, double hi_exp) {
    std::uniform_real_distribution<double> e(lo_exp, hi_exp);
    const double mag = std::pow(10.0, e(rng_));
    b_.add(rng_() & 1 ? mag : -mag, x_, z_);
    ++count_;
  }
  std::mt19937_64& rng() { return rng_; }
  std::size_t count() const { return count_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::size_t words_;
  PauliSumBuilder& b_;
  std::mt19937_64 rng_;
  std::vector<Word> x_, z_;
  std::size_t count_ = 0;
};

}  // namespace detail

inline PauliSum generate(const Options& o = {}) {
  PauliSumBuilder b(o.n_qubits);
  b.reserve(o.n_terms);
  detail::Emitter em(o, b);
  const std::size_t n = o.n_qubits;
  const std::size_t half = n / 2;
  auto spin = [&](std::size_t q) { return q >= half; };
  auto done = [&] { return em.count() + 1 >= o.n_terms; };  // +1 for the identity

  em.reset();
  b.add(-200.0, std::vector<Word>(words_for(n)), std::vector<Word>(words_for(n)));
  for (std::size_t p = 0; p < n && !done(); ++p) {
    em.reset();
    em.put(p, 'Z');
    em.emit(-1.0, 0.0);
  }
  for (std::size_t p = 0; p < n && !done(); ++p) {
    for (std::size_t q = p + 1; q < n && !done(); ++q) {
      em.reset();
      em.put(p, 'Z');
      em.put(q, 'Z');
      em.emit(-2.0, -0.7);
    }
  }
  // Spin-conserving hopping, plain and dressed by one spectator Z.
  for (std::size_t p = 0; p < n && !done(); ++p) {
    for (std::size_t q = p + 1; q < n && !done(); ++q) {
      if (spin(p) != spin(q)) {
        continue;
      }
      for (char c : {'X', 'Y'}) {
        em.reset();
        em.put(p, c);
        em.parity(p, q);
        em.put(q, c);
        em.emit(-3.0, -1.0);
        for (std::size_t r = 0; r < n && !done(); ++r) {
          if (r == p || r == q) {
            continue;
          }
          em.reset();
          em.put(p, c);
          em.parity(p, q);
          em.put(q, c);
          em.put(r, 'Z');
          em.emit(-4.0, -2.0);
        }
      }
    }
  }
  // Double excitations: spin-conserving quadruples p<q<r<s, eight X/Y
  // patterns each, sampled in lexicographic order until the budget is met.
  static constexpr const char* kPatterns[] = {"XXXX", "YYYY", "XXYY", "YYXX",
                                              "XYXY", "YXYX", "XYYX", "YXXY"};
  const double quads = std::pow(static_cast<double>(n), 4) / 24.0 * 0.375 * 8.0;
  const double want = static_cast<double>(o.n_terms - std::min(o.n_terms, em.count() + 1));
  std::bernoulli_distribution keep(std::min(1.0, 1.15 * want / quads));
  for (std::size_t p = 0; p < n && !done(); ++p) {
    for (std::size_t q = p + 1; q < n && !done(); ++q) {
      for (std::size_t r = q + 1; r < n && !done(); ++r) {
        for (std::size_t s = r + 1; s < n && !done(); ++s) {
          const int ups = spin(p) + spin(q) + spin(r) + spin(s);
          if (ups % 2 != 0) {
            continue;
          }
          for (const char* pat : kPatterns) {
            if (done() || !keep(em.rng())) {
              continue;
            }
            em.reset();
            em.put(p, pat[0]);
            em.parity(p, q);
            em.put(q, pat[1]);
            em.put(r, pat[2]);
            em.parity(r, s);
            em.put(s, pat[3]);
            em.emit(-8.0, -2.0);
          }
        }
      }
    }
  }
  return std::move(b).build();
}

}  // namespace stabsearch::synthetic
