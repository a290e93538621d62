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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabsearch/pauli.hpp"
#include "stabsearch/pauli_sum.hpp"

namespace stabsearch {

enum class AddResult { Added, DependentConsistent, DependentConflict, Anticommutes };

struct AddOutcome {
  AddResult result = AddResult::Added;
  /// For Anticommutes: index of the first generator the candidate fails to
  /// commute with.
  std::optional<std::size_t> offending_generator;
};

/// A group element expressed over the tableau's generators.
struct Decomposition {
  int sign = 1;
  std::vector<Word> generator_mask;  // bit i set when generator i participates
};

/// Rejected generator list, e.g. from a stabilizer file.
class TableauError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A stabilizer group given by g <= n signed, commuting, independent
/// generators.
///
/// Alongside the generators the tableau keeps a fully reduced row-echelon
/// form of the group over GF(2)^{2n}, with an exact power-of-i phase per row.
/// Column order is all X columns (qubit n-1 down to 0) followed by all Z
/// columns, so X-type rows come first. The echelon form is unique for a given
/// group, which makes it the canonical form; it is updated incrementally by
/// try_add so membership queries never re-eliminate.
class StabilizerTableau {
 public:
  StabilizerTableau() = default;
  explicit StabilizerTableau(std::size_t n_qubits);

  /// Adds generators in order. Throws TableauError naming the offending
  /// generators on anticommutation, dependence, or sign conflict.
  static StabilizerTableau from_generators(std::size_t n_qubits,
                                           std::span<const SignedPauli> generators);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return generators_.size(); }
  bool is_full() const { return size() == n_qubits_; }
  std::span<const SignedPauli> generators() const { return generators_; }

  AddOutcome try_add(const SignedPauli& candidate);

  /// +1 / -1 when the +1-signed string p (up to sign) is in the group.
  std::optional<int> membership_sign(const PauliString& p) const;
  std::optional<int> membership_sign(std::span<const Word> x,
                                     std::span<const Word> z) const;

  /// Same as membership_sign but also reports which generators multiply to p.
  std::optional<Decomposition> decompose(std::span<const Word> x,
                                         std::span<const Word> z) const;

  /// Expectation of p: its group sign if p is in the group, otherwise 0.
  /// Strings that commute with the group without belonging to it score 0.
  int expectation(std::span<const Word> x, std::span<const Word> z) const;

  /// Index of the first generator anticommuting with (x, z), if any.
  std::optional<std::size_t> anticommuting_generator(std::span<const Word> x,
                                                     std::span<const Word> z) const;

  /// Generators replaced by the echelon rows in pivot order.
  StabilizerTableau canonical() const;

  /// Number of echelon rows with an X pivot.
  std::size_t x_rank() const;

  bool same_group(const StabilizerTableau& other) const;

  /// Total order on groups via their echelon rows; equal iff same_group.
  std::strong_ordering canonical_compare(const StabilizerTableau& other) const;

  /// Hash of the canonical form, mixed with `seed`.
  std::uint64_t canonical_hash(std::uint64_t seed = 0) const;

 private:
  std::size_t n_words() const { return words_for(n_qubits_); }
  std::size_t mask_words() const { return words_for(n_qubits_); }
  std::size_t stride() const { return 2 * n_words(); }

  std::span<const Word> row(std::size_t r) const {
    return {rows_.data() + r * stride(), stride()};
  }
  std::span<Word> row(std::size_t r) { return {rows_.data() + r * stride(), stride()}; }
  std::span<const Word> row_mask(std::size_t r) const {
    return {masks_.data() + r * mask_words(), mask_words()};
  }
  std::span<Word> row_mask(std::size_t r) {
    return {masks_.data() + r * mask_words(), mask_words()};
  }

  bool column_bit(std::span<const Word> xz, std::size_t column) const;
  std::optional<std::size_t> leading_column(std::span<const Word> xz) const;

  /// Multiplies `xz` (phase `phase_xz`, X^x Z^z form) by every row whose
  /// pivot it hits. Returns true when the remainder is the identity.
  bool reduce(std::span<Word> xz, unsigned& phase_xz, std::span<Word> mask) const;

  std::size_t n_qubits_ = 0;
  std::vector<SignedPauli> generators_;

  // Echelon rows: x words then z words per row, with an X^x Z^z phase
  // exponent, pivot column, and generator mask. Sorted by pivot.
  std::vector<Word> rows_;
  std::vector<std::uint8_t> phases_;
  std::vector<std::size_t> pivots_;
  std::vector<Word> masks_;
};

inline AddOutcome try_add(StabilizerTableau& t, const SignedPauli& candidate) {
  return t.try_add(candidate);
}

inline std::optional<int> membership_sign(const StabilizerTableau& t, const PauliString& p) {
  return t.membership_sign(p);
}

int expectation(const StabilizerTableau& t, const PauliString& p);

/// Sum of c_i * expectation(t, P_i). Terms are split into fixed-size chunks
/// that may run concurrently; partial sums are added in chunk order so the
/// result does not depend on the number of workers.
double energy(const StabilizerTableau& t, const PauliSum& h);

inline StabilizerTableau canonicalize(const StabilizerTableau& t) { return t.canonical(); }

std::string describe(AddResult r);

}  // namespace stabsearch
