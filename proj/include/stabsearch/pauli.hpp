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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabsearch {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n_qubits) {
  return (n_qubits + kWordBits - 1) / kWordBits;
}

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Word-parallel kernels over packed X/Z bit rows. Qubit q lives at bit
/// q % 64 of word q / 64. All spans passed together must have equal length.
namespace bits {

inline bool test(std::span<const Word> row, std::size_t q) {
  return (row[q / kWordBits] >> (q % kWordBits)) & 1U;
}

inline void flip(std::span<Word> row, std::size_t q) {
  row[q / kWordBits] ^= Word{1} << (q % kWordBits);
}

bool all_zero(std::span<const Word> row);

/// Parity of <x1, z2> + <z1, x2>; true when the two strings commute.
bool commutes(std::span<const Word> x1, std::span<const Word> z1,
              std::span<const Word> x2, std::span<const Word> z2);

/// Number of qubits set in both rows.
std::size_t and_count(std::span<const Word> a, std::span<const Word> b);

/// Letter-order comparison (I < X < Y < Z), most significant qubit first,
/// matching the textual order of formatted strings.
std::strong_ordering letter_compare(std::span<const Word> x1,
                                    std::span<const Word> z1,
                                    std::span<const Word> x2,
                                    std::span<const Word> z2);

}  // namespace bits

/// An n-qubit Pauli operator i^phase_exp * P_{n-1} (x) ... (x) P_0 with each
/// P_q in {I, X, Y, Z}. The phase is relative to the letter product, so a
/// Hermitian string has an even phase and a +1-signed one has phase 0.
///
/// Bits are stored packed: x words then z words. A qubit carries X when only
/// x is set, Z when only z is set, and Y when both are.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(std::size_t n_qubits);

  PauliString(std::size_t n_qubits, std::span<const Word> x,
              std::span<const Word> z, unsigned phase_exp = 0);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t n_words() const { return bits_.size() / 2; }

  std::span<const Word> x() const { return {bits_.data(), n_words()}; }
  std::span<const Word> z() const { return {bits_.data() + n_words(), n_words()}; }
  std::span<Word> x() { return {bits_.data(), n_words()}; }
  std::span<Word> z() { return {bits_.data() + n_words(), n_words()}; }

  unsigned phase_exp() const { return phase_; }
  void set_phase_exp(unsigned e) { phase_ = static_cast<std::uint8_t>(e & 3U); }

  Pauli at(std::size_t qubit) const;
  void set(std::size_t qubit, Pauli p);

  bool is_identity() const;  // ignores phase
  bool is_hermitian() const { return phase_ % 2 == 0; }
  bool is_z_type() const;    // no X or Y factors
  std::size_t weight() const;

  /// +1 or -1 for Hermitian strings; throws InvariantError otherwise.
  int sign() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Word> bits_;
  std::uint8_t phase_ = 0;
};

/// Parses an unsigned string of I/X/Y/Z; the leftmost character is qubit
/// n-1. Throws ParseError on bad length or characters.
PauliString parse_pauli(std::string_view text, std::size_t n_qubits);

/// Letters only; the phase is not rendered.
std::string format_pauli(const PauliString& p);

/// Exact product p*q including the accumulated power of i.
PauliString multiply(const PauliString& p, const PauliString& q);

bool commutes(const PauliString& p, const PauliString& q);

/// Letter-order comparison ignoring phase; see bits::letter_compare.
std::strong_ordering letter_compare(const PauliString& p, const PauliString& q);

/// A Hermitian Pauli string with an explicit sign, e.g. -ZIZI.
struct SignedPauli {
  int sign = 1;
  PauliString string;  // phase 0

  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// Parses "+ZIZI" / "-ZIZI". A missing sign means +.
SignedPauli parse_signed_pauli(std::string_view text, std::size_t n_qubits);
std::string format_signed_pauli(const SignedPauli& p);

/// Builds a SignedPauli from a Hermitian string, moving its phase into the sign.
SignedPauli to_signed(const PauliString& p);

}  // namespace stabsearch
