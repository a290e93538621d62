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

#include "stabsearch/tableau.hpp"

#include <algorithm>
#include <bit>

#include "stabsearch/error.hpp"
#include "stabsearch/parallel.hpp"

namespace stabsearch {

namespace {

constexpr std::size_t kEnergyChunk = 1 << 15;

// Small fixed scratch for the common case (up to 256 qubits), heap beyond.
class Scratch {
 public:
  explicit Scratch(std::size_t words) {
    if (words > kInline) {
      heap_.resize(words);
    }
    size_ = words;
  }
  std::span<Word> span() {
    return {heap_.empty() ? inline_ : heap_.data(), size_};
  }

 private:
  static constexpr std::size_t kInline = 8;
  Word inline_[kInline] = {};
  std::vector<Word> heap_;
  std::size_t size_ = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h;
}

std::string generator_label(const std::vector<SignedPauli>& gens, std::size_t i) {
  return "#" + std::to_string(i + 1) + " (" + format_signed_pauli(gens[i]) + ")";
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::size_t n_qubits) : n_qubits_(n_qubits) {}

StabilizerTableau StabilizerTableau::from_generators(
    std::size_t n_qubits, std::span<const SignedPauli> generators) {
  StabilizerTableau t(n_qubits);
  std::vector<SignedPauli> seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.string.n_qubits() != n_qubits) {
      throw SizeMismatch("generator " + std::to_string(i + 1) + " has " +
                         std::to_string(g.string.n_qubits()) + " qubits, expected " +
                         std::to_string(n_qubits));
    }
    if (g.string.is_identity()) {
      throw TableauError("generator #" + std::to_string(i + 1) + " is the identity");
    }
    std::vector<SignedPauli> probe = seen;
    probe.push_back(g);
    auto outcome = t.try_add(g);
    switch (outcome.result) {
      case AddResult::Added:
        seen.push_back(g);
        break;
      case AddResult::Anticommutes:
        throw TableauError("generators " + generator_label(probe, *outcome.offending_generator) +
                           " and " + generator_label(probe, i) + " anticommute");
      case AddResult::DependentConsistent:
      case AddResult::DependentConflict: {
        auto d = t.decompose(g.string.x(), g.string.z());
        std::string parts;
        for (std::size_t j = 0; j < seen.size(); ++j) {
          if (bits::test(d->generator_mask, j)) {
            parts += (parts.empty() ? "" : ", ") + generator_label(probe, j);
          }
        }
        throw TableauError("generator " + generator_label(probe, i) +
                           " is a product of " + parts +
                           (outcome.result == AddResult::DependentConflict
                                ? " with opposite sign (group would contain -I)"
                                : ""));
      }
    }
  }
  return t;
}

bool StabilizerTableau::column_bit(std::span<const Word> xz, std::size_t column) const {
  const std::size_t n = n_qubits_;
  if (column < n) {
    return bits::test(xz.subspan(0, n_words()), n - 1 - column);
  }
  return bits::test(xz.subspan(n_words()), 2 * n - 1 - column);
}

std::optional<std::size_t> StabilizerTableau::leading_column(
    std::span<const Word> xz) const {
  const std::size_t nw = n_words();
  for (int half = 0; half < 2; ++half) {
    auto part = xz.subspan(half * nw, nw);
    for (std::size_t w = nw; w-- > 0;) {
      if (part[w] != 0) {
        std::size_t q = w * kWordBits + static_cast<std::size_t>(std::bit_width(part[w])) - 1;
        return half * n_qubits_ + (n_qubits_ - 1 - q);
      }
    }
  }
  return std::nullopt;
}

bool StabilizerTableau::reduce(std::span<Word> xz, unsigned& phase_xz,
                               std::span<Word> mask) const {
  const std::size_t nw = n_words();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    if (!column_bit(xz, pivots_[r])) {
      continue;
    }
    auto rr = row(r);
    // (X^a Z^b)(X^c Z^d) = (-1)^{b.c} X^{a+c} Z^{b+d}
    std::size_t cross = bits::and_count(xz.subspan(nw), rr.subspan(0, nw));
    phase_xz = static_cast<unsigned>((phase_xz + phases_[r] + 2 * cross) & 3U);
    for (std::size_t w = 0; w < xz.size(); ++w) {
      xz[w] ^= rr[w];
    }
    if (!mask.empty()) {
      auto rm = row_mask(r);
      for (std::size_t w = 0; w < mask.size(); ++w) {
        mask[w] ^= rm[w];
      }
    }
  }
  return bits::all_zero(xz);
}

std::optional<std::size_t> StabilizerTableau::anticommuting_generator(
    std::span<const Word> x, std::span<const Word> z) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i].string;
    if (!bits::commutes(x, z, g.x(), g.z())) {
      return i;
    }
  }
  return std::nullopt;
}

AddOutcome StabilizerTableau::try_add(const SignedPauli& candidate) {
  const auto& p = candidate.string;
  if (p.n_qubits() != n_qubits_) {
    throw SizeMismatch("try_add: candidate has " + std::to_string(p.n_qubits()) +
                       " qubits, tableau has " + std::to_string(n_qubits_));
  }
  if (p.is_identity()) {
    throw std::invalid_argument("try_add: identity is not a valid generator");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("try_add: generator must be Hermitian");
  }
  if (auto bad = anticommuting_generator(p.x(), p.z())) {
    return {AddResult::Anticommutes, bad};
  }

  const std::size_t nw = n_words();
  std::vector<Word> xz(stride());
  std::copy(p.x().begin(), p.x().end(), xz.begin());
  std::copy(p.z().begin(), p.z().end(), xz.begin() + static_cast<std::ptrdiff_t>(nw));
  const int sign = candidate.sign * (p.phase_exp() == 2 ? -1 : 1);
  unsigned phase = static_cast<unsigned>(bits::and_count(p.x(), p.z()) + (sign < 0 ? 2 : 0)) & 3U;
  std::vector<Word> mask(mask_words(), 0);

  if (reduce(xz, phase, mask)) {
    // candidate * (rows...) = i^phase I, and the rows multiply to a group
    // element, so the group holds the candidate with sign i^phase.
    if (phase % 2 != 0) {
      throw InvariantError("try_add: non-Hermitian group element");
    }
    return {phase == 0 ? AddResult::DependentConsistent : AddResult::DependentConflict,
            std::nullopt};
  }
  // i^e X^x Z^z is Hermitian iff e and the number of Y factors share parity.
  const std::span<const Word> rem(xz);
  if ((phase + bits::and_count(rem.subspan(0, nw), rem.subspan(nw))) % 2 != 0) {
    throw InvariantError("try_add: non-Hermitian remainder");
  }

  const std::size_t gi = generators_.size();
  mask[gi / kWordBits] ^= Word{1} << (gi % kWordBits);
  const std::size_t pivot = *leading_column(xz);

  // Clear the new pivot column from existing rows.
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    if (!column_bit(row(r), pivot)) {
      continue;
    }
    auto rr = row(r);
    std::size_t cross = bits::and_count(rr.subspan(nw), std::span<const Word>(xz).subspan(0, nw));
    phases_[r] = static_cast<std::uint8_t>((phases_[r] + phase + 2 * cross) & 3U);
    for (std::size_t w = 0; w < rr.size(); ++w) {
      rr[w] ^= xz[w];
    }
    auto rm = row_mask(r);
    for (std::size_t w = 0; w < rm.size(); ++w) {
      rm[w] ^= mask[w];
    }
  }

  const auto pos = static_cast<std::size_t>(
      std::upper_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos * stride()), xz.begin(), xz.end());
  masks_.insert(masks_.begin() + static_cast<std::ptrdiff_t>(pos * mask_words()), mask.begin(),
                mask.end());
  phases_.insert(phases_.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::uint8_t>(phase));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);

  SignedPauli stored = candidate;
  if (stored.string.phase_exp() == 2) {
    stored.sign = -stored.sign;
  }
  stored.string.set_phase_exp(0);
  generators_.push_back(std::move(stored));
  return {AddResult::Added, std::nullopt};
}

std::optional<Decomposition> StabilizerTableau::decompose(std::span<const Word> x,
                                                          std::span<const Word> z) const {
  if (x.size() != n_words() || z.size() != n_words()) {
    throw SizeMismatch("decompose: qubit counts differ");
  }
  Scratch s(stride());
  auto xz = s.span();
  std::copy(x.begin(), x.end(), xz.begin());
  std::copy(z.begin(), z.end(), xz.begin() + static_cast<std::ptrdiff_t>(n_words()));
  unsigned phase = static_cast<unsigned>(bits::and_count(x, z)) & 3U;
  Decomposition d;
  d.generator_mask.assign(mask_words(), 0);
  if (!reduce(xz, phase, d.generator_mask)) {
    return std::nullopt;
  }
  if (phase % 2 != 0) {
    throw InvariantError("membership: group element with imaginary phase");
  }
  d.sign = phase == 0 ? 1 : -1;
  return d;
}

std::optional<int> StabilizerTableau::membership_sign(std::span<const Word> x,
                                                      std::span<const Word> z) const {
  if (x.size() != n_words() || z.size() != n_words()) {
    throw SizeMismatch("membership_sign: qubit counts differ");
  }
  Scratch s(stride());
  auto xz = s.span();
  std::copy(x.begin(), x.end(), xz.begin());
  std::copy(z.begin(), z.end(), xz.begin() + static_cast<std::ptrdiff_t>(n_words()));
  unsigned phase = static_cast<unsigned>(bits::and_count(x, z)) & 3U;
  if (!reduce(xz, phase, {})) {
    return std::nullopt;
  }
  if (phase % 2 != 0) {
    throw InvariantError("membership: group element with imaginary phase");
  }
  return phase == 0 ? 1 : -1;
}

std::optional<int> StabilizerTableau::membership_sign(const PauliString& p) const {
  if (p.n_qubits() != n_qubits_) {
    throw SizeMismatch("membership_sign: qubit counts differ");
  }
  auto s = membership_sign(p.x(), p.z());
  if (s && p.phase_exp() == 2) {
    *s = -*s;
  }
  return s;
}

int StabilizerTableau::expectation(std::span<const Word> x, std::span<const Word> z) const {
  return membership_sign(x, z).value_or(0);
}

StabilizerTableau StabilizerTableau::canonical() const {
  StabilizerTableau t(n_qubits_);
  t.rows_ = rows_;
  t.phases_ = phases_;
  t.pivots_ = pivots_;
  t.masks_.assign(masks_.size(), 0);
  const std::size_t nw = n_words();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    t.row_mask(r)[r / kWordBits] |= Word{1} << (r % kWordBits);
    auto rr = row(r);
    PauliString s(n_qubits_, rr.subspan(0, nw), rr.subspan(nw));
    unsigned letter_phase =
        (phases_[r] + 4 - static_cast<unsigned>(bits::and_count(s.x(), s.z()) % 4)) & 3U;
    t.generators_.push_back({letter_phase == 0 ? 1 : -1, std::move(s)});
  }
  return t;
}

std::size_t StabilizerTableau::x_rank() const {
  return static_cast<std::size_t>(
      std::count_if(pivots_.begin(), pivots_.end(), [&](std::size_t c) { return c < n_qubits_; }));
}

bool StabilizerTableau::same_group(const StabilizerTableau& other) const {
  return canonical_compare(other) == std::strong_ordering::equal;
}

std::strong_ordering StabilizerTableau::canonical_compare(const StabilizerTableau& other) const {
  if (auto c = n_qubits_ <=> other.n_qubits_; c != 0) {
    return c;
  }
  if (auto c = pivots_.size() <=> other.pivots_.size(); c != 0) {
    return c;
  }
  if (auto c = pivots_ <=> other.pivots_; c != 0) {
    return c;
  }
  if (auto c = rows_ <=> other.rows_; c != 0) {
    return c;
  }
  return phases_ <=> other.phases_;
}

std::uint64_t StabilizerTableau::canonical_hash(std::uint64_t seed) const {
  std::uint64_t h = mix(seed, n_qubits_);
  for (Word w : rows_) {
    h = mix(h, w);
  }
  for (auto p : phases_) {
    h = mix(h, p);
  }
  return h;
}

int expectation(const StabilizerTableau& t, const PauliString& p) {
  if (p.n_qubits() != t.n_qubits()) {
    throw SizeMismatch("expectation: qubit counts differ");
  }
  int e = t.expectation(p.x(), p.z());
  return p.phase_exp() == 2 ? -e : e;
}

double energy(const StabilizerTableau& t, const PauliSum& h) {
  if (h.empty()) {
    return 0.0;
  }
  if (h.n_qubits() != t.n_qubits()) {
    throw SizeMismatch("energy: Hamiltonian has " + std::to_string(h.n_qubits()) +
                       " qubits, tableau has " + std::to_string(t.n_qubits()));
  }
  auto partial = detail::chunked_map<double>(
      h.size(), kEnergyChunk, [&](std::size_t begin, std::size_t end) {
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
          int e = t.expectation(h.x(i), h.z(i));
          if (e != 0) {
            acc += e * h.coefficient(i);
          }
        }
        return acc;
      });
  double total = 0.0;
  for (double p : partial) {
    total += p;
  }
  return total;
}

std::string describe(AddResult r) {
  switch (r) {
    case AddResult::Added: return "Added";
    case AddResult::DependentConsistent: return "DependentConsistent";
    case AddResult::DependentConflict: return "DependentConflict";
    case AddResult::Anticommutes: return "Anticommutes";
  }
  return "?";
}

}  // namespace stabsearch
