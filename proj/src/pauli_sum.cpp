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

#include "stabsearch/pauli_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stabsearch/error.hpp"

namespace stabsearch {

PauliString PauliSum::string(std::size_t i) const {
  return PauliString(n_qubits_, x(i), z(i));
}

bool PauliSum::is_identity(std::size_t i) const {
  return bits::all_zero(x(i)) && bits::all_zero(z(i));
}

void PauliSumBuilder::reserve(std::size_t n_terms) {
  coefficients_.reserve(n_terms);
  words_.reserve(n_terms * 2 * words_for(n_qubits_));
}

void PauliSumBuilder::add(double coefficient, const PauliString& p) {
  if (p.n_qubits() != n_qubits_) {
    throw SizeMismatch("PauliSumBuilder::add: qubit counts differ");
  }
  add(coefficient * p.sign(), p.x(), p.z());
}

void PauliSumBuilder::add(double coefficient, std::span<const Word> x,
                          std::span<const Word> z) {
  const std::size_t nw = words_for(n_qubits_);
  if (x.size() != nw || z.size() != nw) {
    throw SizeMismatch("PauliSumBuilder::add: bit rows do not match qubit count");
  }
  if (!std::isfinite(coefficient)) {
    throw std::invalid_argument("PauliSumBuilder::add: non-finite coefficient");
  }
  coefficients_.push_back(coefficient);
  words_.insert(words_.end(), x.begin(), x.end());
  words_.insert(words_.end(), z.begin(), z.end());
}

void PauliSumBuilder::add_metadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

PauliSum PauliSumBuilder::build() && {
  const std::size_t stride = 2 * words_for(n_qubits_);
  const std::size_t n = coefficients_.size();
  auto key = [&](std::size_t i) {
    return std::span<const Word>(words_.data() + i * stride, stride);
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ka = key(a);
    auto kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });

  // For each original index, the first occurrence of its string; sums
  // accumulate in input order so merging is deterministic.
  std::vector<std::size_t> first(n);
  for (std::size_t r = 0; r < n;) {
    std::size_t s = r + 1;
    while (s < n && std::ranges::equal(key(order[r]), key(order[s]))) {
      ++s;
    }
    for (std::size_t t = r; t < s; ++t) {
      first[order[t]] = order[r];
    }
    r = s;
  }

  std::vector<double> merged(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    merged[first[i]] += coefficients_[i];
  }

  PauliSum out(n_qubits_);
  out.metadata_ = std::move(metadata_);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < n; ++i) {
    kept += first[i] == i ? 1 : 0;
  }
  out.coefficients_.reserve(kept);
  out.words_.reserve(kept * stride);
  for (std::size_t i = 0; i < n; ++i) {
    if (first[i] != i) {
      continue;
    }
    out.coefficients_.push_back(merged[i]);
    auto k = key(i);
    out.words_.insert(out.words_.end(), k.begin(), k.end());
  }
  coefficients_.clear();
  words_.clear();
  return out;
}

PauliSum prune(const PauliSum& h, double threshold) {
  PauliSum out(h.n_qubits());
  out.metadata_ = h.metadata_;
  const std::size_t stride = 2 * h.n_words();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (std::abs(h.coefficient(i)) < threshold) {
      continue;
    }
    out.coefficients_.push_back(h.coefficient(i));
    auto begin = h.words_.begin() + static_cast<std::ptrdiff_t>(i * stride);
    out.words_.insert(out.words_.end(), begin, begin + static_cast<std::ptrdiff_t>(stride));
  }
  return out;
}

}  // namespace stabsearch
