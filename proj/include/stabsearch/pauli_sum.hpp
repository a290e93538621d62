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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stabsearch/pauli.hpp"

namespace stabsearch {

/// One Hamiltonian term. The string is +1-signed; the coefficient (Hartree)
/// carries all sign information.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

/// Ordered free-form labels such as molecule, bond length and basis.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// A qubit Hamiltonian: real coefficients on distinct Hermitian Pauli strings.
///
/// Terms are stored flat (coefficient array plus a strided word array) so
/// million-term sums stay cache friendly. Instances are immutable once built;
/// use PauliSumBuilder to construct one.
class PauliSum {
 public:
  PauliSum() = default;

  /// An empty sum on n qubits. n = 0 means "unspecified" and is compatible
  /// with any qubit count.
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t n_words() const { return words_for(n_qubits_); }
  std::size_t size() const { return coefficients_.size(); }
  bool empty() const { return coefficients_.empty(); }

  double coefficient(std::size_t i) const { return coefficients_[i]; }
  std::span<const double> coefficients() const { return coefficients_; }

  std::span<const Word> x(std::size_t i) const {
    return {words_.data() + 2 * n_words() * i, n_words()};
  }
  std::span<const Word> z(std::size_t i) const {
    return {words_.data() + 2 * n_words() * i + n_words(), n_words()};
  }

  PauliString string(std::size_t i) const;
  PauliTerm term(std::size_t i) const { return {coefficient(i), string(i)}; }
  bool is_identity(std::size_t i) const;

  const Metadata& metadata() const { return metadata_; }

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  friend class PauliSumBuilder;
  friend PauliSum prune(const PauliSum& h, double threshold);

  std::size_t n_qubits_ = 0;
  std::vector<double> coefficients_;
  std::vector<Word> words_;
  Metadata metadata_;
};

/// Accumulates terms and merges duplicates on build(). Merged terms keep the
/// position of their first occurrence; coefficients add.
class PauliSumBuilder {
 public:
  explicit PauliSumBuilder(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }

  void reserve(std::size_t n_terms);

  /// `p` must be Hermitian; its sign is folded into the coefficient.
  void add(double coefficient, const PauliString& p);
  void add(double coefficient, std::span<const Word> x, std::span<const Word> z);

  void add_metadata(std::string key, std::string value);

  PauliSum build() &&;

 private:
  std::size_t n_qubits_;
  std::vector<double> coefficients_;
  std::vector<Word> words_;
  Metadata metadata_;
};

/// Drops every term with |coefficient| < threshold, preserving order.
PauliSum prune(const PauliSum& h, double threshold);

}  // namespace stabsearch
