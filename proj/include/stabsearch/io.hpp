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
#include <span>
#include <string>
#include <vector>

#include "stabsearch/pauli.hpp"
#include "stabsearch/pauli_sum.hpp"

namespace stabsearch {

// Hamiltonian files: one `<coefficient> <pauli-string>` per line, `#`
// comments, optional `%n_qubits <N>` and `%meta <key> <value>` headers.
// Stabilizer files: one `<+|-><pauli-string>` per line with the same
// comment and header conventions.

PauliSum parse_hamiltonian(std::istream& in);
PauliSum read_hamiltonian(const std::filesystem::path& path);
void write_hamiltonian(std::ostream& out, const PauliSum& h);

struct StabilizerList {
  std::size_t n_qubits = 0;
  std::vector<SignedPauli> generators;
};

StabilizerList parse_stabilizers(std::istream& in);
StabilizerList read_stabilizers(const std::filesystem::path& path);
void write_stabilizers(std::ostream& out, std::size_t n_qubits,
                       std::span<const SignedPauli> generators);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Strict full-token parse of a decimal or scientific real; throws
/// ParseError on trailing garbage or non-finite values.
double parse_double(std::string_view token);

}  // namespace stabsearch
