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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "stabsearch/pauli.hpp"
#include "stabsearch/tableau.hpp"

namespace stabsearch {

/// Explicit ket expansion of a pure stabilizer state.
///
/// The state is sum_j i^{phase_j} 2^{-k/2} |support_j>, where k is the
/// tableau's X rank. Support entries are packed basis bitstrings (qubit q at
/// bit q), sorted ascending, and the first amplitude is real positive.
struct DecodedState {
  std::size_t n_qubits = 0;
  std::size_t x_rank = 0;
  std::vector<std::vector<Word>> support;
  std::vector<unsigned> phases;

  double magnitude() const;
  std::complex<double> amplitude(std::size_t j) const;
  std::vector<std::complex<double>> amplitudes() const;
};

/// Throws TableauError for a degenerate tableau (g < n) and CapacityError
/// when 2^k exceeds `support_limit`.
DecodedState decode_state(const StabilizerTableau& t, std::size_t support_limit);

/// "|01;01>" style rendering; `split` is the number of leading characters
/// before the semicolon (0 or n for none).
std::string format_ket(std::span<const Word> basis, std::size_t n_qubits, std::size_t split);

/// Amplitude as a short real or imaginary literal, e.g. "1.0", "-0.707106781i".
std::string format_amplitude(std::complex<double> a);

}  // namespace stabsearch
