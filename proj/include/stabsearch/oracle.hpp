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
#include <functional>
#include <stdexcept>
#include <vector>

#include "stabsearch/decode.hpp"
#include "stabsearch/pauli.hpp"
#include "stabsearch/pauli_sum.hpp"
#include "stabsearch/tableau.hpp"

/// Brute-force ground truth for small systems: statevectors, a matrix-free
/// Lanczos eigensolver, and exhaustive stabilizer-state enumeration.
namespace stabsearch::oracle {

inline constexpr std::size_t kStatevectorCap = 20;
inline constexpr std::size_t kEnumerationCap = 4;

using Amplitude = std::complex<double>;

class StateVector {
 public:
  /// |index> on n qubits. Throws CapacityError above kStatevectorCap.
  static StateVector basis(std::size_t n_qubits, std::size_t index);
  static StateVector zeros(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::vector<Amplitude>& amplitudes() { return amplitudes_; }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  Amplitude& operator[](std::size_t i) { return amplitudes_[i]; }
  Amplitude operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  void normalize();

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

Amplitude inner(const StateVector& a, const StateVector& b);  // <a|b>

/// P|v>, matrix-free: X/Y flip index bits, Y/Z contribute phases.
StateVector apply_pauli(const PauliString& p, const StateVector& v);

/// H|v> accumulated term by term.
StateVector apply_hamiltonian(const PauliSum& h, const StateVector& v);

/// <v|P|v>.
Amplitude expectation(const StateVector& v, const PauliString& p);

/// <v|H|v> (real part; H is Hermitian).
double energy(const StateVector& v, const PauliSum& h);

StateVector to_statevector(const DecodedState& s);

struct GroundState {
  double energy = 0.0;
  double residual = 0.0;  // ||H v - E v||
  std::size_t iterations = 0;  // matrix-vector products
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, GroundState best)
      : std::runtime_error(what), best_(best) {}
  const GroundState& best() const { return best_; }

 private:
  GroundState best_;
};

/// Lowest eigenvalue by restarted Lanczos with full reorthogonalization.
/// The start vector is the lowest-diagonal basis state plus a fixed-seed
/// perturbation, so results are reproducible.
GroundState exact_ground_energy(const PauliSum& h, double tolerance = 1e-10,
                                std::size_t max_iterations = 20000);

struct Enumeration {
  double min_energy = 0.0;
  std::vector<StabilizerTableau> argmin;  // canonical, sorted
  std::size_t states_scanned = 0;
};

/// Visits every pure n-qubit stabilizer state exactly once as a canonical
/// tableau: all reduced echelon Lagrangian subspaces times all 2^n signs.
void for_each_stabilizer_state(std::size_t n_qubits,
                               const std::function<void(const StabilizerTableau&)>& fn);

/// Exact minimum stabilizer energy over all states (n <= 4). States within
/// `tie_tolerance` Hartree of the minimum are all reported.
Enumeration enumerate_stabilizer_energies(const PauliSum& h, double tie_tolerance = 1e-10);

}  // namespace stabsearch::oracle
