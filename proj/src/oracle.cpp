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

#include "stabsearch/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "stabsearch/error.hpp"

namespace stabsearch::oracle {

namespace {

void check_cap(std::size_t n_qubits) {
  if (n_qubits > kStatevectorCap) {
    throw CapacityError("statevector oracle supports at most " +
                        std::to_string(kStatevectorCap) + " qubits, got " +
                        std::to_string(n_qubits));
  }
}

const Amplitude kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct PauliMasks {
  std::size_t x = 0;
  std::size_t z = 0;
  unsigned phase_xz = 0;  // i^phase_xz X^x Z^z
};

PauliMasks masks_of(std::span<const Word> x, std::span<const Word> z, unsigned letter_phase) {
  PauliMasks m;
  if (!x.empty()) {
    m.x = static_cast<std::size_t>(x[0]);
    m.z = static_cast<std::size_t>(z[0]);
  }
  m.phase_xz = (letter_phase + static_cast<unsigned>(std::popcount(m.x & m.z))) & 3U;
  return m;
}

// out += c * P v
void accumulate(const PauliMasks& m, Amplitude c, const std::vector<Amplitude>& v,
                std::vector<Amplitude>& out) {
  const Amplitude base = c * kIPow[m.phase_xz];
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b] == Amplitude{}) {
      continue;
    }
    const bool odd = std::popcount(m.z & b) & 1;
    out[b ^ m.x] += (odd ? -base : base) * v[b];
  }
}

void axpy(Amplitude a, const std::vector<Amplitude>& x, std::vector<Amplitude>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] += a * x[i];
  }
}

Amplitude dot(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
  Amplitude s{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::conj(a[i]) * b[i];
  }
  return s;
}

double norm2(const std::vector<Amplitude>& a) { return std::sqrt(std::real(dot(a, a))); }

// Lowest diagonal entry of H, found by scanning every basis state.
std::size_t lowest_diagonal_state(const PauliSum& h, std::size_t dim) {
  std::vector<double> diag(dim, 0.0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!bits::all_zero(h.x(i))) {
      continue;
    }
    const std::size_t z = h.n_words() ? static_cast<std::size_t>(h.z(i)[0]) : 0;
    for (std::size_t b = 0; b < dim; ++b) {
      diag[b] += (std::popcount(z & b) & 1) ? -h.coefficient(i) : h.coefficient(i);
    }
  }
  return static_cast<std::size_t>(std::min_element(diag.begin(), diag.end()) - diag.begin());
}

}  // namespace

StateVector StateVector::zeros(std::size_t n_qubits) {
  check_cap(n_qubits);
  StateVector v;
  v.n_qubits_ = n_qubits;
  v.amplitudes_.assign(std::size_t{1} << n_qubits, Amplitude{});
  return v;
}

StateVector StateVector::basis(std::size_t n_qubits, std::size_t index) {
  StateVector v = zeros(n_qubits);
  v.amplitudes_.at(index) = 1.0;
  return v;
}

double StateVector::norm() const { return norm2(amplitudes_); }

void StateVector::normalize() {
  const double n = norm();
  for (auto& a : amplitudes_) {
    a /= n;
  }
}

Amplitude inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw SizeMismatch("inner: dimensions differ");
  }
  return dot(a.amplitudes(), b.amplitudes());
}

StateVector apply_pauli(const PauliString& p, const StateVector& v) {
  check_cap(p.n_qubits());
  if (p.n_qubits() != v.n_qubits()) {
    throw SizeMismatch("apply_pauli: qubit counts differ");
  }
  StateVector out = StateVector::zeros(v.n_qubits());
  accumulate(masks_of(p.x(), p.z(), p.phase_exp()), 1.0, v.amplitudes(), out.amplitudes());
  return out;
}

StateVector apply_hamiltonian(const PauliSum& h, const StateVector& v) {
  StateVector out = StateVector::zeros(v.n_qubits());
  if (h.empty()) {
    return out;
  }
  if (h.n_qubits() != v.n_qubits()) {
    throw SizeMismatch("apply_hamiltonian: qubit counts differ");
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    accumulate(masks_of(h.x(i), h.z(i), 0), h.coefficient(i), v.amplitudes(), out.amplitudes());
  }
  return out;
}

Amplitude expectation(const StateVector& v, const PauliString& p) {
  return inner(v, apply_pauli(p, v));
}

double energy(const StateVector& v, const PauliSum& h) {
  return std::real(inner(v, apply_hamiltonian(h, v)));
}

StateVector to_statevector(const DecodedState& s) {
  StateVector v = StateVector::zeros(s.n_qubits);
  for (std::size_t j = 0; j < s.support.size(); ++j) {
    const std::size_t index = s.n_qubits ? static_cast<std::size_t>(s.support[j][0]) : 0;
    v[index] = s.amplitude(j);
  }
  return v;
}

GroundState exact_ground_energy(const PauliSum& h, double tolerance,
                                std::size_t max_iterations) {
  const std::size_t n = h.n_qubits();
  check_cap(n);
  const std::size_t dim = std::size_t{1} << n;

  // Start: lowest-diagonal basis state plus a small fixed-seed perturbation.
  std::vector<Amplitude> start(dim);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (auto& a : start) {
    a = Amplitude(unit(rng), unit(rng)) * 0.05 / std::sqrt(static_cast<double>(dim));
  }
  start[lowest_diagonal_state(h, dim)] += 1.0;

  // Keep the Krylov basis under ~256 MiB.
  const std::size_t budget = (std::size_t{1} << 28) / (sizeof(Amplitude) * dim);
  const std::size_t max_basis = std::clamp<std::size_t>(budget, 4, 120);

  auto matvec = [&](const std::vector<Amplitude>& v) {
    std::vector<Amplitude> out(dim);
    for (std::size_t i = 0; i < h.size(); ++i) {
      accumulate(masks_of(h.x(i), h.z(i), 0), h.coefficient(i), v, out);
    }
    return out;
  };

  GroundState best;
  best.energy = std::numeric_limits<double>::infinity();
  best.residual = std::numeric_limits<double>::infinity();
  std::size_t matvecs = 0;

  std::vector<Amplitude> v0 = start;
  while (matvecs < max_iterations) {
    const double n0 = norm2(v0);
    for (auto& a : v0) {
      a /= n0;
    }
    std::vector<std::vector<Amplitude>> basis{v0};
    std::vector<double> alpha;
    std::vector<double> beta;
    const std::size_t m_cap = std::min(dim, max_basis);
    Eigen::VectorXd ritz;
    bool exhausted = false;

    for (std::size_t j = 0; j < m_cap && matvecs < max_iterations; ++j) {
      std::vector<Amplitude> w = matvec(basis[j]);
      ++matvecs;
      alpha.push_back(std::real(dot(basis[j], w)));
      // Full reorthogonalization, twice.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
          axpy(-dot(b, w), b, w);
        }
      }
      const double bnorm = norm2(w);

      Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
      Eigen::VectorXd e = Eigen::Map<Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(beta.size()));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
      solver.computeFromTridiagonal(d, e, Eigen::ComputeEigenvectors);
      ritz = solver.eigenvectors().col(0);
      const double estimate = bnorm * std::abs(ritz(ritz.size() - 1));

      if (bnorm < 1e-13 || estimate <= tolerance * 0.1 || j + 1 == dim) {
        exhausted = true;
        break;
      }
      if (j + 1 < m_cap) {
        for (auto& a : w) {
          a /= bnorm;
        }
        beta.push_back(bnorm);
        basis.push_back(std::move(w));
      }
    }

    // Ritz vector and its true residual.
    std::vector<Amplitude> y(dim);
    for (Eigen::Index i = 0; i < ritz.size(); ++i) {
      axpy(ritz(i), basis[static_cast<std::size_t>(i)], y);
    }
    const double ny = norm2(y);
    for (auto& a : y) {
      a /= ny;
    }
    std::vector<Amplitude> hy = matvec(y);
    ++matvecs;
    const double rayleigh = std::real(dot(y, hy));
    axpy(-rayleigh, y, hy);
    const double residual = norm2(hy);
    if (residual < best.residual) {
      best = {rayleigh, residual, matvecs};
    }
    if (residual <= tolerance || (exhausted && residual <= std::max(tolerance, 1e-9))) {
      return {rayleigh, residual, matvecs};
    }
    v0 = std::move(y);
  }
  throw ConvergenceError("exact_ground_energy: no convergence after " +
                             std::to_string(matvecs) + " matrix-vector products",
                         best);
}

void for_each_stabilizer_state(std::size_t n_qubits,
                               const std::function<void(const StabilizerTableau&)>& fn) {
  const std::size_t n = n_qubits;
  if (n == 0 || n > kEnumerationCap) {
    throw CapacityError("stabilizer enumeration supports 1.." +
                        std::to_string(kEnumerationCap) + " qubits, got " + std::to_string(n));
  }
  const std::size_t cols = 2 * n;
  // Column c < n is X on qubit n-1-c, otherwise Z on qubit 2n-1-c, matching
  // the tableau's echelon order. Rows are stored as column bitmasks.
  auto to_pauli = [&](unsigned row) {
    PauliString p(n);
    for (std::size_t c = 0; c < cols; ++c) {
      if (!((row >> c) & 1U)) {
        continue;
      }
      if (c < n) {
        bits::flip(p.x(), n - 1 - c);
      } else {
        bits::flip(p.z(), 2 * n - 1 - c);
      }
    }
    return p;
  };
  auto symplectic = [&](unsigned a, unsigned b) {
    unsigned ax = a & ((1U << n) - 1), az = a >> n;
    unsigned bx = b & ((1U << n) - 1), bz = b >> n;
    return (std::popcount(ax & bz) + std::popcount(az & bx)) & 1;
  };

  std::vector<unsigned> rows(n);
  for (unsigned pivots = 0; pivots < (1U << cols); ++pivots) {
    if (static_cast<std::size_t>(std::popcount(pivots)) != n) {
      continue;
    }
    std::vector<std::size_t> pcol;
    for (std::size_t c = 0; c < cols; ++c) {
      if ((pivots >> c) & 1U) {
        pcol.push_back(c);
      }
    }
    // Free positions: non-pivot columns to the right of each row's pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, column)
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = pcol[r] + 1; c < cols; ++c) {
        if (!((pivots >> c) & 1U)) {
          free.emplace_back(r, c);
        }
      }
    }
    for (std::size_t assign = 0; assign < (std::size_t{1} << free.size()); ++assign) {
      for (std::size_t r = 0; r < n; ++r) {
        rows[r] = 1U << pcol[r];
      }
      for (std::size_t f = 0; f < free.size(); ++f) {
        if ((assign >> f) & 1U) {
          rows[free[f].first] |= 1U << free[f].second;
        }
      }
      bool isotropic = true;
      for (std::size_t a = 0; a < n && isotropic; ++a) {
        for (std::size_t b = a + 1; b < n && isotropic; ++b) {
          isotropic = symplectic(rows[a], rows[b]) == 0;
        }
      }
      if (!isotropic) {
        continue;
      }
      std::vector<SignedPauli> gens(n);
      for (std::size_t r = 0; r < n; ++r) {
        gens[r].string = to_pauli(rows[r]);
      }
      for (unsigned signs = 0; signs < (1U << n); ++signs) {
        for (std::size_t r = 0; r < n; ++r) {
          gens[r].sign = ((signs >> (n - 1 - r)) & 1U) ? -1 : 1;
        }
        fn(StabilizerTableau::from_generators(n, gens).canonical());
      }
    }
  }
}

Enumeration enumerate_stabilizer_energies(const PauliSum& h, double tie_tolerance) {
  if (h.n_qubits() == 0 || h.n_qubits() > kEnumerationCap) {
    throw CapacityError("stabilizer enumeration supports 1.." +
                        std::to_string(kEnumerationCap) + " qubits, got " +
                        std::to_string(h.n_qubits()));
  }
  Enumeration out;
  out.min_energy = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, StabilizerTableau>> near;
  for_each_stabilizer_state(h.n_qubits(), [&](const StabilizerTableau& t) {
    ++out.states_scanned;
    const double e = stabsearch::energy(t, h);
    if (e < out.min_energy - tie_tolerance) {
      near.clear();
    }
    if (e <= out.min_energy + tie_tolerance) {
      near.emplace_back(e, t);
    }
    out.min_energy = std::min(out.min_energy, e);
  });
  for (auto& [e, t] : near) {
    if (e <= out.min_energy + tie_tolerance) {
      out.argmin.push_back(std::move(t));
    }
  }
  std::sort(out.argmin.begin(), out.argmin.end(),
            [](const StabilizerTableau& a, const StabilizerTableau& b) {
              return a.canonical_compare(b) < 0;
            });
  return out;
}

}  // namespace stabsearch::oracle
