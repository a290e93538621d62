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

#include "stabsearch/decode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "stabsearch/error.hpp"

namespace stabsearch {

namespace {

PauliString as_operator(const SignedPauli& g) {
  PauliString p = g.string;
  p.set_phase_exp(g.sign < 0 ? 2 : 0);
  return p;
}

bool basis_less(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t w = a.size(); w-- > 0;) {
    if (a[w] != b[w]) {
      return a[w] < b[w];
    }
  }
  return false;
}

}  // namespace

double DecodedState::magnitude() const {
  return std::pow(2.0, -0.5 * static_cast<double>(x_rank));
}

std::complex<double> DecodedState::amplitude(std::size_t j) const {
  static const std::complex<double> kUnit[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kUnit[phases[j] & 3U] * magnitude();
}

std::vector<std::complex<double>> DecodedState::amplitudes() const {
  std::vector<std::complex<double>> out;
  out.reserve(phases.size());
  for (std::size_t j = 0; j < phases.size(); ++j) {
    out.push_back(amplitude(j));
  }
  return out;
}

DecodedState decode_state(const StabilizerTableau& t, std::size_t support_limit) {
  if (!t.is_full()) {
    throw TableauError("decode: tableau has " + std::to_string(t.size()) +
                       " generators for " + std::to_string(t.n_qubits()) +
                       " qubits; the state is not unique");
  }
  const StabilizerTableau c = t.canonical();
  const std::size_t n = t.n_qubits();
  const std::size_t k = c.x_rank();
  if (k >= 63 || (std::size_t{1} << k) > support_limit) {
    throw CapacityError("decode: support of 2^" + std::to_string(k) +
                        " kets exceeds the limit of " + std::to_string(support_limit));
  }
  auto gens = c.generators();

  // Z-type rows fix the pivot bits of a reference basis state.
  std::vector<Word> ref(words_for(n), 0);
  for (std::size_t r = k; r < gens.size(); ++r) {
    const auto& z = gens[r].string.z();
    std::size_t q = 0;
    for (std::size_t w = z.size(); w-- > 0;) {
      if (z[w] != 0) {
        q = w * kWordBits + static_cast<std::size_t>(std::bit_width(z[w])) - 1;
        break;
      }
    }
    if (gens[r].sign < 0) {
      bits::flip(ref, q);
    }
  }

  // Sum over the subgroup generated by the X-type rows applied to |ref>;
  // distinct elements land on distinct basis states.
  DecodedState out;
  out.n_qubits = n;
  out.x_rank = k;
  const std::size_t count = std::size_t{1} << k;
  out.support.reserve(count);
  out.phases.reserve(count);
  PauliString element(n);
  for (std::size_t m = 0; m < count; ++m) {
    if (m > 0) {
      element = multiply(element, as_operator(gens[static_cast<std::size_t>(std::countr_zero(m))]));
    }
    // X^x Z^z |b> = (-1)^{z.b} |b ^ x>
    std::size_t e = element.phase_exp() + bits::and_count(element.x(), element.z()) +
                    2 * (bits::and_count(element.z(), ref) % 2);
    std::vector<Word> b = ref;
    for (std::size_t w = 0; w < b.size(); ++w) {
      b[w] ^= element.x()[w];
    }
    out.support.push_back(std::move(b));
    out.phases.push_back(static_cast<unsigned>(e % 4));
  }

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return basis_less(out.support[a], out.support[b]);
  });
  const unsigned shift = 4 - out.phases[order[0]];
  DecodedState sorted;
  sorted.n_qubits = n;
  sorted.x_rank = k;
  for (std::size_t j : order) {
    sorted.support.push_back(std::move(out.support[j]));
    sorted.phases.push_back((out.phases[j] + shift) & 3U);
  }
  return sorted;
}

std::string format_ket(std::span<const Word> basis, std::size_t n_qubits, std::size_t split) {
  std::string s = "|";
  for (std::size_t i = 0; i < n_qubits; ++i) {
    if (i == split && split != 0) {
      s += ';';
    }
    s += bits::test(basis, n_qubits - 1 - i) ? '1' : '0';
  }
  s += '>';
  return s;
}

std::string format_amplitude(std::complex<double> a) {
  auto render = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    std::string s = buf;
    while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') {
      s.pop_back();
    }
    return s;
  };
  if (a.imag() == 0.0) {
    return render(a.real());
  }
  if (a.real() == 0.0) {
    return render(a.imag()) + "i";
  }
  std::string im = render(a.imag());
  return "(" + render(a.real()) + (im.front() == '-' ? "" : "+") + im + "i)";
}

}  // namespace stabsearch
