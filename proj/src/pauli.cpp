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

#include "stabsearch/pauli.hpp"

#include <algorithm>
#include <bit>

#include "stabsearch/error.hpp"

namespace stabsearch {

namespace bits {

bool all_zero(std::span<const Word> row) {
  return std::all_of(row.begin(), row.end(), [](Word w) { return w == 0; });
}

bool commutes(std::span<const Word> x1, std::span<const Word> z1,
              std::span<const Word> x2, std::span<const Word> z2) {
  Word acc = 0;
  for (std::size_t w = 0; w < x1.size(); ++w) {
    acc ^= (x1[w] & z2[w]) ^ (z1[w] & x2[w]);
  }
  return std::popcount(acc) % 2 == 0;
}

std::size_t and_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t n = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    n += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  }
  return n;
}

namespace {
int letter_code(bool x, bool z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); }
}  // namespace

std::strong_ordering letter_compare(std::span<const Word> x1,
                                    std::span<const Word> z1,
                                    std::span<const Word> x2,
                                    std::span<const Word> z2) {
  for (std::size_t w = x1.size(); w-- > 0;) {
    Word diff = (x1[w] ^ x2[w]) | (z1[w] ^ z2[w]);
    if (diff == 0) {
      continue;
    }
    int b = std::bit_width(diff) - 1;
    int c1 = letter_code((x1[w] >> b) & 1U, (z1[w] >> b) & 1U);
    int c2 = letter_code((x2[w] >> b) & 1U, (z2[w] >> b) & 1U);
    return c1 <=> c2;
  }
  return std::strong_ordering::equal;
}

}  // namespace bits

PauliString::PauliString(std::size_t n_qubits)
    : n_qubits_(n_qubits), bits_(2 * words_for(n_qubits), 0) {}

PauliString::PauliString(std::size_t n_qubits, std::span<const Word> x,
                         std::span<const Word> z, unsigned phase_exp)
    : PauliString(n_qubits) {
  const std::size_t nw = n_words();
  if (x.size() != nw || z.size() != nw) {
    throw SizeMismatch("PauliString: bit rows do not match qubit count");
  }
  std::copy(x.begin(), x.end(), bits_.begin());
  std::copy(z.begin(), z.end(), bits_.begin() + static_cast<std::ptrdiff_t>(nw));
  phase_ = static_cast<std::uint8_t>(phase_exp & 3U);
}

Pauli PauliString::at(std::size_t qubit) const {
  bool xb = bits::test(x(), qubit);
  bool zb = bits::test(z(), qubit);
  if (xb) {
    return zb ? Pauli::Y : Pauli::X;
  }
  return zb ? Pauli::Z : Pauli::I;
}

void PauliString::set(std::size_t qubit, Pauli p) {
  bool want_x = p == Pauli::X || p == Pauli::Y;
  bool want_z = p == Pauli::Z || p == Pauli::Y;
  if (bits::test(x(), qubit) != want_x) {
    bits::flip(x(), qubit);
  }
  if (bits::test(z(), qubit) != want_z) {
    bits::flip(z(), qubit);
  }
}

bool PauliString::is_identity() const { return bits::all_zero(bits_); }

bool PauliString::is_z_type() const { return bits::all_zero(x()); }

std::size_t PauliString::weight() const {
  std::size_t n = 0;
  for (std::size_t w = 0; w < n_words(); ++w) {
    n += static_cast<std::size_t>(std::popcount(x()[w] | z()[w]));
  }
  return n;
}

int PauliString::sign() const {
  if (!is_hermitian()) {
    throw InvariantError("PauliString::sign on a non-Hermitian string");
  }
  return phase_ == 0 ? 1 : -1;
}

PauliString parse_pauli(std::string_view text, std::size_t n_qubits) {
  if (text.size() != n_qubits) {
    throw ParseError("Pauli string '" + std::string(text) + "' has length " +
                     std::to_string(text.size()) + ", expected " +
                     std::to_string(n_qubits));
  }
  PauliString p(n_qubits);
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::size_t q = n_qubits - 1 - i;
    switch (text[i]) {
      case 'I': break;
      case 'X': p.set(q, Pauli::X); break;
      case 'Y': p.set(q, Pauli::Y); break;
      case 'Z': p.set(q, Pauli::Z); break;
      default:
        throw ParseError("illegal character '" + std::string(1, text[i]) +
                         "' in Pauli string '" + std::string(text) + "'");
    }
  }
  return p;
}

std::string format_pauli(const PauliString& p) {
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string out(p.n_qubits(), 'I');
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = kLetters[static_cast<int>(p.at(p.n_qubits() - 1 - i))];
  }
  return out;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw SizeMismatch("multiply: qubit counts differ");
  }
  // Work in the X^x Z^z factored form, where moving Z past X costs -1.
  std::size_t e = p.phase_exp() + bits::and_count(p.x(), p.z()) + q.phase_exp() +
                  bits::and_count(q.x(), q.z()) + 2 * bits::and_count(p.z(), q.x());
  PauliString r(p.n_qubits());
  for (std::size_t w = 0; w < p.n_words(); ++w) {
    r.x()[w] = p.x()[w] ^ q.x()[w];
    r.z()[w] = p.z()[w] ^ q.z()[w];
  }
  // Back to letter form: each Y = i X Z absorbs one power of i.
  e += 4 * r.n_qubits() - bits::and_count(r.x(), r.z());
  r.set_phase_exp(static_cast<unsigned>(e % 4));
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw SizeMismatch("commutes: qubit counts differ");
  }
  return bits::commutes(p.x(), p.z(), q.x(), q.z());
}

std::strong_ordering letter_compare(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    return p.n_qubits() <=> q.n_qubits();
  }
  return bits::letter_compare(p.x(), p.z(), q.x(), q.z());
}

SignedPauli parse_signed_pauli(std::string_view text, std::size_t n_qubits) {
  SignedPauli out;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    out.sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  out.string = parse_pauli(text, n_qubits);
  return out;
}

std::string format_signed_pauli(const SignedPauli& p) {
  return (p.sign < 0 ? "-" : "+") + format_pauli(p.string);
}

SignedPauli to_signed(const PauliString& p) {
  SignedPauli out{p.sign(), p};
  out.string.set_phase_exp(0);
  return out;
}

}  // namespace stabsearch
