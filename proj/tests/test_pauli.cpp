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

#include <gtest/gtest.h>

#include <random>

#include "stabsearch/error.hpp"
#include "stabsearch/pauli.hpp"
#include "support/dense.hpp"

namespace stabsearch {
namespace {

using testing::dense;

TEST(PauliParse, IdentityHasNoBits) {
  const PauliString p = parse_pauli("IIII", 4);
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.phase_exp(), 0u);
  EXPECT_EQ(p.x()[0], 0u);
  EXPECT_EQ(p.z()[0], 0u);
}

TEST(PauliParse, LeftmostCharacterIsHighestQubit) {
  const PauliString p = parse_pauli("ZIZI", 4);
  EXPECT_EQ(p.x()[0], 0u);
  EXPECT_EQ(p.z()[0], 0b1010u);
  EXPECT_EQ(p.at(3), Pauli::Z);
  EXPECT_EQ(p.at(0), Pauli::I);
}

TEST(PauliParse, MixedXYIsHermitian) {
  const PauliString p = parse_pauli("XXYY", 4);
  EXPECT_EQ(p.x()[0], 0b1111u);
  EXPECT_EQ(p.z()[0], 0b0011u);
  EXPECT_TRUE(p.is_hermitian());
  EXPECT_EQ(p.sign(), 1);
}

TEST(PauliParse, RejectsBadInput) {
  EXPECT_THROW(parse_pauli("XYZ", 4), ParseError);
  EXPECT_THROW(parse_pauli("XQZI", 4), ParseError);
  EXPECT_THROW(parse_pauli("xyzi", 4), ParseError);
}

TEST(PauliParse, RoundTripsAcrossWordBoundary) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 72u, 130u}) {
    for (int k = 0; k < 20; ++k) {
      const std::string s = testing::random_letters(rng, n);
      EXPECT_EQ(format_pauli(parse_pauli(s, n)), s);
    }
  }
}

TEST(PauliParse, SignedRoundTrip) {
  const SignedPauli g = parse_signed_pauli("-IZII", 4);
  EXPECT_EQ(g.sign, -1);
  EXPECT_EQ(format_signed_pauli(g), "-IZII");
  EXPECT_EQ(format_signed_pauli(parse_signed_pauli("ZIII", 4)), "+ZIII");
}

TEST(PauliMultiply, XTimesZIsMinusIY) {
  const PauliString p = multiply(parse_pauli("X", 1), parse_pauli("Z", 1));
  EXPECT_EQ(format_pauli(p), "Y");
  EXPECT_EQ(p.phase_exp(), 3u);
}

TEST(PauliMultiply, SquareIsIdentity) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const PauliString p = testing::random_pauli(rng, 7);
    const PauliString pp = multiply(p, p);
    EXPECT_TRUE(pp.is_identity());
    EXPECT_EQ(pp.phase_exp(), 0u);
  }
}

TEST(PauliMultiply, TwoYZProductsGiveMinusSign) {
  const PauliString p = multiply(parse_pauli("XXYY", 4), parse_pauli("IIZZ", 4));
  EXPECT_EQ(format_pauli(p), "XXXX");
  EXPECT_EQ(p.sign(), -1);
  EXPECT_EQ(format_signed_pauli(to_signed(p)), "-XXXX");
}

TEST(PauliMultiply, MatchesDenseProducts) {
  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 0; k < 200; ++k) {
      const PauliString p = testing::random_pauli(rng, n, true);
      const PauliString q = testing::random_pauli(rng, n, true);
      const testing::Dense diff = dense(multiply(p, q)) - dense(p) * dense(q);
      EXPECT_LT(diff.norm(), 1e-12) << format_pauli(p) << " * " << format_pauli(q);
    }
  }
}

TEST(PauliMultiply, Associative) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const auto a = testing::random_pauli(rng, 70, true);
    const auto b = testing::random_pauli(rng, 70, true);
    const auto c = testing::random_pauli(rng, 70, true);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
  }
}

TEST(PauliMultiply, SizeMismatchThrows) {
  EXPECT_THROW(multiply(parse_pauli("XX", 2), parse_pauli("XXX", 3)), SizeMismatch);
  EXPECT_THROW(commutes(parse_pauli("XX", 2), parse_pauli("XXX", 3)), SizeMismatch);
}

TEST(PauliCommutes, Examples) {
  const auto p = parse_pauli("XXYY", 4);
  EXPECT_TRUE(commutes(p, p));
  EXPECT_TRUE(commutes(parse_pauli("XXXX", 4), parse_pauli("ZZZZ", 4)));
  EXPECT_FALSE(commutes(parse_pauli("XIII", 4), parse_pauli("ZIII", 4)));
}

TEST(PauliCommutes, MatchesDenseCommutator) {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k = 0; k < 200; ++k) {
      const auto p = testing::random_pauli(rng, n);
      const auto q = testing::random_pauli(rng, n);
      const auto a = dense(p), b = dense(q);
      const bool dense_commute = (a * b - b * a).norm() < 1e-12;
      EXPECT_EQ(commutes(p, q), dense_commute);
    }
  }
}

TEST(PauliHermitian, DenseHermiticityAgrees) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 200; ++k) {
    const auto p = testing::random_pauli(rng, 3, true);
    const auto m = dense(p);
    EXPECT_EQ(p.is_hermitian(), (m - m.adjoint()).norm() < 1e-12);
  }
}

TEST(PauliOrder, LetterOrderIsIXYZ) {
  EXPECT_EQ(letter_compare(parse_pauli("IX", 2), parse_pauli("XI", 2)),
            std::strong_ordering::less);
  EXPECT_EQ(letter_compare(parse_pauli("XZ", 2), parse_pauli("YI", 2)),
            std::strong_ordering::less);
  EXPECT_EQ(letter_compare(parse_pauli("ZZ", 2), parse_pauli("ZZ", 2)),
            std::strong_ordering::equal);
}

}  // namespace
}  // namespace stabsearch
