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

#include <cmath>
#include <random>

#include "stabsearch/decode.hpp"
#include "stabsearch/error.hpp"
#include "stabsearch/io.hpp"
#include "support/dense.hpp"

namespace stabsearch {
namespace {

using testing::tableau_of;

std::vector<std::string> kets(const DecodedState& s, std::size_t split) {
  std::vector<std::string> out;
  for (const auto& b : s.support) {
    out.push_back(format_ket(b, s.n_qubits, split));
  }
  return out;
}

// Relative amplitude of ket `b` against ket `a`.
std::complex<double> ratio(const DecodedState& s, std::size_t split, const std::string& a,
                           const std::string& b) {
  const auto k = kets(s, split);
  const auto ia = std::find(k.begin(), k.end(), a) - k.begin();
  const auto ib = std::find(k.begin(), k.end(), b) - k.begin();
  return s.amplitude(static_cast<std::size_t>(ib)) / s.amplitude(static_cast<std::size_t>(ia));
}

TEST(Decode, HartreeFockIsSingleKet) {
  const auto s = decode_state(tableau_of(4, {"+ZIII", "+IIZI", "-IZII", "-IIIZ"}), 16);
  ASSERT_EQ(s.support.size(), 1u);
  EXPECT_EQ(format_ket(s.support[0], 4, 2), "|01;01>");
  EXPECT_EQ(format_amplitude(s.amplitude(0)), "1.0");
}

TEST(Decode, GHZPairSignFollowsFourthGenerator) {
  for (int sign : {1, -1}) {
    const char* last = sign > 0 ? "+XXYY" : "-XXYY";
    const auto s = decode_state(tableau_of(4, {"-ZIZI", "-ZIIZ", "-IZZI", last}), 16);
    EXPECT_EQ(kets(s, 2), (std::vector<std::string>{"|00;11>", "|11;00>"}));
    EXPECT_NEAR(s.magnitude(), 1 / std::sqrt(2.0), 1e-15);
    // XXYY|00;11> = (-i)^2 |11;00> = -|11;00>, so the +1 eigenstate has
    // relative phase -1 and the -1 eigenstate +1.
    const auto r = ratio(s, 2, "|00;11>", "|11;00>");
    EXPECT_NEAR(r.real(), -sign, 1e-15);
    EXPECT_NEAR(r.imag(), 0, 1e-15);
  }
}

TEST(Decode, SpinResonatingRelativePhaseIsMinus) {
  const auto t = read_stabilizers(testing::data_path("h2_spin_resonating.stab"));
  const auto s = decode_state(StabilizerTableau::from_generators(4, t.generators), 16);
  EXPECT_EQ(kets(s, 2), (std::vector<std::string>{"|01;10>", "|10;01>"}));
  const auto r = ratio(s, 2, "|10;01>", "|01;10>");
  EXPECT_NEAR(r.real(), -1, 1e-15);
  EXPECT_NEAR(r.imag(), 0, 1e-15);
}

TEST(Decode, OddSpinStateHasEightKets) {
  const auto t = read_stabilizers(testing::data_path("h2o_pattern_odd.stab"));
  const auto s = decode_state(StabilizerTableau::from_generators(8, t.generators), 256);
  EXPECT_EQ(s.support.size(), 8u);
  EXPECT_NEAR(s.magnitude(), 1 / (2 * std::sqrt(2.0)), 1e-15);
}

TEST(Decode, Errors) {
  EXPECT_THROW(decode_state(tableau_of(4, {"-ZIZI", "-ZIIZ", "-IZZI"}), 16), TableauError);
  EXPECT_THROW(decode_state(tableau_of(2, {"+XI", "+IX"}), 3), CapacityError);
  EXPECT_NO_THROW(decode_state(tableau_of(2, {"+XI", "+IX"}), 4));
}

TEST(Decode, GlobalPhaseConvention) {
  // +Y has eigenvector (|0> + i|1>)/sqrt(2).
  const auto s = decode_state(tableau_of(1, {"+Y"}), 4);
  ASSERT_EQ(s.support.size(), 2u);
  EXPECT_EQ(format_amplitude(s.amplitude(0)), "0.707106781");
  EXPECT_EQ(format_amplitude(s.amplitude(1)), "0.707106781i");
}

TEST(Decode, FormatKet) {
  const std::vector<Word> b = {0b0110};
  EXPECT_EQ(format_ket(b, 4, 0), "|0110>");
  EXPECT_EQ(format_ket(b, 4, 2), "|01;10>");
  EXPECT_EQ(format_ket(b, 4, 4), "|0110>");
}

// Every generator stabilizes the decoded vector, checked densely.
TEST(Decode, RandomStatesAreStabilized) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 1 + rng() % 6;
    const auto t = testing::random_tableau(rng, n);
    const auto s = decode_state(t, std::size_t{1} << n);
    EXPECT_EQ(s.support.size(), std::size_t{1} << t.canonical().x_rank());
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    for (std::size_t j = 0; j < s.support.size(); ++j) {
      psi(static_cast<Eigen::Index>(s.support[j][0])) = s.amplitude(j);
    }
    EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
    for (const auto& g : t.generators()) {
      EXPECT_LT((g.sign * (testing::dense(g.string) * psi) - psi).norm(), 1e-12);
    }
    // Support ascends and the first amplitude is real positive.
    EXPECT_TRUE(std::is_sorted(s.support.begin(), s.support.end()));
    EXPECT_GT(s.amplitude(0).real(), 0);
    EXPECT_NEAR(s.amplitude(0).imag(), 0, 1e-15);
  }
}

}  // namespace
}  // namespace stabsearch
