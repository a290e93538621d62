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
#include <sstream>

#include "stabsearch/error.hpp"
#include "stabsearch/io.hpp"
#include "stabsearch/pauli_sum.hpp"
#include "support/dense.hpp"

namespace stabsearch {
namespace {

PauliSum parse(const std::string& text) {
  std::istringstream in(text);
  return parse_hamiltonian(in);
}

TEST(Hamiltonian, EquilibriumFixture) {
  const PauliSum h = read_hamiltonian(testing::data_path("h2_0.74.ham"));
  EXPECT_EQ(h.size(), 15u);
  EXPECT_EQ(h.n_qubits(), 4u);
  EXPECT_DOUBLE_EQ(h.coefficient(0), -0.812);
  EXPECT_TRUE(h.is_identity(0));
  EXPECT_EQ(format_pauli(h.string(3)), "ZIZI");
  ASSERT_FALSE(h.metadata().empty());
  EXPECT_EQ(h.metadata()[0].first, "molecule");
}

TEST(Hamiltonian, EmptyTermList) {
  const PauliSum h = parse("# nothing here\n");
  EXPECT_TRUE(h.empty());
  const PauliSum h2 = parse("%n_qubits 3\n");
  EXPECT_TRUE(h2.empty());
  EXPECT_EQ(h2.n_qubits(), 3u);
}

TEST(Hamiltonian, DuplicatesMerge) {
  const PauliSum h = parse("0.1 ZI\n0.5 IZ\n0.2 ZI\n");
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(format_pauli(h.string(0)), "ZI");
  EXPECT_NEAR(h.coefficient(0), 0.3, 1e-15);
  EXPECT_EQ(format_pauli(h.string(1)), "IZ");
}

TEST(Hamiltonian, FullPrecisionAndScientific) {
  const PauliSum h = parse("-1.2345678901234567 XY\n+2.5e-7 ZZ\n");
  EXPECT_EQ(h.coefficient(0), -1.2345678901234567);
  EXPECT_EQ(h.coefficient(1), 2.5e-7);
}

TEST(Hamiltonian, Errors) {
  EXPECT_THROW(parse("0.1 ZI\n0.2 ZII\n"), ParseError);
  EXPECT_THROW(parse("abc ZI\n"), ParseError);
  EXPECT_THROW(parse("nan ZI\n"), ParseError);
  EXPECT_THROW(parse("inf ZI\n"), ParseError);
  EXPECT_THROW(parse("0.1\n"), ParseError);
  EXPECT_THROW(parse("%n_qubits 3\n0.1 ZI\n"), ParseError);
  EXPECT_THROW(parse("%bogus 1\n"), ParseError);
  EXPECT_THROW(read_hamiltonian("/nonexistent/file.ham"), ParseError);
}

TEST(Hamiltonian, ErrorsCarryLineNumbers) {
  try {
    parse("# c\n0.1 ZI\n0.2 ZQ\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Hamiltonian, SerializeRoundTrip) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {1u, 4u, 70u}) {
    PauliSumBuilder b(n);
    std::uniform_real_distribution<double> c(-2, 2);
    for (int k = 0; k < 50; ++k) {
      b.add(c(rng), testing::random_pauli(rng, n));
    }
    b.add_metadata("basis", "sto-3g");
    const PauliSum h = std::move(b).build();
    std::stringstream ss;
    write_hamiltonian(ss, h);
    EXPECT_EQ(parse_hamiltonian(ss), h);
  }
}

TEST(Hamiltonian, BuilderFoldsSignIntoCoefficient) {
  PauliSumBuilder b(4);
  b.add(0.5, multiply(parse_pauli("XXYY", 4), parse_pauli("IIZZ", 4)));  // -XXXX
  const PauliSum h = std::move(b).build();
  EXPECT_EQ(format_pauli(h.string(0)), "XXXX");
  EXPECT_EQ(h.coefficient(0), -0.5);
}

TEST(Prune, ZeroThresholdKeepsEverything) {
  const PauliSum h = read_hamiltonian(testing::data_path("h2_0.74.ham"));
  EXPECT_EQ(prune(h, 0.0), h);
}

TEST(Prune, DropsSmallTermsInOrder) {
  const PauliSum h = parse("1e-7 XX\n0.5 ZI\n-2e-6 YY\n-3e-7 IZ\n0.25 ZZ\n");
  const PauliSum p = prune(h, 1e-6);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(format_pauli(p.string(0)), "ZI");
  EXPECT_EQ(format_pauli(p.string(1)), "YY");
  EXPECT_EQ(format_pauli(p.string(2)), "ZZ");
}

TEST(Prune, EverythingSmallGivesEmpty) {
  const PauliSum h = parse("1e-7 XX\n-3e-7 IZ\n");
  EXPECT_TRUE(prune(h, 1e-6).empty());
}

TEST(Prune, MajorityOfSmallTermsRemoved) {
  // 3000 terms with magnitudes log-uniform over [1e-16, 1]: about 62%
  // fall below 1e-6.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> e(-16, 0);
  PauliSumBuilder b(14);
  for (int k = 0; k < 3000; ++k) {
    b.add(std::pow(10.0, e(rng)), testing::random_pauli(rng, 14));
  }
  const PauliSum h = std::move(b).build();
  ASSERT_GT(h.size(), 2900u);
  const PauliSum p = prune(h, 1e-6);
  EXPECT_GT(h.size() - p.size(), h.size() / 2);
}

TEST(Stabilizers, ParseAndWrite) {
  std::istringstream in("# HF\n+ZIII\nIIZI\n-IZII\n-IIIZ\n");
  const StabilizerList s = parse_stabilizers(in);
  EXPECT_EQ(s.n_qubits, 4u);
  ASSERT_EQ(s.generators.size(), 4u);
  EXPECT_EQ(s.generators[1].sign, 1);
  EXPECT_EQ(s.generators[2].sign, -1);
  std::stringstream out;
  write_stabilizers(out, s.n_qubits, s.generators);
  EXPECT_EQ(parse_stabilizers(out).generators, s.generators);
}

TEST(Stabilizers, Errors) {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return parse_stabilizers(in);
  };
  EXPECT_THROW(bad("+ZI\n+ZII\n"), ParseError);
  EXPECT_THROW(bad("+ZQ\n"), ParseError);
  EXPECT_THROW(bad("+\n"), ParseError);
  EXPECT_THROW(bad("+ZI extra\n"), ParseError);
}

}  // namespace
}  // namespace stabsearch
