// Copyright 2026 The ppmsched Authors
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

#include "ppmsched/errors.hpp"
#include "ppmsched/pauli.hpp"
#include "test_util.hpp"

namespace ppmsched {
namespace {

using testing::dense;
using testing::max_abs;

bool dense_commutes(const PauliString &a, const PauliString &b) {
  const auto da = dense(a), db = dense(b);
  return max_abs(da * db - db * da) < 1e-12;
}

TEST(Pauli, LetterEncoding) {
  EXPECT_EQ(pauli_from_char('I'), Pauli::I);
  EXPECT_EQ(pauli_from_char('_'), Pauli::I);
  EXPECT_TRUE(has_x(Pauli::Y) && has_z(Pauli::Y));
  EXPECT_FALSE(has_z(Pauli::X));
  EXPECT_EQ(to_char(Pauli::Z), 'Z');
  EXPECT_THROW(pauli_from_char('Q'), std::invalid_argument);
}

TEST(Pauli, ParseAndPrint) {
  const PauliString p = parse_pauli("-iXYZI");
  EXPECT_EQ(p.num_qubits(), 4u);
  EXPECT_EQ(p.phase_exp(), 3u);
  EXPECT_EQ(to_string(p), "-iXYZI");
  EXPECT_EQ(to_string(parse_pauli("+XX")), "XX");
  EXPECT_EQ(weight(p), 3u);
}

TEST(Pauli, WordBoundary) {
  PauliString p(130);
  p.set(0, Pauli::X);
  p.set(64, Pauli::Y);
  p.set(129, Pauli::Z);
  EXPECT_EQ(weight(p), 3u);
  EXPECT_EQ(p.num_words(), 3u);
  PauliString q = PauliString::single(130, 64, Pauli::Z);
  EXPECT_FALSE(commutes(p, q));
  q.set(129, Pauli::X);
  EXPECT_TRUE(commutes(p, q));
}

TEST(Commutes, ExampleAnticommutingPair) {
  const auto a = parse_pauli("IXZY"), b = parse_pauli("IZZY");
  EXPECT_FALSE(commutes(a, b));
  EXPECT_FALSE(dense_commutes(a, b));
}

TEST(Commutes, OverlapParity) {
  EXPECT_TRUE(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
  EXPECT_FALSE(commutes(parse_pauli("XI"), parse_pauli("ZI")));
  EXPECT_TRUE(commutes(parse_pauli("XI"), parse_pauli("IZ")));
}

TEST(Commutes, WidthMismatchThrows) {
  EXPECT_THROW(commutes(parse_pauli("XX"), parse_pauli("X")), DimensionError);
  EXPECT_THROW(multiply(parse_pauli("XX"), parse_pauli("X")), DimensionError);
}

TEST(Commutes, ExhaustiveTwoQubitAgreesWithMatrices) {
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      PauliString p(2), q(2);
      p.set(0, static_cast<Pauli>(a & 3));
      p.set(1, static_cast<Pauli>(a >> 2));
      q.set(0, static_cast<Pauli>(b & 3));
      q.set(1, static_cast<Pauli>(b >> 2));
      EXPECT_EQ(commutes(p, q), dense_commutes(p, q)) << to_string(p) << " " << to_string(q);
    }
  }
}

TEST(Commutes, RandomAgreesWithMatrices) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + t % 2;
    const auto p = testing::random_pauli(n, rng), q = testing::random_pauli(n, rng);
    EXPECT_EQ(commutes(p, q), dense_commutes(p, q));
  }
}

TEST(Multiply, PhaseConvention) {
  // XZ = -iY
  const PauliString xz = multiply(parse_pauli("X"), parse_pauli("Z"));
  EXPECT_EQ(to_string(xz), "-iY");
  EXPECT_EQ(to_string(multiply(parse_pauli("Z"), parse_pauli("X"))), "+iY");
  EXPECT_EQ(to_string(multiply(parse_pauli("Y"), parse_pauli("Y"))), "I");
}

TEST(Multiply, CommutingProductHasUnitPhase) {
  const PauliString p = parse_pauli("XZI") * parse_pauli("XIX");
  EXPECT_EQ(to_string(p), "IZX");
  EXPECT_EQ(p.phase_exp(), 0u);
}

TEST(Multiply, AgreesWithMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 4;
    const auto p = testing::random_pauli(n, rng, true), q = testing::random_pauli(n, rng, true);
    EXPECT_LT(max_abs(dense(p * q) - dense(p) * dense(q)), 1e-12) << to_string(p) << " " << to_string(q);
  }
}

TEST(Multiply, Associative) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 70;
    const auto a = testing::random_pauli(n, rng, true), b = testing::random_pauli(n, rng, true),
               c = testing::random_pauli(n, rng, true);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Multiply, SquareIsIdentityForHermitian) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto p = testing::random_pauli(1 + t % 90, rng);
    const PauliString sq = p * p;
    EXPECT_TRUE(sq.is_identity_letters());
    EXPECT_EQ(sq.phase_exp(), 0u);
  }
}

TEST(Weight, ProgramScope) {
  const auto p = parse_pauli("XIYZZ");
  EXPECT_EQ(weight(p), 4u);
  EXPECT_EQ(program_weight(p, 3), 2u);
  EXPECT_EQ(to_string(p, 3), "XIY r0 r1");
  EXPECT_THROW(to_string(parse_pauli("XIX"), 2), ValidationError);
}

TEST(SpanEqual, DifferentSetsSameGroup) {
  const std::vector<PauliString> a{parse_pauli("XXI"), parse_pauli("ZZI")};
  const std::vector<PauliString> b{parse_pauli("XXI"), parse_pauli("-YYI")};
  EXPECT_TRUE(span_equal(a, b));
}

TEST(SpanEqual, WithResourceTails) {
  // XX (x) Z1 and the product with ZZ (x) Z2 realised as -YY (x) Z1 Z2.
  const std::vector<PauliString> a{parse_pauli("XXZI"), parse_pauli("ZZIZ")};
  const PauliString prod = a[0] * a[1];
  EXPECT_EQ(to_string(prod), "-YYZZ");
  const std::vector<PauliString> b{a[0], prod};
  EXPECT_TRUE(span_equal(a, b));
  const std::vector<PauliString> wrong_sign{a[0], parse_pauli("YYZZ")};
  EXPECT_FALSE(span_equal(a, wrong_sign));
}

TEST(SpanEqual, RankMismatch) {
  const std::vector<PauliString> a{parse_pauli("ZI"), parse_pauli("IZ")};
  const std::vector<PauliString> b{parse_pauli("ZZ")};
  EXPECT_FALSE(span_equal(a, b));
}

TEST(SpanEqual, NonCommutingInputThrows) {
  const std::vector<PauliString> a{parse_pauli("X"), parse_pauli("Z")};
  EXPECT_THROW(span_equal(a, a), PreconditionError);
  EXPECT_FALSE(mutually_commuting(a));
}

TEST(SymplecticBasis, DecomposeProducts) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const auto gens = testing::random_commuting(6, 4, rng);
    SymplecticBasis basis(gens);
    PauliString target(6);
    std::vector<bool> used(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      used[i] = rng() & 1u;
      if (used[i]) target *= gens[i];
    }
    const auto parts = basis.decompose(target);
    ASSERT_TRUE(parts.has_value());
    PauliString rebuilt(6);
    for (std::size_t i : *parts) rebuilt *= gens[i];
    rebuilt.set_phase_exp(0);
    target.set_phase_exp(0);
    EXPECT_EQ(rebuilt, target);
  }
}

}  // namespace
}  // namespace ppmsched
