// Copyright 2026 The gsys Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gsys/errors.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys {
namespace {

using testing::a2;
using testing::a3;
using testing::b2;
using testing::g2;

struct Triple {
  IntMatrix b, c, g;
};

// The printed five-step trace of mu_2 mu_1 mu_3 mu_2 applied to (B, I, I).
const std::vector<Triple>& printed_trace() {
  static const std::vector<Triple> t{
      {{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, IntMatrix::identity(3), IntMatrix::identity(3)},
      {{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}},
       {{1, 0, 0}, {0, -1, 1}, {0, 0, 1}},
       {{1, 0, 0}, {0, -1, 0}, {0, 1, 1}}},
      {{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}},
       {{1, 0, 0}, {0, 0, -1}, {0, 1, -1}},
       {{1, 0, 0}, {0, -1, -1}, {0, 1, 0}}},
      {{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}},
       {{-1, 0, 0}, {0, 0, -1}, {0, 1, -1}},
       {{-1, 0, 0}, {0, -1, -1}, {0, 1, 0}}},
      {{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}},
       {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}},
       {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}},
  };
  return t;
}

TEST(MatrixSeed, InitialIsIdentityPattern) {
  const MatrixSeed s = MatrixSeed::initial(a3());
  EXPECT_EQ(s.c, IntMatrix::identity(3));
  EXPECT_EQ(s.g, IntMatrix::identity(3));
  EXPECT_TRUE(s.history.empty());
}

TEST(MatrixSeed, WorkedTraceA3) {
  const std::vector<std::size_t> seq{1, 2, 0, 1};
  const auto trace = apply_sequence(a3(), seq);
  ASSERT_EQ(trace.size(), 5u);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    EXPECT_EQ(trace[i].b.entries(), printed_trace()[i].b) << "step " << i;
    EXPECT_EQ(trace[i].c, printed_trace()[i].c) << "step " << i;
    EXPECT_EQ(trace[i].g, printed_trace()[i].g) << "step " << i;
    EXPECT_EQ(trace[i].history, MutationSequence(seq.begin(), seq.begin() + i));
  }
}

TEST(MatrixSeed, EmptyAndRepeatedSequences) {
  EXPECT_EQ(apply_sequence(a3(), {}).size(), 1u);
  const std::vector<std::size_t> twice{0, 0};
  const auto trace = apply_sequence(a3(), twice);
  ASSERT_EQ(trace.size(), 3u);
  EXPECT_TRUE(trace[2].same_triple(trace[0]));
  EXPECT_EQ(trace[2].history.size(), 2u);
  const std::vector<std::size_t> bad{0, 3};
  EXPECT_THROW(apply_sequence(a3(), bad), IndexOutOfRange);
}

TEST(MatrixSeed, MonomialGVector) {
  const std::vector<std::size_t> seq{1, 2, 0, 1};
  const MatrixSeed s = seed_at(a3(), seq);
  EXPECT_EQ(g_vector_of_monomial(s.g, unit_vector(3, 0)), (IntVector{-1, 0, 0}));
  EXPECT_EQ(g_vector_of_monomial(IntMatrix::identity(3), unit_vector(3, 1)), unit_vector(3, 1));
  EXPECT_EQ(g_vector_of_monomial(s.g, IntVector(3, 0)), IntVector(3, 0));
  EXPECT_THROW(g_vector_of_monomial(s.g, IntVector{1, -1, 0}), PreconditionViolation);
  EXPECT_THROW(g_vector_of_monomial(s.g, IntVector{1, 1}), DimensionMismatch);
}

TEST(MatrixSeed, SignCoherenceReports) {
  EXPECT_TRUE(check_sign_coherence(IntMatrix{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}}, Axis::columns));
  EXPECT_TRUE(check_sign_coherence(IntMatrix::identity(4), Axis::rows));
  const auto bad = check_sign_coherence(IntMatrix{{1, -1}, {0, 0}}, Axis::rows);
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.index, 0u);
  EXPECT_EQ(bad.entries, (IntVector{1, -1}));
}

TEST(MatrixSeed, BaseChangeIdentitySeed) {
  const ExchangeMatrix b0 = a3();
  for (std::size_t k = 0; k < 3; ++k) {
    const IntMatrix got = base_change_g(IntMatrix::identity(3), b0, k, 1);
    IntMatrix want = IntMatrix::identity(3);
    want(k, k) = -1;
    for (std::size_t i = 0; i < 3; ++i) want(i, k) += positive_part(b0(i, k));
    EXPECT_EQ(got, want);
    EXPECT_EQ(base_change_g(IntMatrix::identity(3), b0, k, -1), got);
  }
}

TEST(MatrixSeed, BaseChangeWorkedSeed) {
  const std::vector<std::size_t> seq{1, 2, 0, 1};
  const MatrixSeed s = seed_at(a3(), seq);
  std::vector<std::size_t> from_u{1};
  from_u.insert(from_u.end(), seq.begin(), seq.end());
  const MatrixSeed direct = seed_at(a3().mutate(1), from_u);
  EXPECT_EQ(base_change_g(s.g, a3(), 1, 1), direct.g);
  EXPECT_EQ(base_change_g(s.g, a3(), 1, -1), direct.g);
}

class PatternProperties : public ::testing::TestWithParam<std::pair<int, std::size_t>> {
 protected:
  static ExchangeMatrix matrix(int which) {
    switch (which) {
      case 0: return a2();
      case 1: return a3();
      case 2: return b2();
      default: return g2();
    }
  }
};

TEST_P(PatternProperties, InvolutionDeterminantDualityCoherence) {
  const ExchangeMatrix b0 = matrix(GetParam().first);
  std::size_t seen = 0;
  testing::for_each_seed(b0, GetParam().second, [&](const MatrixSeed& s) {
    ++seen;
    for (std::size_t k = 0; k < b0.size(); ++k) {
      const MatrixSeed back = mutate(mutate(s, k), k);
      ASSERT_TRUE(back.same_triple(s));
      ASSERT_EQ(back.history.size(), s.history.size() + 2);
    }
    const Int dc = determinant(s.c);
    const Int dg = determinant(s.g);
    ASSERT_TRUE(dc == 1 || dc == -1);
    ASSERT_TRUE(dg == 1 || dg == -1);
    ASSERT_TRUE(tropical_duality_holds(s));
    ASSERT_TRUE(check_sign_coherence(s.c, Axis::columns));
    ASSERT_TRUE(check_sign_coherence(s.g, Axis::rows));
  });
  EXPECT_GT(seen, 1u);
}

INSTANTIATE_TEST_SUITE_P(FiniteTypes, PatternProperties,
                         ::testing::Values(std::make_pair(0, std::size_t{8}),
                                           std::make_pair(1, std::size_t{8}),
                                           std::make_pair(2, std::size_t{8}),
                                           std::make_pair(3, std::size_t{6})));

TEST(MatrixSeed, BaseChangeEpsIndependenceA3B2) {
  for (const ExchangeMatrix& b0 : {a3(), b2()}) {
    testing::for_each_seed(b0, 6, [&](const MatrixSeed& s) {
      for (std::size_t k = 0; k < b0.size(); ++k) {
        MutationSequence from_u{k};
        from_u.insert(from_u.end(), s.history.begin(), s.history.end());
        const IntMatrix direct = seed_at(b0.mutate(k), from_u).g;
        ASSERT_EQ(base_change_g(s.g, b0, k, 1), direct);
        ASSERT_EQ(base_change_g(s.g, b0, k, -1), direct);
      }
    });
  }
}

TEST(MatrixSeed, DualityDetectsCorruption) {
  MatrixSeed s = seed_at(b2(), std::vector<std::size_t>{0, 1});
  EXPECT_TRUE(tropical_duality_holds(s));
  s.c(0, 0) += 1;
  EXPECT_FALSE(tropical_duality_holds(s));
}

}  // namespace
}  // namespace gsys
