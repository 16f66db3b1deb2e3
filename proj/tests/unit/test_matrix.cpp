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

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "gsys/errors.hpp"
#include "gsys/exchange_matrix.hpp"
#include "gsys/matrix.hpp"

namespace gsys {
namespace {

Int leibniz_det(const IntMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Int total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    }
    Int term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  }
  return m;
}

TEST(IntMatrix, BasicShapeAndText) {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.to_string(), "[[1,2,3],[4,5,6]]");
  EXPECT_EQ(m.transpose().to_string(), "[[1,4],[2,5],[3,6]]");
  EXPECT_EQ(m.column(1), (IntVector{2, 5}));
  EXPECT_EQ(IntMatrix::from_columns(m.columns()), m);
}

TEST(IntMatrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = random_matrix(rng, n, -4, 4);
    EXPECT_EQ(determinant(m), leibniz_det(m)) << m;
  }
}

TEST(IntMatrix, UnimodularInverse) {
  const IntMatrix g{{-1, 0, 0}, {0, -1, 0}, {0, 1, 1}};
  auto inv = unimodular_inverse(g);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * g, IntMatrix::identity(3));
  EXPECT_FALSE(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}).has_value());
  EXPECT_FALSE(unimodular_inverse(IntMatrix{{1, 2}, {2, 4}}).has_value());
}

TEST(IntMatrix, PermutedIsSimultaneous) {
  const IntMatrix b{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  const std::vector<std::size_t> perm{2, 0, 1};
  const IntMatrix p = b.permuted(perm);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p(i, j), b(perm[i], perm[j]));
  }
}

TEST(SkewSymmetrizer, Examples) {
  EXPECT_EQ(skew_symmetrizer(IntMatrix{{0, 1}, {-1, 0}}), (IntVector{1, 1}));
  EXPECT_EQ(skew_symmetrizer(IntMatrix{{0, 1}, {-2, 0}}), (IntVector{2, 1}));
  EXPECT_THROW(skew_symmetrizer(IntMatrix{{0, 1}, {1, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(skew_symmetrizer(IntMatrix{{0, 1}, {0, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(skew_symmetrizer(IntMatrix{{1, 0}, {0, 0}}), NotSkewSymmetrizable);
  EXPECT_THROW(skew_symmetrizer(IntMatrix{{0, 1, 0}}), NotSkewSymmetrizable);
  // Ratios 2 and 3 around a triangle that cannot close.
  EXPECT_THROW(skew_symmetrizer(IntMatrix{{0, 1, -1}, {-2, 0, 1}, {1, -1, 0}}),
               NotSkewSymmetrizable);
}

TEST(SkewSymmetrizer, MinimalAgainstBruteForce) {
  const std::vector<IntMatrix> cases{
      IntMatrix{{0, 1}, {-3, 0}},
      IntMatrix{{0, 2, 0}, {-1, 0, 3}, {0, -2, 0}},
      IntMatrix{{0, -4}, {6, 0}},
      IntMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -1, 0}},
  };
  for (const IntMatrix& b : cases) {
    const IntVector s = skew_symmetrizer(b);
    const std::size_t n = b.rows();
    std::vector<int> cand(n, 1);
    bool found_any = false;
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) ok = cand[i] * b(i, j) == -cand[j] * b(j, i);
      }
      if (ok) {
        found_any = true;
        for (std::size_t i = 0; i < n; ++i) EXPECT_LE(s[i], cand[i]) << b;
      }
      std::size_t pos = 0;
      while (pos < n && ++cand[pos] > 12) cand[pos++] = 1;
      if (pos == n) break;
    }
    EXPECT_TRUE(found_any);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(s[i] * b(i, j), -s[j] * b(j, i));
    }
  }
}

TEST(MutateMatrix, Examples) {
  const ExchangeMatrix b = testing::a3();
  EXPECT_EQ(b.mutate(1).entries(), (IntMatrix{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}));
  EXPECT_EQ(testing::b2().mutate(0).entries(), (IntMatrix{{0, -1}, {2, 0}}));
  EXPECT_THROW(b.mutate(3), IndexOutOfRange);
}

TEST(MutateMatrix, InvolutionAndSymmetrizerOnRandomInputs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> sd(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    IntMatrix skew(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        skew(i, j) = d(rng);
        skew(j, i) = -skew(i, j);
      }
    }
    std::vector<int> dvals(n);
    for (auto& v : dvals) v = sd(rng);
    // D * skew is skew-symmetrizable for any positive diagonal D.
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = skew(i, j) * dvals[i];
    }
    const ExchangeMatrix e(b);
    for (std::size_t k = 0; k < n; ++k) {
      const ExchangeMatrix m = e.mutate(k);
      EXPECT_EQ(m.mutate(k), e);
      EXPECT_EQ(m.symmetrizer(), e.symmetrizer());
    }
  }
}

}  // namespace
}  // namespace gsys
