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
#include "gsys/cobongartz.hpp"
#include "gsys/errors.hpp"
#include "gsys/explorer.hpp"

namespace gsys {
namespace {

using testing::a3;
using testing::b2;

const MutationSequence kWorked{1, 2, 0, 1};

const ExchangeGraph& a3_graph() {
  static const ExchangeGraph g = enumerate(a3());
  return g;
}

std::vector<IndexSet> small_subsets(std::size_t n, std::size_t max_size) {
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    if (s.size() <= max_size) out.push_back(s);
  }
  return out;
}

TEST(CVectors, Collect) {
  EXPECT_EQ(collect_cvectors(a3(), kWorked),
            (std::vector<IntVector>{{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_TRUE(collect_cvectors(a3(), {}).empty());
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(collect_cvectors(a3(), {k}), std::vector<IntVector>{unit_vector(3, k)});
  }
  EXPECT_THROW(collect_cvectors(a3(), {5}), IndexOutOfRange);
}

TEST(CVectors, Filter) {
  const auto all = collect_cvectors(a3(), kWorked);
  EXPECT_EQ(filter_cvectors(all, {2}), (std::vector<IntVector>{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(filter_cvectors(all, {}), all);
  EXPECT_TRUE(filter_cvectors(all, {0, 1, 2}).empty());
}

TEST(Replay, WorkedSubsequence) {
  const CompletionResult r = replay(a3(), {{0, 1, 0}, {1, 0, 0}});
  EXPECT_EQ(r.replay, (MutationSequence{1, 0}));
  EXPECT_EQ(r.seed.c, (IntMatrix{{-1, 0, 0}, {0, -1, 1}, {0, 0, 1}}));
  EXPECT_EQ(r.seed.g, (IntMatrix{{-1, 0, 0}, {0, -1, 0}, {0, 1, 1}}));
  EXPECT_EQ(r.seed.b.entries(), (IntMatrix{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}}));
  EXPECT_EQ(r.seed.history, r.replay);
  EXPECT_EQ(r.retained.size(), r.replay.size());
}

TEST(Replay, TrivialAndInvalid) {
  const CompletionResult empty = replay(a3(), {});
  EXPECT_TRUE(empty.replay.empty());
  EXPECT_TRUE(empty.seed.same_triple(MatrixSeed::initial(a3())));
  EXPECT_EQ(replay(a3(), {unit_vector(3, 2)}).replay, (MutationSequence{2}));
  EXPECT_THROW(replay(a3(), {{1, 1, 0}}), ColumnNotFound);
  EXPECT_THROW(replay(a3(), {{0, -1, 0}}), ColumnNotFound);
}

TEST(Complete, WorkedExample) {
  const CompletionResult r = complete({a3(), kWorked, {2}}, true);
  ASSERT_TRUE(r.cluster.has_value());
  EXPECT_EQ(r.replay, (MutationSequence{1, 0}));
  const auto& x = r.cluster->cluster;
  EXPECT_EQ(x[0], parse_laurent("x1 + x2 + x3", 3) * parse_laurent("x1^-1*x2^-1", 3));
  EXPECT_EQ(x[1], parse_laurent("x1*x2^-1 + x2^-1*x3", 3));
  EXPECT_EQ(x[2], parse_laurent("x3", 3));
  EXPECT_FALSE(complete({a3(), kWorked, {2}}, false).cluster.has_value());
}

TEST(Complete, TrivialCases) {
  for (const auto& u : small_subsets(3, 3)) {
    const CompletionResult r = complete({a3(), {}, u}, true);
    EXPECT_TRUE(r.replay.empty());
    EXPECT_EQ(r.cluster->cluster, LaurentSeed::initial(a3()).cluster);
  }
  // U inside x_t and x_t0: nothing moves.
  const MutationSequence seq{1};
  const auto at_t = cluster_set(cluster_at(a3(), seq));
  for (const IndexSet& u : {IndexSet{0}, IndexSet{2}, IndexSet{0, 2}, IndexSet{}}) {
    EXPECT_EQ(cluster_set(*complete({a3(), seq, u}, true).cluster), at_t);
  }
  EXPECT_EQ(complete({a3(), kWorked, {0, 1, 2}}, false).seed.g, IntMatrix::identity(3));
  EXPECT_THROW(complete({a3(), kWorked, {3}}, false), IndexOutOfRange);
}

TEST(Complete, ExhaustivePropertiesA3) {
  const ExchangeGraph& g = a3_graph();
  const GCollection coll = to_gcollection(g);
  for (const auto& node : g.nodes) {
    const MutationSequence& seq = node.matrix.history;
    const std::size_t t = *coll.find(node.matrix.g.columns());
    for (const auto& u : small_subsets(3, 3)) {
      const CompletionResult r = complete({a3(), seq, u}, true);
      for (std::size_t j : u) {
        const LaurentPoly xj = LaurentPoly::variable(3, j);
        EXPECT_NE(std::find(r.cluster->cluster.begin(), r.cluster->cluster.end(), xj),
                  r.cluster->cluster.end());
      }
      // Idempotence.
      EXPECT_EQ(cluster_set(*complete({a3(), r.replay, u}, true).cluster), cluster_set(*r.cluster));
      // The replay never touches a slot holding a variable of U.
      LaurentSeed walk = LaurentSeed::initial(a3());
      for (std::size_t k : r.replay) {
        for (std::size_t j : u) EXPECT_NE(walk.cluster[k], LaurentPoly::variable(3, j));
        walk = mutate_cluster(walk, k);
      }
      // Same answer as the abstract completion on the G-collection.
      VectorSet j_vectors;
      for (std::size_t j : u) j_vectors.push_back(unit_vector(3, j));
      const std::size_t abstract = gs_complete(coll, t, j_vectors);
      EXPECT_EQ(coll.find(r.seed.g.columns()), abstract);
    }
  }
}

TEST(Complete, RankTwoNonSimplyLaced) {
  testing::for_each_sequence(2, 6, [](const MutationSequence& seq) {
    for (const auto& u : small_subsets(2, 2)) {
      const CompletionResult r = complete({b2(), seq, u}, true);
      for (std::size_t j : u) {
        ASSERT_NE(std::find(r.cluster->cluster.begin(), r.cluster->cluster.end(),
                            LaurentPoly::variable(2, j)),
                  r.cluster->cluster.end());
      }
    }
  });
}

TEST(Independence, WorkedTargetAllRoots) {
  std::size_t roots = 0;
  for (const auto& node : a3_graph().nodes) {
    const auto& x = node.cluster.cluster;
    if (std::find(x.begin(), x.end(), LaurentPoly::variable(3, 2)) == x.end()) continue;
    ++roots;
    EXPECT_TRUE(check_initial_seed_independence(a3(), kWorked, {2}, node.matrix.history));
  }
  EXPECT_EQ(roots, 5u);
  EXPECT_TRUE(check_initial_seed_independence(a3(), kWorked, {2}, {}));
  EXPECT_THROW(check_initial_seed_independence(a3(), kWorked, {1}, {1}), PreconditionViolation);
}

TEST(Independence, ExhaustiveA3) {
  for (const auto& target : a3_graph().nodes) {
    for (const auto& u : small_subsets(3, 2)) {
      if (u.empty()) continue;
      for (const auto& root : a3_graph().nodes) {
        const auto& x = root.cluster.cluster;
        bool has_all = true;
        for (std::size_t j : u) {
          has_all = has_all &&
                    std::find(x.begin(), x.end(), LaurentPoly::variable(3, j)) != x.end();
        }
        if (!has_all) continue;
        const CheckOutcome c = check_initial_seed_independence(a3(), target.matrix.history, u,
                                                               root.matrix.history);
        ASSERT_TRUE(c) << target.key << " / " << root.key;
      }
    }
  }
}

TEST(Factorization, WorkedAndExhaustive) {
  EXPECT_TRUE(check_elementary_factorization(a3(), kWorked, {1, 2}));
  EXPECT_TRUE(check_elementary_factorization(a3(), kWorked, {2}));
  for (const auto& node : a3_graph().nodes) {
    for (const auto& u : small_subsets(3, 3)) {
      if (u.size() < 2) continue;
      EXPECT_TRUE(check_elementary_factorization(a3(), node.matrix.history, u));
    }
  }
}

TEST(ReduceSequence, CancelsAdjacentPairs) {
  EXPECT_EQ(reduce_sequence({1, 2, 2, 1, 0}), (MutationSequence{0}));
  EXPECT_EQ(reduce_sequence({}), MutationSequence{});
  EXPECT_EQ(reduce_sequence({0, 1, 0}), (MutationSequence{0, 1, 0}));
}

}  // namespace
}  // namespace gsys
