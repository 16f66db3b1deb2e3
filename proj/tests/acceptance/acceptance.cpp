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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gsys/cobongartz.hpp"
#include "gsys/errors.hpp"
#include "gsys/explorer.hpp"
#include "gsys/gsystem.hpp"
#include "gsys/laurent_seed.hpp"
#include "gsys/matrix_seed.hpp"
#include "gsys/surface.hpp"

namespace gsys {
namespace {

using testing::a2;
using testing::a3;
using testing::b2;
using testing::g2;

// Collects the first few failure messages of a criterion.
class Failures {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++count_;
    if (count_ <= 3) msgs_ += (msgs_.empty() ? "" : "; ") + what;
  }
  std::size_t checks() const { return checks_; }
  bool ok() const { return count_ == 0 && checks_ > 0; }
  std::string summary() const {
    if (checks_ == 0) return "nothing checked";
    return std::to_string(count_) + " of " + std::to_string(checks_) + " checks failed: " + msgs_;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t count_ = 0;
  std::string msgs_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Failures()> run;
};

const ExchangeGraph& graph_of(const std::string& name, const ExchangeMatrix& b) {
  static std::map<std::string, ExchangeGraph> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, enumerate(b)).first;
  return it->second;
}

std::vector<IndexSet> subsets(std::size_t n) {
  std::vector<IndexSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

const MutationSequence kWorked{1, 2, 0, 1};

Failures worked_trace() {
  const std::vector<std::array<IntMatrix, 3>> expected{
      {IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
       IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
      {IntMatrix{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}, IntMatrix{{1, 0, 0}, {0, -1, 1}, {0, 0, 1}},
       IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 1, 1}}},
      {IntMatrix{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}}, IntMatrix{{1, 0, 0}, {0, 0, -1}, {0, 1, -1}},
       IntMatrix{{1, 0, 0}, {0, -1, -1}, {0, 1, 0}}},
      {IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, IntMatrix{{-1, 0, 0}, {0, 0, -1}, {0, 1, -1}},
       IntMatrix{{-1, 0, 0}, {0, -1, -1}, {0, 1, 0}}},
      {IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}, IntMatrix{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}},
       IntMatrix{{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}},
  };
  const auto trace = apply_sequence(a3(), kWorked);
  Failures f;
  f.check(trace.size() == expected.size(), "trace length");
  for (std::size_t i = 0; i < std::min(trace.size(), expected.size()); ++i) {
    f.check(trace[i].b.entries() == expected[i][0], "B at step " + std::to_string(i));
    f.check(trace[i].c == expected[i][1], "C at step " + std::to_string(i));
    f.check(trace[i].g == expected[i][2], "G at step " + std::to_string(i));
  }
  return f;
}

Failures worked_completion() {
  const CompletionResult r = complete({a3(), kWorked, {2}}, true);
  const auto x = [](std::size_t i) { return LaurentPoly::variable(3, i); };
  const LaurentPoly first = (x(0) + x(1) + x(2)) * LaurentPoly::monomial(3, {-1, -1, 0});
  const LaurentPoly second = (x(0) + x(2)) * LaurentPoly::monomial(3, {0, -1, 0});
  Failures f;
  f.check(r.retained == std::vector<IntVector>{{0, 1, 0}, {1, 0, 0}}, "retained c-vectors");
  f.check(r.replay == MutationSequence{1, 0}, "replay sequence");
  f.check(r.cluster && r.cluster->cluster == std::vector<LaurentPoly>{first, second, x(2)},
          "completed cluster");
  return f;
}

Failures closure() {
  Failures f;
  const std::vector<std::tuple<std::string, ExchangeMatrix, std::size_t>> cases{
      {"A2", a2(), 5}, {"A3", a3(), 14}, {"B2", b2(), 6}};
  for (const auto& [name, b, count] : cases) {
    const ExchangeGraph& g = graph_of(name, b);
    f.check(g.closed && g.nodes.size() == count,
            name + " closed with " + std::to_string(g.nodes.size()) + " clusters");
  }
  const std::size_t hexagon = enumerate_triangulations(6).size();
  f.check(hexagon == graph_of("A3", a3()).nodes.size(),
          "hexagon has " + std::to_string(hexagon) + " triangulations");
  return f;
}

Failures gsystem_axioms() {
  Failures f;
  for (const auto& [name, b] : std::vector<std::pair<std::string, ExchangeMatrix>>{
           {"A2", a2()}, {"A3", a3()}, {"B2", b2()}}) {
    const GSystemReport r = verify_gsystem(to_gcollection(graph_of(name, b)));
    f.check(r.ok(), name + (r.witnesses.empty() ? "" : " " + r.witnesses.front().condition));
  }
  return f;
}

Failures sign_coherence() {
  Failures f;
  const std::vector<std::tuple<std::string, ExchangeMatrix, std::size_t>> cases{
      {"A2", a2(), 8}, {"A3", a3(), 8}, {"B2", b2(), 8}, {"G2", g2(), 6}};
  for (const auto& [name, b, depth] : cases) {
    testing::for_each_seed(b, depth, [&, n = name](const MatrixSeed& s) {
      f.check(check_sign_coherence(s.c, Axis::columns).coherent, n + " C columns");
      f.check(check_sign_coherence(s.g, Axis::rows).coherent, n + " G rows");
      f.check(tropical_duality_holds(s), n + " duality");
    });
  }
  return f;
}

Failures cluster_formula() {
  Failures f;
  std::mt19937_64 rng(20261015);
  for (const ExchangeMatrix& b0 : {a3(), b2()}) {
    std::uniform_int_distribution<std::size_t> len(0, 6);
    std::uniform_int_distribution<std::size_t> dir(0, b0.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      MutationSequence seq(len(rng));
      for (std::size_t& k : seq) k = dir(rng);
      const LaurentSeed s = cluster_at(b0, seq);
      const HMatrix h(s);
      f.check(h.determinant_sign() != 0, "det H at " + b0.entries().to_string());
      f.check(h.cluster_formula_holds(s.b, b0), "H B H^T at " + b0.entries().to_string());
    }
  }
  return f;
}

Failures seed_independence() {
  Failures f;
  const ExchangeGraph& g = graph_of("A3", a3());
  std::size_t checked = 0;
  for (const auto& target : g.nodes) {
    for (const IndexSet& u : subsets(3)) {
      if (u.empty() || u.size() > 2) continue;
      for (const auto& root : g.nodes) {
        const auto& x = root.cluster.cluster;
        const bool has_all = std::all_of(u.begin(), u.end(), [&](std::size_t j) {
          return std::find(x.begin(), x.end(), LaurentPoly::variable(3, j)) != x.end();
        });
        if (!has_all) continue;
        ++checked;
        f.check(check_initial_seed_independence(a3(), target.matrix.history, u,
                                                root.matrix.history)
                    .ok,
                target.key + " from " + root.key);
      }
    }
  }
  f.check(checked > 0, "no cases");
  return f;
}

Failures factorization() {
  Failures f;
  const ExchangeGraph& g = graph_of("A3", a3());
  for (const auto& node : g.nodes) {
    for (const IndexSet& u : subsets(3)) {
      if (u.size() != 2) continue;
      f.check(check_elementary_factorization(a3(), node.matrix.history, u).ok,
              "order of elementary completions at " + node.key);
    }
  }
  const GCollection coll = to_gcollection(g);
  const VectorSet& init = coll.initial().vectors();
  for (std::size_t t = 0; t < coll.size(); ++t) {
    for (std::size_t a = 0; a < init.size(); ++a) {
      for (std::size_t b = 0; b < init.size(); ++b) {
        if (a != b) f.check(gs_complete_commutes(coll, t, {init[a]}, {init[b]}), "commutation");
      }
    }
    f.check(gs_mutation_is_completion(coll, t), "mutation as completion");
    for (const VectorSet& j : coll.initial_subsets()) {
      f.check(gs_complete_chain_matches(coll, t, j), "chain of singleton completions");
      for (const IntVector& v : coll.cluster(t).vectors()) {
        try {
          const CompletionRelation rel = gs_complete_vs_mutation(coll, t, v, j);
          f.check(rel == CompletionRelation::equal ||
                      rel == CompletionRelation::one_mutation_apart,
                  "completion vs mutation");
        } catch (const Error& e) {
          f.check(false, e.what());
        }
      }
    }
  }
  return f;
}

Arc arc_of_variable(const ArcCorrespondence& corr, const LaurentPoly& x) {
  for (const auto& [arc, var] : corr.variable) {
    if (var == x) return arc;
  }
  throw TheoremViolation("no arc carries " + x.to_string());
}

Failures surface() {
  Failures f;
  const Polygon hexagon(6);
  const auto all = enumerate_triangulations(6);
  const Triangulation t0 = parse_triangulation(6, "0-2,2-4,0-4");

  f.check(signed_adjacency(t0) == a3(), "(a) signed adjacency");

  for (const auto& t : all) {
    for (std::size_t k = 0; k < t.rank(); ++k) {
      f.check(signed_adjacency(flip(t, k)).entries() ==
                  mutate_matrix(signed_adjacency(t).entries(), k),
              "(b) flip at " + t.arcs()[k].to_string() + " of " + t.to_string());
    }
  }

  std::map<std::vector<Arc>, ArcCorrespondence> corr;
  for (const auto& t : all) corr.emplace(t.sorted_arcs(), correspond_arcs(t));
  for (const auto& t : all) {
    const ArcCorrespondence& c = corr.at(t.sorted_arcs());
    for (const Arc& gamma : hexagon.diagonals()) {
      f.check(arc_g_vector(t, gamma) == c.g_vector.at(gamma),
              "(c) g-vector of " + gamma.to_string() + " over " + t.to_string());
    }
  }

  for (const auto& t : all) {
    for (const Arc& beta : hexagon.diagonals()) {
      try {
        const Triangulation out = elementary_cobongartz_tri(beta, t);
        f.check(out.contains(beta), "(d) missing beta");
      } catch (const TheoremViolation& e) {
        f.check(false, std::string("(d) ") + e.what());
      }
    }
  }

  for (const auto& t : all) {
    for (const Arc& beta : hexagon.diagonals()) {
      const auto root = std::find_if(all.begin(), all.end(),
                                     [&](const Triangulation& r) { return r.contains(beta); });
      const DiagramOutcome d = check_completion_diagram(corr.at(root->sorted_arcs()), t, beta);
      f.check(d.ok, "(e) " + beta.to_string() + " over " + t.to_string());
    }
  }

  const ArcCorrespondence c0 = correspond_arcs(t0);
  const Arc beta3 = arc_of_variable(c0, LaurentPoly::variable(3, 2));
  const Triangulation target = flip(flip(t0, std::size_t{1}), std::size_t{0});
  for (const MutationSequence& seq : {MutationSequence{1, 2, 0, 2}, kWorked}) {
    Triangulation t = t0;
    for (std::size_t k : seq) t = flip(t, k);
    const Triangulation surface_side = elementary_cobongartz_tri(beta3, t);
    f.check(surface_side.same_set(target), "(f) surface completion");
    const CompletionResult r = complete({a3(), seq, {2}}, true);
    std::vector<Arc> cluster_side;
    for (const LaurentPoly& x : r.cluster->cluster) cluster_side.push_back(arc_of_variable(c0, x));
    std::sort(cluster_side.begin(), cluster_side.end());
    f.check(cluster_side == target.sorted_arcs(), "(f) transported cluster completion");
  }
  return f;
}

Failures properties() {
  Failures f;
  for (const ExchangeMatrix& b0 : {a3(), b2()}) {
    testing::for_each_seed(b0, 6, [&](const MatrixSeed& s) {
      for (std::size_t k = 0; k < s.rank(); ++k) {
        f.check(mutate(mutate(s, k), k).same_triple(s), "mutation involution");
        std::vector<std::size_t> from_u{k};
        from_u.insert(from_u.end(), s.history.begin(), s.history.end());
        const IntMatrix direct = seed_at(b0.mutate(k), from_u).g;
        f.check(base_change_g(s.g, b0, k, 1) == direct && base_change_g(s.g, b0, k, -1) == direct,
                "base change");
      }
      const Int dc = determinant(s.c);
      const Int dg = determinant(s.g);
      f.check((dc == 1 || dc == -1) && (dg == 1 || dg == -1), "determinant");
    });
  }
  for (const auto& t : enumerate_triangulations(7)) {
    for (std::size_t k = 0; k < t.rank(); ++k) f.check(flip(flip(t, k), k) == t, "flip involution");
  }
  for (const auto& node : graph_of("A3", a3()).nodes) {
    for (const IndexSet& u : subsets(3)) {
      const CompletionResult once = complete({a3(), node.matrix.history, u}, false);
      const CompletionResult twice = complete({a3(), once.replay, u}, false);
      f.check(twice.seed.same_triple(once.seed), "completion idempotence at " + node.key);
    }
  }

  bool found = false;
  for (const auto& t : enumerate_triangulations(8)) {
    for (const Arc& gamma : t.polygon().diagonals()) {
      const TPath p = minimal_t_path(t, gamma);
      if (p.crossings() != 5) continue;
      IntVector want(t.rank(), Int(0));
      want[t.index_of(p.crossed[2])] = -1;
      found = found || arc_g_vector(t, gamma) == want;
    }
  }
  f.check(found, "octagon arc with five crossings and g = -e at the third");
  return f;
}

}  // namespace
}  // namespace gsys

int main() {
  using namespace gsys;
  const std::vector<Criterion> criteria{
      {1, "worked mutation trace reproduces all five (B, C, G) triples", 1, worked_trace},
      {2, "worked completion: retained c-vectors, replay and cluster", 1, worked_completion},
      {3, "finite-type closure A2/A3/B2 and hexagon count", 10, closure},
      {4, "G-system conditions on A2, A3, B2", 60, gsystem_axioms},
      {5, "sign coherence and tropical duality", 60, sign_coherence},
      {6, "cluster formula on random sequences", 60, cluster_formula},
      {7, "initial-seed independence over A3", 300, seed_independence},
      {8, "factorization, commutation, completion vs mutation", 120, factorization},
      {9, "hexagon cross-validation", 60, surface},
      {10, "property suite", 120, properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    std::size_t checks = 0;
    try {
      const Failures f = c.run();
      checks = f.checks();
      if (!f.ok()) problem = f.summary();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && secs > c.limit_seconds) {
      problem = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (problem.empty() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " ("
              << checks << " checks, " << timing << ")"
              << (problem.empty() ? "" : ": " + problem) << "\n";
    failed += !problem.empty();
  }
  return failed == 0 ? 0 : 1;
}
