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

#include "gsys/gsystem.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "gsys/errors.hpp"

namespace gsys {

namespace {

bool is_unit(const Int& d) { return d == 1 || d == -1; }

bool row_nonnegative(const IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(i, j) < 0) return false;
  }
  return true;
}

bool contains(const VectorSet& vs, const IntVector& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

VectorSet sorted_unique(VectorSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

void require_initial_subset(const GCollection& coll, const VectorSet& j) {
  for (const auto& v : j) {
    if (!coll.initial().contains(v)) {
      throw PreconditionViolation("vector " + to_string(v) + " is not in the initial cluster");
    }
  }
}

// Linear constraint a.y >= b over the rationals.
struct Ineq {
  std::vector<Rational> a;
  Rational b;
  bool operator<(const Ineq& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

Ineq normalized(Ineq q) {
  Rational scale = 0;
  for (const auto& v : q.a) {
    if (v != 0) {
      scale = v < 0 ? Rational(-v) : v;
      break;
    }
  }
  if (scale != 0) {
    for (auto& v : q.a) v /= scale;
    q.b /= scale;
  }
  return q;
}

bool fourier_motzkin_feasible(std::vector<Ineq> sys, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<Ineq> pos;
    std::vector<Ineq> neg;
    std::set<Ineq> next;
    for (auto& q : sys) {
      if (q.a[v] > 0) {
        pos.push_back(std::move(q));
      } else if (q.a[v] < 0) {
        neg.push_back(std::move(q));
      } else {
        next.insert(std::move(q));
      }
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rational wp = Rational(1) / p.a[v];
        const Rational wn = Rational(-1) / n.a[v];
        Ineq c{std::vector<Rational>(nvars), p.b * wp + n.b * wn};
        for (std::size_t i = 0; i < nvars; ++i) c.a[i] = p.a[i] * wp + n.a[i] * wn;
        c.a[v] = 0;
        next.insert(normalized(std::move(c)));
      }
    }
    sys.assign(next.begin(), next.end());
    for (const auto& q : sys) {
      const bool zero = std::all_of(q.a.begin(), q.a.end(), [](const Rational& x) { return x == 0; });
      if (zero && q.b > 0) return false;
    }
  }
  return std::all_of(sys.begin(), sys.end(), [](const Ineq& q) { return q.b <= 0; });
}

}  // namespace

GCluster::GCluster(std::string label, VectorSet vectors)
    : label_(std::move(label)), vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw SingularBasis("empty cluster " + label_);
  const std::size_t n = vectors_.front().size();
  if (vectors_.size() != n) {
    throw SingularBasis("cluster " + label_ + " has " + std::to_string(vectors_.size()) +
                        " vectors in dimension " + std::to_string(n));
  }
  for (const auto& v : vectors_) {
    if (v.size() != n) throw DimensionMismatch("cluster " + label_ + " mixes dimensions");
  }
  std::sort(vectors_.begin(), vectors_.end());
  if (!is_unit(determinant(matrix()))) {
    throw SingularBasis("cluster " + label_ + " is not a Z-basis");
  }
}

bool GCluster::contains(const IntVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

bool GCluster::contains_all(const VectorSet& vs) const {
  return std::all_of(vs.begin(), vs.end(), [&](const IntVector& v) { return contains(v); });
}

std::size_t GCluster::shared_count(const GCluster& other) const {
  std::size_t c = 0;
  for (const auto& v : vectors_) c += other.contains(v);
  return c;
}

IntMatrix transition_matrix(const IntMatrix& from, const IntMatrix& to) {
  if (from.rows() != to.rows() || from.cols() != to.cols() || !from.is_square()) {
    throw DimensionMismatch("transition_matrix: shape mismatch");
  }
  if (!is_unit(determinant(to))) throw SingularBasis("target is not a Z-basis");
  const auto inv = unimodular_inverse(from);
  if (!inv) throw SingularBasis("source is not a Z-basis");
  return *inv * to;
}

TransitionMatrix transition_matrix(const GCluster& from, const GCluster& to) {
  return {transition_matrix(from.matrix(), to.matrix()), from.label(), to.label()};
}

GCollection::GCollection(std::vector<GCluster> clusters, const std::string& t0)
    : clusters_(std::move(clusters)) {
  if (clusters_.empty()) throw PreconditionViolation("empty G-collection");
  const std::size_t n = clusters_.front().rank();
  std::map<VectorSet, std::string> seen_sets;
  std::set<std::string> seen_labels;
  bool found = false;
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    const GCluster& c = clusters_[i];
    if (c.rank() != n) throw DimensionMismatch("clusters of different rank");
    if (!seen_labels.insert(c.label()).second) {
      throw PreconditionViolation("duplicate cluster label " + c.label());
    }
    auto [it, inserted] = seen_sets.emplace(c.vectors(), c.label());
    if (!inserted) {
      throw PreconditionViolation("clusters " + it->second + " and " + c.label() +
                                  " are equal as sets");
    }
    if (c.label() == t0) {
      t0_ = i;
      found = true;
    }
  }
  if (!found) throw PreconditionViolation("initial label " + t0 + " not present");
  inverses_.reserve(clusters_.size());
  for (const auto& c : clusters_) inverses_.push_back(*unimodular_inverse(c.matrix()));
}

std::size_t GCollection::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    if (clusters_[i].label() == label) return i;
  }
  throw PreconditionViolation("unknown cluster label " + label);
}

std::optional<std::size_t> GCollection::find(const VectorSet& vectors) const {
  const VectorSet key = sorted_unique(vectors);
  for (std::size_t i = 0; i < clusters_.size(); ++i) {
    if (clusters_[i].vectors() == key) return i;
  }
  return std::nullopt;
}

IntMatrix GCollection::expansion(std::size_t t, std::size_t in_basis) const {
  return inverses_.at(in_basis) * clusters_.at(t).matrix();
}

std::vector<VectorSet> GCollection::initial_subsets() const {
  const VectorSet& init = initial().vectors();
  const std::size_t n = init.size();
  std::vector<VectorSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    VectorSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.push_back(init[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<std::size_t> mutation_candidates(const GCollection& coll, std::size_t t,
                                             const IntVector& g) {
  const GCluster& c = coll.cluster(t);
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < coll.size(); ++u) {
    const GCluster& d = coll.cluster(u);
    if (u != t && !d.contains(g) && d.shared_count(c) == c.rank() - 1) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> completion_candidates(const GCollection& coll, std::size_t t,
                                               const VectorSet& j) {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < coll.size(); ++u) {
    const GCluster& d = coll.cluster(u);
    if (!d.contains_all(j)) continue;
    const IntMatrix r = coll.expansion(t, u);
    bool ok = true;
    for (std::size_t i = 0; i < d.rank() && ok; ++i) {
      if (!contains(j, d.vectors()[i])) ok = row_nonnegative(r, i);
    }
    if (ok) out.push_back(u);
  }
  return out;
}

std::string describe(const VectorSet& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + to_string(vs[i]);
  return s + "}";
}

}  // namespace

std::size_t gs_mutate(const GCollection& coll, std::size_t t, const IntVector& g) {
  if (!coll.cluster(t).contains(g)) {
    throw PreconditionViolation("vector " + to_string(g) + " is not in cluster " +
                                coll.cluster(t).label());
  }
  const auto c = mutation_candidates(coll, t, g);
  if (c.empty()) {
    throw NoCandidate("no mutation of " + coll.cluster(t).label() + " at " + to_string(g));
  }
  if (c.size() > 1) {
    throw AxiomViolation("mutation of " + coll.cluster(t).label() + " at " + to_string(g) +
                         " is not unique: " + coll.cluster(c[0]).label() + ", " +
                         coll.cluster(c[1]).label());
  }
  return c.front();
}

std::size_t gs_complete(const GCollection& coll, std::size_t t, const VectorSet& j) {
  require_initial_subset(coll, j);
  const auto c = completion_candidates(coll, t, j);
  if (c.empty()) {
    throw NoCandidate("no completion of " + describe(j) + " from " + coll.cluster(t).label());
  }
  if (c.size() > 1) {
    throw AxiomViolation("completion of " + describe(j) + " from " + coll.cluster(t).label() +
                         " is not unique: " + coll.cluster(c[0]).label() + ", " +
                         coll.cluster(c[1]).label());
  }
  return c.front();
}

MutationShape gs_mutation_transition_shape(const GCollection& coll, std::size_t t,
                                           const IntVector& g) {
  const std::size_t t1 = gs_mutate(coll, t, g);
  const GCluster& a = coll.cluster(t);
  const GCluster& b = coll.cluster(t1);
  const std::size_t n = a.rank();
  VectorSet from;
  VectorSet to;
  for (const auto& v : a.vectors()) {
    if (v != g) from.push_back(v);
  }
  to = from;
  from.push_back(g);
  for (const auto& v : b.vectors()) {
    if (!a.contains(v)) to.push_back(v);
  }
  const IntMatrix r =
      transition_matrix(IntMatrix::from_columns(from), IntMatrix::from_columns(to));

  MutationShape s;
  bool identity_block = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) identity_block = identity_block && r(i, j) == (i == j ? 1 : 0);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) s.alpha.push_back(r(i, n - 1));
  s.corner = r(n - 1, n - 1);
  s.alpha_nonnegative =
      std::all_of(s.alpha.begin(), s.alpha.end(), [](const Int& x) { return x >= 0; });
  s.from_initial = coll.initial().contains(g);
  s.ok = identity_block && s.corner == -1 && (!s.from_initial || s.alpha_nonnegative);
  return s;
}

CoherenceWitness gs_row_sign_coherence(const GCollection& coll) {
  for (std::size_t t = 0; t < coll.size(); ++t) {
    const IntMatrix r = coll.expansion(t, coll.t0());
    for (std::size_t i = 0; i < r.rows(); ++i) {
      bool pos = false;
      bool neg = false;
      for (std::size_t j = 0; j < r.cols(); ++j) {
        pos = pos || r(i, j) > 0;
        neg = neg || r(i, j) < 0;
      }
      if (pos && neg) return {false, coll.cluster(t).label(), i, r.row(i)};
    }
  }
  return {};
}

bool gs_complete_commutes(const GCollection& coll, std::size_t t, const VectorSet& j1,
                          const VectorSet& j2) {
  for (const auto& v : j1) {
    if (contains(j2, v)) throw PreconditionViolation("J1 and J2 are not disjoint");
  }
  VectorSet both = j1;
  both.insert(both.end(), j2.begin(), j2.end());
  const std::size_t whole = gs_complete(coll, t, both);
  const std::size_t a = gs_complete(coll, gs_complete(coll, t, j2), j1);
  const std::size_t b = gs_complete(coll, gs_complete(coll, t, j1), j2);
  return a == whole && b == whole;
}

bool gs_complete_chain_matches(const GCollection& coll, std::size_t t, const VectorSet& j) {
  const std::size_t whole = gs_complete(coll, t, j);
  VectorSet order = sorted_unique(j);
  do {
    std::size_t cur = t;
    for (const auto& v : order) cur = gs_complete(coll, cur, VectorSet{v});
    if (cur != whole) return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

CompletionRelation gs_complete_vs_mutation(const GCollection& coll, std::size_t t,
                                           const IntVector& g, const VectorSet& j) {
  const std::size_t t1 = gs_mutate(coll, t, g);
  const std::size_t u = gs_complete(coll, t, j);
  const std::size_t v = gs_complete(coll, t1, j);
  if (u == v) return CompletionRelation::equal;
  if (coll.cluster(u).shared_count(coll.cluster(v)) == coll.rank() - 1) {
    return CompletionRelation::one_mutation_apart;
  }
  throw TheoremViolation("completions " + coll.cluster(u).label() + " and " +
                         coll.cluster(v).label() + " of adjacent clusters " +
                         coll.cluster(t).label() + ", " + coll.cluster(t1).label() +
                         " differ by more than one mutation");
}

GPath gs_find_path_avoiding(const GCollection& coll, std::size_t start, std::size_t goal,
                            const VectorSet& j) {
  if (!coll.cluster(start).contains_all(j) || !coll.cluster(goal).contains_all(j)) {
    throw PreconditionViolation("J is not contained in both endpoints");
  }
  const std::size_t n = coll.rank();
  std::vector<std::optional<std::size_t>> parent(coll.size());
  std::vector<IntVector> via(coll.size());
  std::queue<std::size_t> q;
  parent[start] = start;
  q.push(start);
  while (!q.empty() && !parent[goal]) {
    const std::size_t t = q.front();
    q.pop();
    const GCluster& c = coll.cluster(t);
    for (std::size_t u = 0; u < coll.size(); ++u) {
      if (parent[u]) continue;
      const GCluster& d = coll.cluster(u);
      if (!d.contains_all(j) || d.shared_count(c) != n - 1) continue;
      for (const auto& v : c.vectors()) {
        if (!d.contains(v)) via[u] = v;
      }
      parent[u] = t;
      q.push(u);
    }
  }
  if (!parent[goal]) {
    throw TheoremViolation("no mutation path from " + coll.cluster(start).label() + " to " +
                           coll.cluster(goal).label() + " avoiding " + describe(j));
  }
  GPath path;
  for (std::size_t cur = goal; cur != start; cur = *parent[cur]) {
    path.clusters.push_back(cur);
    path.mutated.push_back(via[cur]);
  }
  path.clusters.push_back(start);
  std::reverse(path.clusters.begin(), path.clusters.end());
  std::reverse(path.mutated.begin(), path.mutated.end());
  return path;
}

bool gs_mutation_is_completion(const GCollection& coll, std::size_t t) {
  const GCluster& c = coll.cluster(t);
  for (const auto& g : c.vectors()) {
    const std::size_t t1 = gs_mutate(coll, t, g);
    for (const auto& w : coll.cluster(t1).vectors()) {
      if (c.contains(w) || !coll.initial().contains(w)) continue;
      if (gs_complete(coll, t, VectorSet{w}) != t1) return false;
    }
  }
  return true;
}

bool positive_identity_feasible(const VectorSet& lhs, const VectorSet& rhs) {
  if (lhs.empty() && rhs.empty()) return true;
  const std::size_t n = (lhs.empty() ? rhs : lhs).front().size();
  const std::size_t m = lhs.size() + rhs.size();
  std::vector<std::vector<Rational>> e(n, std::vector<Rational>(m));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < lhs.size(); ++i) e[r][i] = Rational(lhs[i][r]);
    for (std::size_t j = 0; j < rhs.size(); ++j) e[r][lhs.size() + j] = Rational(Int(-rhs[j][r]));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && e[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(e[p], e[row]);
    const Rational inv = Rational(1) / e[row][col];
    for (auto& x : e[row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || e[r][col] == 0) continue;
      const Rational f = e[r][col];
      for (std::size_t c = 0; c < m; ++c) e[r][c] -= f * e[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<std::size_t> free_col;
  for (std::size_t c = 0; c < m; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col.push_back(c);
  }
  if (free_col.empty()) return false;

  // Homogeneous system, so r > 0 may be normalized to r >= 1.
  std::vector<Ineq> sys;
  for (std::size_t f = 0; f < free_col.size(); ++f) {
    Ineq q{std::vector<Rational>(free_col.size()), Rational(1)};
    q.a[f] = 1;
    sys.push_back(std::move(q));
  }
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    Ineq q{std::vector<Rational>(free_col.size()), Rational(1)};
    for (std::size_t f = 0; f < free_col.size(); ++f) q.a[f] = -e[r][free_col[f]];
    sys.push_back(std::move(q));
  }
  return fourier_motzkin_feasible(std::move(sys), free_col.size());
}

GSystemReport verify_gsystem(const GCollection& coll, const VerifyOptions& opts) {
  GSystemReport rep;
  auto add = [&](Witness w) {
    if (rep.witnesses.size() < opts.max_witnesses) rep.witnesses.push_back(std::move(w));
  };
  const std::size_t n = coll.rank();

  for (std::size_t t = 0; t < coll.size(); ++t) {
    const GCluster& c = coll.cluster(t);
    for (const auto& g : c.vectors()) {
      const auto cand = mutation_candidates(coll, t, g);
      if (cand.empty()) {
        rep.mutation_ok = false;
        add({"mutation", "no_neighbor", {c.label()}, {g}, {}});
      } else if (cand.size() > 1) {
        rep.uniqueness_ok = false;
        add({"uniqueness", "ambiguous_mutation",
             {c.label(), coll.cluster(cand[0]).label(), coll.cluster(cand[1]).label()}, {g}, {}});
      }
    }
  }

  const auto subsets = coll.initial_subsets();
  for (std::size_t t = 0; t < coll.size(); ++t) {
    for (const auto& j : subsets) {
      const auto cand = completion_candidates(coll, t, j);
      if (cand.empty()) {
        rep.completion_ok = false;
        add({"completion", "no_candidate", {coll.cluster(t).label()}, j, {}});
      } else if (cand.size() > 1) {
        rep.uniqueness_ok = false;
        add({"uniqueness", "ambiguous_completion",
             {coll.cluster(t).label(), coll.cluster(cand[0]).label(),
              coll.cluster(cand[1]).label()},
             j, {}});
      }
    }
  }

  if (opts.check_uniqueness) {
    const std::size_t full = std::size_t{1} << n;
    for (std::size_t u = 0; u < coll.size(); ++u) {
      const VectorSet& gu = coll.cluster(u).vectors();
      for (std::size_t v = u; v < coll.size(); ++v) {
        const VectorSet& gv = coll.cluster(v).vectors();
        for (std::size_t mi = 1; mi < full; ++mi) {
          VectorSet left;
          for (std::size_t i = 0; i < n; ++i) {
            if (mi & (std::size_t{1} << i)) left.push_back(gu[i]);
          }
          for (std::size_t mj = 1; mj < full; ++mj) {
            VectorSet right;
            for (std::size_t i = 0; i < n; ++i) {
              if (mj & (std::size_t{1} << i)) right.push_back(gv[i]);
            }
            if (left == right) continue;
            ++rep.identities_checked;
            if (positive_identity_feasible(left, right)) {
              rep.uniqueness_ok = false;
              add({"uniqueness", "positive_identity",
                   {coll.cluster(u).label(), coll.cluster(v).label()}, left, right});
            }
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace gsys
