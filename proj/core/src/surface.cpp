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

#include "gsys/surface.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>

#include "gsys/cobongartz.hpp"
#include "gsys/errors.hpp"
#include "gsys/laurent_seed.hpp"

namespace gsys {

namespace {

// True iff v lies strictly inside the clockwise interval (arc.a, arc.b).
bool inside(const Arc& arc, int v) { return arc.a < v && v < arc.b; }

int other_endpoint(const Arc& arc, int v) { return arc.a == v ? arc.b : arc.a; }

// tau separates vertex s from the arc other.
bool separates(const Arc& tau, int s, const Arc& other) {
  const int v = tau.has_endpoint(other.a) ? other.b : other.a;
  return inside(tau, s) != inside(tau, v);
}

std::array<int, 3> sorted_triple(int x, int y, int z) {
  std::array<int, 3> t{x, y, z};
  std::sort(t.begin(), t.end());
  return t;
}

std::array<Arc, 3> sides(const std::array<int, 3>& tri) {
  return {Arc(tri[0], tri[1]), Arc(tri[1], tri[2]), Arc(tri[0], tri[2])};
}

bool is_side_of(const std::array<int, 3>& tri, const Arc& arc) {
  const auto s = sides(tri);
  return std::find(s.begin(), s.end(), arc) != s.end();
}

IntVector basis_or_zero(const Triangulation& t, const Arc& arc) {
  IntVector v(t.rank(), Int(0));
  if (t.contains(arc)) v[t.index_of(arc)] = 1;
  return v;
}

void add_scaled(IntVector& acc, const IntVector& v, int factor) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += factor * v[i];
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("invalid arc '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Arc::to_string() const { return std::to_string(a) + "-" + std::to_string(b); }

Arc parse_arc(std::string_view text) {
  const std::string_view t = trim(text);
  const auto dash = t.find('-');
  if (dash == std::string_view::npos) throw ParseError("invalid arc '" + std::string(t) + "'");
  const int x = parse_int(t.substr(0, dash), t);
  const int y = parse_int(t.substr(dash + 1), t);
  if (x == y) throw ParseError("arc '" + std::string(t) + "' has equal endpoints");
  return Arc(x, y);
}

bool crosses(const Arc& x, const Arc& y) noexcept {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

Polygon::Polygon(int m) : m_(m) {
  if (m < 4) throw PreconditionViolation("a polygon needs at least 4 vertices, got " +
                                         std::to_string(m));
}

void Polygon::check_arc(const Arc& arc) const {
  if (arc.a < 0 || arc.b >= m_) {
    throw IndexOutOfRange("arc " + arc.to_string() + " outside a " + std::to_string(m_) + "-gon");
  }
  if (arc.a == arc.b) throw PreconditionViolation("arc " + arc.to_string() + " is a loop");
}

bool Polygon::is_boundary(const Arc& arc) const {
  check_arc(arc);
  return arc.b - arc.a == 1 || (arc.a == 0 && arc.b == m_ - 1);
}

bool Polygon::is_diagonal(const Arc& arc) const { return !is_boundary(arc); }

std::vector<Arc> Polygon::boundary_arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < m_; ++i) out.emplace_back(i, (i + 1) % m_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> Polygon::diagonals() const {
  std::vector<Arc> out;
  for (int a = 0; a < m_; ++a) {
    for (int b = a + 2; b < m_; ++b) {
      if (!(a == 0 && b == m_ - 1)) out.emplace_back(a, b);
    }
  }
  return out;
}

Triangulation::Triangulation(Polygon polygon, std::vector<Arc> arcs)
    : polygon_(polygon), arcs_(std::move(arcs)) {
  for (const Arc& arc : arcs_) {
    if (!polygon_.is_diagonal(arc)) {
      throw PreconditionViolation("arc " + arc.to_string() + " is a boundary arc");
    }
  }
  const std::size_t expected = static_cast<std::size_t>(polygon_.size() - 3);
  if (arcs_.size() != expected) {
    throw PreconditionViolation("a triangulation of a " + std::to_string(polygon_.size()) +
                                "-gon has " + std::to_string(expected) + " diagonals, got " +
                                std::to_string(arcs_.size()));
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
      if (arcs_[i] == arcs_[j]) {
        throw PreconditionViolation("repeated arc " + arcs_[i].to_string());
      }
      if (crosses(arcs_[i], arcs_[j])) {
        throw PreconditionViolation("arcs " + arcs_[i].to_string() + " and " +
                                    arcs_[j].to_string() + " cross");
      }
    }
  }
}

bool Triangulation::contains(const Arc& arc) const {
  return std::find(arcs_.begin(), arcs_.end(), arc) != arcs_.end();
}

std::size_t Triangulation::index_of(const Arc& arc) const {
  const auto it = std::find(arcs_.begin(), arcs_.end(), arc);
  if (it == arcs_.end()) {
    throw PreconditionViolation("arc " + arc.to_string() + " is not in the triangulation");
  }
  return static_cast<std::size_t>(it - arcs_.begin());
}

bool Triangulation::has_side(const Arc& arc) const {
  return polygon_.is_boundary(arc) || contains(arc);
}

std::vector<Arc> Triangulation::all_arcs() const {
  std::vector<Arc> out = arcs_;
  const auto b = polygon_.boundary_arcs();
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  std::vector<std::array<int, 3>> out;
  const int m = polygon_.size();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!has_side(Arc(a, b))) continue;
      for (int c = b + 1; c < m; ++c) {
        if (has_side(Arc(b, c)) && has_side(Arc(a, c))) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<Arc> Triangulation::sorted_arcs() const {
  std::vector<Arc> out = arcs_;
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation Triangulation::sorted() const { return Triangulation(polygon_, sorted_arcs()); }

bool Triangulation::same_set(const Triangulation& other) const {
  return polygon_ == other.polygon_ && sorted_arcs() == other.sorted_arcs();
}

std::string Triangulation::to_string() const {
  std::string out;
  for (const Arc& arc : arcs_) {
    if (!out.empty()) out += ",";
    out += arc.to_string();
  }
  return out;
}

Triangulation parse_triangulation(int m, std::string_view text) {
  std::vector<Arc> arcs;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    arcs.push_back(parse_arc(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  const Polygon polygon(m);
  for (const Arc& arc : arcs) polygon.check_arc(arc);
  return Triangulation(polygon, std::move(arcs));
}

ExchangeMatrix signed_adjacency(const Triangulation& t) { return signed_adjacency(t, t.arcs()); }

ExchangeMatrix signed_adjacency(const Triangulation& t, const std::vector<Arc>& arc_order) {
  std::vector<Arc> a = arc_order;
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end() || a != t.sorted_arcs()) {
    throw PreconditionViolation("arc order does not list the diagonals of the triangulation");
  }
  std::map<Arc, std::size_t> pos;
  for (std::size_t i = 0; i < arc_order.size(); ++i) pos[arc_order[i]] = i;

  const std::size_t n = arc_order.size();
  IntMatrix b(n, n);
  // Clockwise walk a -> b -> c -> a meets the sides in the order ab, bc, ca.
  for (const auto& tri : t.triangles()) {
    const auto s = sides(tri);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto u = pos.find(s[i]);
      const auto v = pos.find(s[(i + 1) % 3]);
      if (u == pos.end() || v == pos.end()) continue;
      b(u->second, v->second) += 1;
      b(v->second, u->second) -= 1;
    }
  }
  return ExchangeMatrix(std::move(b));
}

Triangulation flip(const Triangulation& t, const Arc& tau) { return flip(t, t.index_of(tau)); }

Triangulation flip(const Triangulation& t, std::size_t k) {
  check_index(k, t.rank());
  const Arc tau = t.arcs()[k];
  std::vector<int> apex;
  for (int v = 0; v < t.polygon().size(); ++v) {
    if (tau.has_endpoint(v)) continue;
    if (t.has_side(Arc(tau.a, v)) && t.has_side(Arc(tau.b, v))) apex.push_back(v);
  }
  if (apex.size() != 2) {
    throw InternalError("arc " + tau.to_string() + " does not bound exactly two triangles");
  }
  std::vector<Arc> arcs = t.arcs();
  arcs[k] = Arc(apex[0], apex[1]);
  return Triangulation(t.polygon(), std::move(arcs));
}

std::vector<Arc> crossing_sequence(const Triangulation& t, const Arc& gamma) {
  t.polygon().check_arc(gamma);
  std::vector<std::pair<std::size_t, Arc>> keyed;
  std::vector<Arc> crossed;
  for (const Arc& tau : t.arcs()) {
    if (crosses(tau, gamma)) crossed.push_back(tau);
  }
  for (const Arc& tau : crossed) {
    std::size_t before = 0;
    for (const Arc& other : crossed) {
      if (other != tau && separates(other, gamma.a, tau)) ++before;
    }
    keyed.emplace_back(before, tau);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Arc> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (keyed[i].first != i) throw InternalError("crossed arcs are not linearly separated");
    out.push_back(keyed[i].second);
  }
  return out;
}

bool clockwise_in_triangle(const std::array<int, 3>& tri, int u, int v) {
  const auto t = sorted_triple(tri[0], tri[1], tri[2]);
  return (u == t[0] && v == t[1]) || (u == t[1] && v == t[2]) || (u == t[2] && v == t[0]);
}

TPath minimal_t_path(const Triangulation& t, const Arc& gamma) {
  if (!t.polygon().is_diagonal(gamma)) {
    throw PreconditionViolation("arc " + gamma.to_string() + " is not a diagonal");
  }
  TPath p;
  p.gamma = gamma;
  p.s = gamma.a;
  p.r = gamma.b;
  if (t.contains(gamma)) {
    p.first_flank = p.last_flank = gamma;
    p.vertices = {p.s, p.r};
    p.steps = {gamma};
    return p;
  }

  p.crossed = crossing_sequence(t, gamma);
  const std::size_t d = p.crossed.size();
  p.triangles.push_back(sorted_triple(p.s, p.crossed[0].a, p.crossed[0].b));
  for (std::size_t k = 1; k < d; ++k) {
    const Arc& x = p.crossed[k - 1];
    const Arc& y = p.crossed[k];
    const int shared = y.has_endpoint(x.a) ? x.a : x.b;
    p.triangles.push_back(sorted_triple(x.a, x.b, other_endpoint(y, shared)));
  }
  p.triangles.push_back(sorted_triple(p.crossed[d - 1].a, p.crossed[d - 1].b, p.r));
  for (const auto& tri : p.triangles) {
    for (const Arc& side : sides(tri)) {
      if (!t.has_side(side)) throw InternalError("crossing triangles are not triangles of T");
    }
  }

  // tau_{i_k} is traversed as oriented in Delta_k.
  p.vertices.push_back(p.s);
  for (std::size_t k = 1; k <= d; ++k) {
    const Arc& tau = p.crossed[k - 1];
    const bool forward = clockwise_in_triangle(p.triangles[k], tau.a, tau.b);
    p.vertices.push_back(forward ? tau.a : tau.b);
    p.vertices.push_back(forward ? tau.b : tau.a);
  }
  p.vertices.push_back(p.r);

  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (p.vertices[i - 1] == p.vertices[i]) throw InternalError("degenerate T-path step");
    const Arc step(p.vertices[i - 1], p.vertices[i]);
    if (i % 2 == 1 && !is_side_of(p.triangles[(i - 1) / 2], step)) {
      throw InternalError("odd T-path step leaves its triangle");
    }
    p.steps.push_back(step);
  }
  p.first_flank = p.steps.front();
  p.last_flank = p.steps.back();

  for (std::size_t k = 1; k <= d; ++k) {
    const Arc& here = p.crossed[k - 1];
    const Arc& before = k == 1 ? p.first_flank : p.crossed[k - 2];
    const Arc& after = k == d ? p.last_flank : p.crossed[k];
    const Arc& prev = p.steps[2 * k - 2];
    const Arc& next = p.steps[2 * k];
    const bool prev_same = prev == here;
    const bool next_same = next == here;
    if ((!prev_same && prev != before) || (!next_same && next != after)) {
      throw InternalError("T-path triple matches none of the four local shapes");
    }
    if (prev_same && next_same) {
      p.shapes.push_back(StepShape::plus);
    } else if (!prev_same && !next_same) {
      p.shapes.push_back(StepShape::minus);
    } else if (prev_same) {
      p.shapes.push_back(StepShape::zero_lt);
    } else {
      p.shapes.push_back(StepShape::zero_gt);
    }
  }
  return p;
}

GVectorParts arc_g_vector_parts(const Triangulation& t, const TPath& path) {
  const std::size_t n = t.rank();
  GVectorParts parts{IntVector(n, Int(0)), IntVector(n, Int(0)), {}, {}};
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    add_scaled(parts.alternating, basis_or_zero(t, path.steps[i]), i % 2 == 0 ? 1 : -1);
  }
  const std::size_t d = path.crossings();
  if (d == 0) {
    parts.by_crossings = basis_or_zero(t, path.gamma);
    return parts;
  }
  const Polygon& poly = t.polygon();
  if (!poly.is_boundary(path.first_flank)) parts.plus.push_back(0);
  for (std::size_t k = 1; k <= d; ++k) {
    if (path.shapes[k - 1] == StepShape::plus) parts.plus.push_back(k);
    if (path.shapes[k - 1] == StepShape::minus) parts.minus.push_back(k);
  }
  if (!poly.is_boundary(path.last_flank)) parts.plus.push_back(d + 1);

  const auto arc_at = [&](std::size_t j) -> const Arc& {
    if (j == 0) return path.first_flank;
    if (j == d + 1) return path.last_flank;
    return path.crossed[j - 1];
  };
  for (std::size_t j : parts.plus) add_scaled(parts.by_crossings, basis_or_zero(t, arc_at(j)), 1);
  for (std::size_t j : parts.minus) {
    add_scaled(parts.by_crossings, basis_or_zero(t, arc_at(j)), -1);
  }
  return parts;
}

IntVector arc_g_vector(const Triangulation& t, const Arc& gamma) {
  GVectorParts parts = arc_g_vector_parts(t, minimal_t_path(t, gamma));
  if (parts.alternating != parts.by_crossings) {
    throw InternalError("g-vector formulas disagree for arc " + gamma.to_string() + ": " +
                        to_string(parts.alternating) + " vs " + to_string(parts.by_crossings));
  }
  return std::move(parts.alternating);
}

IntMatrix surface_g_matrix(const Triangulation& t, const Triangulation& tp) {
  if (!(t.polygon() == tp.polygon())) throw DimensionMismatch("triangulations of different polygons");
  std::vector<IntVector> cols;
  for (const Arc& gamma : tp.arcs()) cols.push_back(arc_g_vector(t, gamma));
  return IntMatrix::from_columns(cols);
}

CrossingSigns crossing_signs(const Triangulation& t, const Triangulation& tp) {
  std::set<Arc> plus;
  std::set<Arc> minus;
  for (const Arc& gamma : tp.arcs()) {
    const TPath path = minimal_t_path(t, gamma);
    const GVectorParts parts = arc_g_vector_parts(t, path);
    const std::size_t d = path.crossings();
    for (std::size_t j : parts.plus) {
      plus.insert(j == 0 ? path.first_flank : j == d + 1 ? path.last_flank : path.crossed[j - 1]);
    }
    for (std::size_t j : parts.minus) minus.insert(path.crossed[j - 1]);
  }
  return {{plus.begin(), plus.end()}, {minus.begin(), minus.end()}};
}

std::vector<Arc> elementary_cobongartz_arc(const Arc& beta, const Arc& alpha, Handedness hand) {
  if (alpha == beta) return {beta};
  std::vector<Arc> out{beta};
  if (!crosses(alpha, beta)) {
    out.push_back(alpha);
  } else {
    const int s = alpha.a;
    const int r = alpha.b;
    const int x = inside(alpha, beta.a) ? beta.a : beta.b;
    const int y = other_endpoint(beta, x);
    if (hand == Handedness::clockwise) {
      out.emplace_back(s, y);
      out.emplace_back(x, r);
    } else {
      out.emplace_back(s, x);
      out.emplace_back(y, r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation elementary_cobongartz_tri(const Arc& beta, const Triangulation& t, Handedness hand) {
  const Polygon& poly = t.polygon();
  if (!poly.is_diagonal(beta)) {
    throw PreconditionViolation("arc " + beta.to_string() + " is not a diagonal");
  }
  if (t.contains(beta)) return t;
  std::set<Arc> arcs;
  for (const Arc& tau : t.all_arcs()) {
    for (const Arc& piece : elementary_cobongartz_arc(beta, tau, hand)) {
      if (poly.is_diagonal(piece)) arcs.insert(piece);
    }
  }
  try {
    Triangulation out(poly, {arcs.begin(), arcs.end()});
    if (out.contains(beta)) return out;
  } catch (const PreconditionViolation&) {
  }
  std::string listed;
  for (const Arc& a : arcs) listed += " " + a.to_string();
  throw TheoremViolation("completion of " + beta.to_string() + " with respect to " +
                         t.to_string() + " is not a triangulation containing it:" + listed);
}

Triangulation cobongartz_tri(const std::vector<Arc>& u, const Triangulation& t) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!t.polygon().is_diagonal(u[i])) {
      throw PreconditionViolation("arc " + u[i].to_string() + " is not a diagonal");
    }
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (crosses(u[i], u[j])) {
        throw PreconditionViolation("arcs " + u[i].to_string() + " and " + u[j].to_string() +
                                    " cross");
      }
    }
  }
  Triangulation forward = t;
  for (const Arc& beta : u) forward = elementary_cobongartz_tri(beta, forward);
  Triangulation backward = t;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    backward = elementary_cobongartz_tri(*it, backward);
  }
  if (!forward.same_set(backward)) {
    throw TheoremViolation("completion depends on the order: " + forward.sorted().to_string() +
                           " vs " + backward.sorted().to_string());
  }
  return forward.sorted();
}

std::vector<Triangulation> enumerate_triangulations(int m) {
  const Polygon poly(m);
  // Triangulations of the sub-polygon on lo..hi, with lo-hi as its base.
  std::map<std::pair<int, int>, std::vector<std::vector<Arc>>> memo;
  const auto solve = [&](auto&& self, int lo, int hi) -> const std::vector<std::vector<Arc>>& {
    const auto key = std::make_pair(lo, hi);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::vector<Arc>> out;
    if (hi - lo < 2) {
      out.emplace_back();
    } else {
      for (int k = lo + 1; k < hi; ++k) {
        const auto left = self(self, lo, k);
        const auto right = self(self, k, hi);
        for (const auto& l : left) {
          for (const auto& r : right) {
            std::vector<Arc> arcs = l;
            arcs.insert(arcs.end(), r.begin(), r.end());
            if (k - lo >= 2) arcs.emplace_back(lo, k);
            if (hi - k >= 2) arcs.emplace_back(k, hi);
            out.push_back(std::move(arcs));
          }
        }
      }
    }
    return memo[key] = std::move(out);
  };
  std::vector<std::vector<Arc>> all = solve(solve, 0, m - 1);
  for (auto& arcs : all) std::sort(arcs.begin(), arcs.end());
  std::sort(all.begin(), all.end());
  std::vector<Triangulation> out;
  out.reserve(all.size());
  for (auto& arcs : all) out.emplace_back(poly, std::move(arcs));
  return out;
}

ArcCorrespondence correspond_arcs(const Triangulation& root) {
  ArcCorrespondence corr{root, {}, {}, {}};
  const ExchangeMatrix b0 = signed_adjacency(root);

  struct State {
    Triangulation t;
    LaurentSeed cluster;
    MatrixSeed seed;
    MutationSequence path;
  };
  const auto record = [&](const State& st) {
    for (std::size_t j = 0; j < st.t.rank(); ++j) {
      const Arc& arc = st.t.arcs()[j];
      const IntVector g = st.seed.g.column(j);
      const auto [vit, vnew] = corr.variable.emplace(arc, st.cluster.cluster[j]);
      const auto [git, gnew] = corr.g_vector.emplace(arc, g);
      if ((!vnew && !(vit->second == st.cluster.cluster[j])) || (!gnew && git->second != g)) {
        throw TheoremViolation("arc " + arc.to_string() +
                               " corresponds to two cluster variables");
      }
    }
  };

  std::deque<State> queue;
  queue.push_back({root, LaurentSeed::initial(b0), MatrixSeed::initial(b0), {}});
  corr.path.emplace(root.sorted_arcs(), MutationSequence{});
  record(queue.front());
  while (!queue.empty()) {
    const State cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < cur.t.rank(); ++k) {
      State next{flip(cur.t, k), mutate_cluster(cur.cluster, k), mutate(cur.seed, k), cur.path};
      next.path.push_back(k);
      if (!(signed_adjacency(next.t) == next.seed.b)) {
        throw TheoremViolation("flip at " + cur.t.arcs()[k].to_string() +
                               " does not match matrix mutation");
      }
      record(next);
      if (corr.path.emplace(next.t.sorted_arcs(), next.path).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  return corr;
}

DiagramOutcome check_completion_diagram(const ArcCorrespondence& corr, const Triangulation& t,
                                        const Arc& beta, Handedness hand) {
  if (!corr.root.contains(beta)) {
    throw PreconditionViolation("root triangulation does not contain " + beta.to_string());
  }
  const auto p = corr.path.find(t.sorted_arcs());
  if (!(t.polygon() == corr.root.polygon()) || p == corr.path.end()) {
    throw PreconditionViolation("triangulation " + t.to_string() + " is not reachable from the root");
  }
  DiagramOutcome out;
  try {
    out.surface = elementary_cobongartz_tri(beta, t, hand).sorted_arcs();
  } catch (const TheoremViolation&) {
    out.surface.clear();
  }

  const CompletionRequest req{signed_adjacency(corr.root), p->second,
                              {corr.root.index_of(beta)}};
  const CompletionResult res = complete(req, true);
  std::map<std::string, Arc> by_text;
  for (const auto& [arc, x] : corr.variable) by_text.emplace(x.to_string(), arc);
  bool all_found = true;
  for (const LaurentPoly& x : res.cluster->cluster) {
    const auto it = by_text.find(x.to_string());
    if (it == by_text.end()) {
      all_found = false;
    } else {
      out.cluster.push_back(it->second);
    }
  }
  std::sort(out.cluster.begin(), out.cluster.end());
  out.ok = all_found && !out.surface.empty() && out.surface == out.cluster;
  return out;
}

}  // namespace gsys
