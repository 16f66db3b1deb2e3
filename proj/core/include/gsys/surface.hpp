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

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gsys/exchange_matrix.hpp"
#include "gsys/laurent.hpp"
#include "gsys/matrix.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys {

// A chord of a convex polygon, stored with a < b.
struct Arc {
  int a = 0;
  int b = 0;

  Arc() = default;
  Arc(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool has_endpoint(int v) const noexcept { return v == a || v == b; }
  std::string to_string() const;

  friend auto operator<=>(const Arc&, const Arc&) = default;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// "a-b".
Arc parse_arc(std::string_view text);

// True iff the two chords interleave strictly. Boundary arcs and chords with a
// shared endpoint never cross.
bool crosses(const Arc& x, const Arc& y) noexcept;

// Marked points 0..m-1 in clockwise order.
class Polygon {
 public:
  explicit Polygon(int m);

  int size() const noexcept { return m_; }
  bool is_boundary(const Arc& arc) const;
  bool is_diagonal(const Arc& arc) const;
  void check_arc(const Arc& arc) const;
  std::vector<Arc> boundary_arcs() const;
  std::vector<Arc> diagonals() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  int m_;
};

// An ordered list of m - 3 pairwise noncrossing diagonals. The order is the
// labeling tau_1..tau_n used by signed_adjacency and arc_g_vector.
class Triangulation {
 public:
  Triangulation(Polygon polygon, std::vector<Arc> arcs);

  const Polygon& polygon() const noexcept { return polygon_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t rank() const noexcept { return arcs_.size(); }

  bool contains(const Arc& arc) const;
  // Position of a diagonal; PreconditionViolation if absent.
  std::size_t index_of(const Arc& arc) const;
  // Diagonals and boundary arcs.
  bool has_side(const Arc& arc) const;
  std::vector<Arc> all_arcs() const;
  // Vertex triples (a < b < c), sorted.
  std::vector<std::array<int, 3>> triangles() const;
  std::vector<Arc> sorted_arcs() const;
  Triangulation sorted() const;
  bool same_set(const Triangulation& other) const;
  std::string to_string() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  Polygon polygon_;
  std::vector<Arc> arcs_;
};

// "a-b,c-d,...".
Triangulation parse_triangulation(int m, std::string_view text);

ExchangeMatrix signed_adjacency(const Triangulation& t);
// PreconditionViolation unless arc_order lists exactly the diagonals of t.
ExchangeMatrix signed_adjacency(const Triangulation& t, const std::vector<Arc>& arc_order);

// The flipped arc keeps the position of the old one.
Triangulation flip(const Triangulation& t, const Arc& tau);
Triangulation flip(const Triangulation& t, std::size_t k);

// Arcs of t crossed by gamma, ordered from min(gamma) to max(gamma).
std::vector<Arc> crossing_sequence(const Triangulation& t, const Arc& gamma);

enum class StepShape { plus, minus, zero_lt, zero_gt };

struct TPath {
  Arc gamma;
  int s = 0;
  int r = 0;
  std::vector<Arc> crossed;                      // tau_{i_1} .. tau_{i_d}
  Arc first_flank;                               // tau_{i_0}
  Arc last_flank;                                // tau_{i_{d+1}}
  std::vector<std::array<int, 3>> triangles;     // Delta_0 .. Delta_d
  std::vector<int> vertices;                     // s = v_0, .., v_{2d+1} = r
  std::vector<Arc> steps;                        // alpha_1 .. alpha_{2d+1}
  std::vector<StepShape> shapes;                 // one per crossing

  std::size_t crossings() const noexcept { return crossed.size(); }
};

TPath minimal_t_path(const Triangulation& t, const Arc& gamma);

// True iff the triangle's clockwise boundary walk traverses the side from u to v.
bool clockwise_in_triangle(const std::array<int, 3>& tri, int u, int v);

struct GVectorParts {
  IntVector alternating;
  IntVector by_crossings;
  std::vector<std::size_t> plus;   // crossing positions j (0 and d+1 for flanks)
  std::vector<std::size_t> minus;
};

// Both formulas, without comparing them.
GVectorParts arc_g_vector_parts(const Triangulation& t, const TPath& path);

// InternalError if the two formulas disagree.
IntVector arc_g_vector(const Triangulation& t, const Arc& gamma);

// Column j is the g-vector of the j-th arc of tp with respect to t.
IntMatrix surface_g_matrix(const Triangulation& t, const Triangulation& tp);

// Arcs of t met at an I+ and an I- crossing point by some arc of tp.
struct CrossingSigns {
  std::vector<Arc> plus;
  std::vector<Arc> minus;
};
CrossingSigns crossing_signs(const Triangulation& t, const Triangulation& tp);

// Which way the deformed segments turn onto beta. Only clockwise yields
// completions; the other is kept to exhibit that.
enum class Handedness { clockwise, anticlockwise };

// Sorted; contains beta, and boundary arcs when they arise.
std::vector<Arc> elementary_cobongartz_arc(const Arc& beta, const Arc& alpha,
                                           Handedness hand = Handedness::clockwise);

// TheoremViolation if the result is not a triangulation containing beta.
Triangulation elementary_cobongartz_tri(const Arc& beta, const Triangulation& t,
                                        Handedness hand = Handedness::clockwise);

// Elementary completions in the order of u, cross-checked against the reverse
// order (TheoremViolation on disagreement). Result arcs are sorted.
Triangulation cobongartz_tri(const std::vector<Arc>& u, const Triangulation& t);

// Sorted by arc lists; each triangulation's arcs are sorted.
std::vector<Triangulation> enumerate_triangulations(int m);

// Flips from root in lockstep with mutations of the seed with B = B_root.
struct ArcCorrespondence {
  Triangulation root;
  std::map<Arc, LaurentPoly> variable;
  std::map<Arc, IntVector> g_vector;
  std::map<std::vector<Arc>, MutationSequence> path;  // keyed by sorted arcs
};

// TheoremViolation if two flip paths disagree on a variable, a g-vector or an
// exchange matrix.
ArcCorrespondence correspond_arcs(const Triangulation& root);

struct DiagramOutcome {
  bool ok = false;
  std::vector<Arc> surface;   // arcs of the elementary completion
  std::vector<Arc> cluster;   // arcs of the cluster-side completion
  explicit operator bool() const noexcept { return ok; }
};

// Compares elementary_cobongartz_tri(beta, t) against the cluster completion of
// {x_beta} relative to t, rooted at corr.root (which must contain beta).
DiagramOutcome check_completion_diagram(const ArcCorrespondence& corr, const Triangulation& t,
                                        const Arc& beta,
                                        Handedness hand = Handedness::clockwise);

}  // namespace gsys
