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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsys/matrix.hpp"

namespace gsys {

using VectorSet = std::vector<IntVector>;

// A Z-basis of Z^n stored in lexicographic order.
class GCluster {
 public:
  GCluster(std::string label, VectorSet vectors);

  const std::string& label() const noexcept { return label_; }
  const VectorSet& vectors() const noexcept { return vectors_; }
  std::size_t rank() const noexcept { return vectors_.size(); }
  bool contains(const IntVector& v) const;
  bool contains_all(const VectorSet& vs) const;
  std::size_t shared_count(const GCluster& other) const;
  // Columns in canonical order.
  IntMatrix matrix() const { return IntMatrix::from_columns(vectors_); }

  bool same_set(const GCluster& other) const { return vectors_ == other.vectors_; }

 private:
  std::string label_;
  VectorSet vectors_;
};

struct TransitionMatrix {
  IntMatrix entries;
  std::string from;
  std::string to;
};

// Solves M_to = M_from * R.
TransitionMatrix transition_matrix(const GCluster& from, const GCluster& to);
IntMatrix transition_matrix(const IntMatrix& from, const IntMatrix& to);

class GCollection {
 public:
  GCollection(std::vector<GCluster> clusters, const std::string& t0);

  std::size_t size() const noexcept { return clusters_.size(); }
  std::size_t rank() const noexcept { return clusters_.front().rank(); }
  const GCluster& cluster(std::size_t t) const { return clusters_.at(t); }
  const std::vector<GCluster>& clusters() const noexcept { return clusters_; }
  std::size_t t0() const noexcept { return t0_; }
  const GCluster& initial() const { return clusters_[t0_]; }

  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find(const VectorSet& vectors) const;

  // R_t^{t'}: columns of cluster t expanded in the basis of cluster t'.
  IntMatrix expansion(std::size_t t, std::size_t in_basis) const;

  // Every subset of the initial cluster, ordered by bitmask.
  std::vector<VectorSet> initial_subsets() const;

 private:
  std::vector<GCluster> clusters_;
  std::vector<IntMatrix> inverses_;
  std::size_t t0_ = 0;
};

std::size_t gs_mutate(const GCollection& coll, std::size_t t, const IntVector& g);
std::size_t gs_complete(const GCollection& coll, std::size_t t, const VectorSet& j);

struct MutationShape {
  bool ok = false;
  IntVector alpha;
  Int corner;
  bool alpha_nonnegative = false;
  bool from_initial = false;
};
MutationShape gs_mutation_transition_shape(const GCollection& coll, std::size_t t,
                                           const IntVector& g);

struct CoherenceWitness {
  bool ok = true;
  std::string cluster;
  std::size_t row = 0;
  IntVector entries;
  explicit operator bool() const noexcept { return ok; }
};
CoherenceWitness gs_row_sign_coherence(const GCollection& coll);

bool gs_complete_commutes(const GCollection& coll, std::size_t t, const VectorSet& j1,
                          const VectorSet& j2);
// Completion of J equals the chain of singleton completions in every order.
bool gs_complete_chain_matches(const GCollection& coll, std::size_t t, const VectorSet& j);

enum class CompletionRelation { equal, one_mutation_apart };
CompletionRelation gs_complete_vs_mutation(const GCollection& coll, std::size_t t,
                                           const IntVector& g, const VectorSet& j);

struct GPath {
  std::vector<std::size_t> clusters;
  VectorSet mutated;
};
GPath gs_find_path_avoiding(const GCollection& coll, std::size_t start, std::size_t goal,
                            const VectorSet& j);

// Mutation introducing an initial vector w agrees with the completion of {w}.
bool gs_mutation_is_completion(const GCollection& coll, std::size_t t);

// Exact decision: do strictly positive r, r' exist with sum r_i lhs_i = sum r'_j rhs_j?
bool positive_identity_feasible(const VectorSet& lhs, const VectorSet& rhs);

struct Witness {
  std::string condition;
  std::string kind;
  std::vector<std::string> clusters;
  VectorSet vectors;
  VectorSet other;
};

struct GSystemReport {
  bool mutation_ok = true;
  bool completion_ok = true;
  bool uniqueness_ok = true;
  std::size_t identities_checked = 0;
  std::vector<Witness> witnesses;

  bool ok() const noexcept { return mutation_ok && completion_ok && uniqueness_ok; }
};

struct VerifyOptions {
  std::size_t max_witnesses = 32;
  bool check_uniqueness = true;
};

GSystemReport verify_gsystem(const GCollection& coll, const VerifyOptions& opts = {});

}  // namespace gsys
