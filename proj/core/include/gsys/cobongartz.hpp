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
#include <optional>
#include <string>
#include <vector>

#include "gsys/laurent_seed.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys {

using IndexSet = std::vector<std::size_t>;

struct CompletionRequest {
  ExchangeMatrix b0;
  MutationSequence seq;
  IndexSet u;
};

struct CompletionResult {
  std::vector<IntVector> retained;
  MutationSequence replay;
  MatrixSeed seed;
  std::optional<LaurentSeed> cluster;
};

// c_i = column seq[i] of C before the i-th mutation.
std::vector<IntVector> collect_cvectors(const ExchangeMatrix& b0, const MutationSequence& seq);

// Keeps c iff c_j = 0 for every j in u.
std::vector<IntVector> filter_cvectors(const std::vector<IntVector>& cvecs, const IndexSet& u);

// Mutates at the column of the current C equal to each retained vector in turn.
CompletionResult replay(const ExchangeMatrix& b0, const std::vector<IntVector>& retained);

CompletionResult complete(const CompletionRequest& request, bool with_cluster);

// As complete(), with the pattern rooted at `root` (whose exchange matrix must
// be request.b0); the resulting cluster is expressed in root's variables.
CompletionResult complete_from(const CompletionRequest& request, const LaurentSeed& root);

// Drops adjacent equal pairs repeatedly.
MutationSequence reduce_sequence(const MutationSequence& seq);

struct CheckOutcome {
  bool ok = false;
  std::vector<std::string> expected;
  std::vector<std::string> actual;
  explicit operator bool() const noexcept { return ok; }
};

// Cluster as a sorted list of canonical texts.
std::vector<std::string> cluster_set(const LaurentSeed& s);

CheckOutcome check_initial_seed_independence(const ExchangeMatrix& b0,
                                             const MutationSequence& seq_to_t, const IndexSet& u,
                                             const MutationSequence& seq_to_v);

CheckOutcome check_elementary_factorization(const ExchangeMatrix& b0, const MutationSequence& seq,
                                            const IndexSet& u);

}  // namespace gsys
