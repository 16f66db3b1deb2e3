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

#include "gsys/cobongartz.hpp"

#include <algorithm>

#include "gsys/errors.hpp"

namespace gsys {

namespace {

IndexSet normalized_indices(const IndexSet& u, std::size_t n) {
  IndexSet out = u;
  for (std::size_t j : out) check_index(j, n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void verify_postconditions(const CompletionRequest& req, const MatrixSeed& at_t,
                           const MatrixSeed& at_tp) {
  const std::size_t n = req.b0.size();
  const auto cols = at_tp.g.columns();
  std::vector<bool> is_u(n, false);
  for (std::size_t j : req.u) {
    const IntVector ej = unit_vector(n, j);
    const auto it = std::find(cols.begin(), cols.end(), ej);
    if (it == cols.end()) {
      throw PostconditionViolation("initial variable x" + std::to_string(j + 1) +
                                   " is missing from the completion");
    }
    is_u[static_cast<std::size_t>(it - cols.begin())] = true;
  }
  const auto inv = unimodular_inverse(at_tp.g);
  if (!inv) throw PostconditionViolation("G-matrix of the completion is not unimodular");
  const IntMatrix r = *inv * at_t.g;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_u[i]) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (r(i, k) < 0) {
        throw PostconditionViolation("row " + std::to_string(i + 1) +
                                     " of the transition matrix has a negative entry");
      }
    }
  }
}

CompletionResult run(const CompletionRequest& request, const LaurentSeed* root) {
  const std::size_t n = request.b0.size();
  CompletionRequest req = request;
  req.u = normalized_indices(request.u, n);
  for (std::size_t k : req.seq) check_index(k, n);

  CompletionResult res = replay(req.b0, filter_cvectors(collect_cvectors(req.b0, req.seq), req.u));
  verify_postconditions(req, seed_at(req.b0, req.seq), res.seed);
  if (root) {
    LaurentSeed s = *root;
    s.history.clear();
    for (std::size_t k : res.replay) s = mutate_cluster(s, k);
    res.cluster = std::move(s);
  }
  return res;
}

}  // namespace

std::vector<IntVector> collect_cvectors(const ExchangeMatrix& b0, const MutationSequence& seq) {
  for (std::size_t k : seq) check_index(k, b0.size());
  std::vector<IntVector> out;
  out.reserve(seq.size());
  MatrixSeed s = MatrixSeed::initial(b0);
  for (std::size_t k : seq) {
    out.push_back(s.c.column(k));
    s = mutate(s, k);
  }
  return out;
}

std::vector<IntVector> filter_cvectors(const std::vector<IntVector>& cvecs, const IndexSet& u) {
  std::vector<IntVector> out;
  for (const auto& c : cvecs) {
    bool keep = true;
    for (std::size_t j : u) {
      check_index(j, c.size());
      keep = keep && c[j] == 0;
    }
    if (keep) out.push_back(c);
  }
  return out;
}

CompletionResult replay(const ExchangeMatrix& b0, const std::vector<IntVector>& retained) {
  CompletionResult res{retained, {}, MatrixSeed::initial(b0), std::nullopt};
  for (const auto& c : retained) {
    if (c.size() != b0.size()) throw DimensionMismatch("c-vector has wrong length");
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < b0.size(); ++j) {
      if (res.seed.c.column(j) != c) continue;
      if (hit) {
        throw ColumnNotFound("c-vector " + to_string(c) + " matches two columns of C");
      }
      hit = j;
    }
    if (!hit) throw ColumnNotFound("c-vector " + to_string(c) + " is not a column of C");
    res.seed = mutate(res.seed, *hit);
    res.replay.push_back(*hit);
  }
  return res;
}

CompletionResult complete(const CompletionRequest& request, bool with_cluster) {
  if (!with_cluster) return run(request, nullptr);
  const LaurentSeed root = LaurentSeed::initial(request.b0);
  return run(request, &root);
}

CompletionResult complete_from(const CompletionRequest& request, const LaurentSeed& root) {
  if (!(root.b == request.b0)) {
    throw PreconditionViolation("root seed does not carry the request's exchange matrix");
  }
  if (root.rank() != request.b0.size()) throw DimensionMismatch("root seed has wrong rank");
  return run(request, &root);
}

MutationSequence reduce_sequence(const MutationSequence& seq) {
  MutationSequence out;
  for (std::size_t k : seq) {
    if (!out.empty() && out.back() == k) {
      out.pop_back();
    } else {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<std::string> cluster_set(const LaurentSeed& s) {
  auto text = s.cluster_text();
  std::sort(text.begin(), text.end());
  return text;
}

CheckOutcome check_initial_seed_independence(const ExchangeMatrix& b0,
                                             const MutationSequence& seq_to_t, const IndexSet& u,
                                             const MutationSequence& seq_to_v) {
  const std::size_t n = b0.size();
  const IndexSet uu = normalized_indices(u, n);
  const LaurentSeed xv = cluster_at(b0, seq_to_v);

  IndexSet u_at_v;
  for (std::size_t j : uu) {
    const LaurentPoly xj = LaurentPoly::variable(n, j);
    const auto it = std::find(xv.cluster.begin(), xv.cluster.end(), xj);
    if (it == xv.cluster.end()) {
      throw PreconditionViolation("x" + std::to_string(j + 1) + " is not in the cluster at v");
    }
    u_at_v.push_back(static_cast<std::size_t>(it - xv.cluster.begin()));
  }

  CheckOutcome out;
  out.expected = cluster_set(*complete({b0, seq_to_t, uu}, true).cluster);

  MutationSequence path(seq_to_v.rbegin(), seq_to_v.rend());
  path.insert(path.end(), seq_to_t.begin(), seq_to_t.end());
  path = reduce_sequence(path);
  out.actual = cluster_set(*complete_from({xv.b, path, u_at_v}, xv).cluster);
  out.ok = out.expected == out.actual;
  return out;
}

CheckOutcome check_elementary_factorization(const ExchangeMatrix& b0, const MutationSequence& seq,
                                            const IndexSet& u) {
  IndexSet order = normalized_indices(u, b0.size());
  CheckOutcome out;
  out.expected = cluster_set(*complete({b0, seq, order}, true).cluster);
  out.ok = true;
  do {
    MutationSequence cur = seq;
    for (std::size_t j : order) cur = complete({b0, cur, {j}}, false).replay;
    out.actual = cluster_set(cluster_at(b0, cur));
    if (out.actual != out.expected) {
      out.ok = false;
      return out;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace gsys
