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

#include "gsys/explorer.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gsys/errors.hpp"

namespace gsys {

CanonicalSeed canonicalize(const LaurentSeed& cluster, const MatrixSeed& matrix) {
  const std::vector<std::string> text = cluster.cluster_text();
  std::vector<std::size_t> perm(text.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return text[a] < text[b]; });
  std::string key;
  for (std::size_t i : perm) {
    key += text[i];
    key += ';';
  }
  key += cluster.b.entries().permuted(perm).to_string();
  return {std::move(key), cluster, matrix};
}

std::size_t default_max_nodes() {
  if (const char* env = std::getenv("GSYS_MAX_NODES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return EnumerateOptions{}.max_nodes;
}

namespace {

ExchangeGraph walk(const ExchangeMatrix& b0, const EnumerateOptions& opts, bool strict) {
  if (opts.max_nodes == 0) throw PreconditionViolation("max_nodes must be positive");
  const std::size_t n = b0.size();
  std::vector<std::size_t> order = opts.direction_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  {
    std::vector<std::size_t> check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
      if (check.size() != n || check[i] != i) {
        throw PreconditionViolation("direction_order is not a permutation");
      }
    }
  }

  ExchangeGraph g;
  std::unordered_map<std::string, std::size_t> index;
  auto add = [&](CanonicalSeed s, std::size_t d) {
    index.emplace(s.key, g.nodes.size());
    g.nodes.push_back(std::move(s));
    g.depth.push_back(d);
  };
  add(canonicalize(LaurentSeed::initial(b0), MatrixSeed::initial(b0)), 0);

  bool closed = true;
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (std::size_t k : order) {
      // Copies, since add() may reallocate the node vector.
      const LaurentSeed lc = mutate_cluster(g.nodes[a].cluster, k);
      const MatrixSeed lm = mutate(g.nodes[a].matrix, k);
      CanonicalSeed c = canonicalize(lc, lm);
      auto it = index.find(c.key);
      std::size_t b;
      if (it != index.end()) {
        b = it->second;
      } else {
        if (g.depth[a] >= opts.max_depth || g.nodes.size() >= opts.max_nodes) {
          closed = false;
          if (strict) {
            throw CapExceeded("enumeration cap reached (" + std::to_string(g.nodes.size()) +
                                  " clusters, " + std::to_string(g.edges.size()) + " edges)",
                              g.nodes.size(), g.edges.size());
          }
          continue;
        }
        b = g.nodes.size();
        add(std::move(c), g.depth[a] + 1);
      }
      if (b > a) g.edges.push_back({a, b, k});
    }
  }
  g.closed = closed;
  return g;
}

}  // namespace

ExchangeGraph enumerate(const ExchangeMatrix& b0, const EnumerateOptions& opts) {
  return walk(b0, opts, true);
}

ExchangeGraph enumerate_bounded(const ExchangeMatrix& b0, const EnumerateOptions& opts) {
  return walk(b0, opts, false);
}

GCollection to_gcollection(const ExchangeGraph& graph) {
  std::vector<GCluster> clusters;
  clusters.reserve(graph.nodes.size());
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    clusters.emplace_back("t" + std::to_string(i), graph.nodes[i].matrix.g.columns());
  }
  return GCollection(std::move(clusters), "t" + std::to_string(graph.root));
}

std::string export_dot(const ExchangeGraph& graph) {
  std::ostringstream os;
  os << "digraph exchange_graph {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << i << ": ";
    const auto text = graph.nodes[i].cluster.cluster_text();
    for (std::size_t j = 0; j < text.size(); ++j) os << (j ? ", " : "") << text[j];
    os << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << (e.direction + 1) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

bool g_matrices_injective(const ExchangeGraph& graph) {
  std::set<VectorSet> seen;
  for (const auto& node : graph.nodes) {
    VectorSet cols = node.matrix.g.columns();
    std::sort(cols.begin(), cols.end());
    if (!seen.insert(std::move(cols)).second) return false;
  }
  return true;
}

}  // namespace gsys
