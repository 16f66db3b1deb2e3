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
#include <string>
#include <vector>

#include "gsys/gsystem.hpp"
#include "gsys/laurent_seed.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys {

struct CanonicalSeed {
  std::string key;
  LaurentSeed cluster;
  MatrixSeed matrix;
};

// Sorts the cluster by canonical text, permutes B to match, serializes both.
CanonicalSeed canonicalize(const LaurentSeed& cluster, const MatrixSeed& matrix);

struct GraphEdge {
  std::size_t from;
  std::size_t to;
  // Mutation direction on the representative of `from`.
  std::size_t direction;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct ExchangeGraph {
  std::vector<CanonicalSeed> nodes;
  std::vector<std::size_t> depth;
  std::vector<GraphEdge> edges;
  std::size_t root = 0;
  bool closed = false;
};

struct EnumerateOptions {
  std::size_t max_nodes = 100000;
  std::size_t max_depth = 64;
  // Order in which directions are tried; empty means 0..n-1.
  std::vector<std::size_t> direction_order;
};

// Default node cap, overridable through the GSYS_MAX_NODES environment variable.
std::size_t default_max_nodes();

// Throws CapExceeded when closure is not reached within the caps.
ExchangeGraph enumerate(const ExchangeMatrix& b0, const EnumerateOptions& opts = {});
// Same walk, returning the partial graph with closed = false instead of throwing.
ExchangeGraph enumerate_bounded(const ExchangeMatrix& b0, const EnumerateOptions& opts = {});

// Node i becomes the cluster labelled "t<i>", its vectors the columns of G.
GCollection to_gcollection(const ExchangeGraph& graph);

std::string export_dot(const ExchangeGraph& graph);

// Distinct nodes carry distinct G-matrices up to column permutation.
bool g_matrices_injective(const ExchangeGraph& graph);

}  // namespace gsys
