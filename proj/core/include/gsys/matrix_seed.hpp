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
#include <span>
#include <vector>

#include "gsys/exchange_matrix.hpp"
#include "gsys/matrix.hpp"

namespace gsys {

using MutationSequence = std::vector<std::size_t>;

// A vertex of the matrix pattern rooted at (b0, I, I): the triple
// (B_t, C_t, G_t) plus the initial exchange matrix (needed by the g-vector
// recurrence) and the mutation path from the root.
struct MatrixSeed {
  ExchangeMatrix b;
  IntMatrix c;
  IntMatrix g;
  ExchangeMatrix b0;
  MutationSequence history;

  static MatrixSeed initial(const ExchangeMatrix& b0);

  std::size_t rank() const noexcept { return b.size(); }

  // Equality of (B, C, G, B0), ignoring the path that produced them.
  bool same_triple(const MatrixSeed& other) const {
    return b == other.b && c == other.c && g == other.g && b0 == other.b0;
  }
  friend bool operator==(const MatrixSeed&, const MatrixSeed&) = default;
};

MatrixSeed mutate(const MatrixSeed& seed, std::size_t k);

// trace[0] = (b0, I, I); trace[i] = mutate(trace[i - 1], seq[i - 1]).
std::vector<MatrixSeed> apply_sequence(const ExchangeMatrix& b0, std::span<const std::size_t> seq);

// Final seed of apply_sequence without keeping the trace.
MatrixSeed seed_at(const ExchangeMatrix& b0, std::span<const std::size_t> seq);

// g-vector G_t * v of the cluster monomial x_t^v.
IntVector g_vector_of_monomial(const IntMatrix& g, std::span<const Int> v);

// G-matrix of the same seed seen from the root u adjacent to t0 along k:
//   (J_k + [eps*B0]_+^{.k}) G + B0 [-eps*G]_+^{k.}
// where J_k = I - 2E_kk. Independent of eps for genuine G-matrices.
IntMatrix base_change_g(const IntMatrix& g, const ExchangeMatrix& b0, std::size_t k, int eps);

enum class Axis { rows, columns };

struct SignCoherence {
  bool coherent = true;
  // First offending row/column and its entries when !coherent.
  std::size_t index = 0;
  IntVector entries;

  explicit operator bool() const noexcept { return coherent; }
};

SignCoherence check_sign_coherence(const IntMatrix& m, Axis axis);

// S^{-1} G^T S C == I, checked as G^T S C == S.
bool tropical_duality_holds(const MatrixSeed& seed);

}  // namespace gsys
