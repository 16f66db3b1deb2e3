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

#include "gsys/matrix_seed.hpp"

#include "gsys/errors.hpp"

namespace gsys {

MatrixSeed MatrixSeed::initial(const ExchangeMatrix& b0) {
  const std::size_t n = b0.size();
  return MatrixSeed{b0, IntMatrix::identity(n), IntMatrix::identity(n), b0, {}};
}

MatrixSeed mutate(const MatrixSeed& seed, std::size_t k) {
  const std::size_t n = seed.rank();
  check_index(k, n);
  const IntMatrix& b = seed.b.entries();
  const IntMatrix& c = seed.c;
  const IntMatrix& g = seed.g;
  const IntMatrix& b0 = seed.b0.entries();

  IntMatrix c2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k) {
        c2(i, j) = -c(i, j);
      } else {
        c2(i, j) = c(i, j) + sign(c(i, k)) * positive_part(c(i, k) * b(k, j));
      }
    }
  }

  IntMatrix g2 = g;
  for (std::size_t i = 0; i < n; ++i) {
    Int v = -g(i, k);
    for (std::size_t l = 0; l < n; ++l) {
      if (b(l, k) > 0) v += g(i, l) * b(l, k);
      if (c(l, k) > 0) v -= b0(i, l) * c(l, k);
    }
    g2(i, k) = std::move(v);
  }

  MatrixSeed out{seed.b.mutate(k), std::move(c2), std::move(g2), seed.b0, seed.history};
  out.history.push_back(k);
  return out;
}

std::vector<MatrixSeed> apply_sequence(const ExchangeMatrix& b0, std::span<const std::size_t> seq) {
  for (std::size_t k : seq) check_index(k, b0.size());
  std::vector<MatrixSeed> trace;
  trace.reserve(seq.size() + 1);
  trace.push_back(MatrixSeed::initial(b0));
  for (std::size_t k : seq) trace.push_back(mutate(trace.back(), k));
  return trace;
}

MatrixSeed seed_at(const ExchangeMatrix& b0, std::span<const std::size_t> seq) {
  for (std::size_t k : seq) check_index(k, b0.size());
  MatrixSeed s = MatrixSeed::initial(b0);
  for (std::size_t k : seq) s = mutate(s, k);
  return s;
}

IntVector g_vector_of_monomial(const IntMatrix& g, std::span<const Int> v) {
  if (g.cols() != v.size()) throw DimensionMismatch("g_vector_of_monomial: dimension mismatch");
  for (const Int& e : v) {
    if (e < 0) throw PreconditionViolation("g_vector_of_monomial: negative exponent");
  }
  return g * v;
}

IntMatrix base_change_g(const IntMatrix& g, const ExchangeMatrix& b0, std::size_t k, int eps) {
  const std::size_t n = b0.size();
  check_index(k, n);
  if (g.rows() != n || g.cols() != n) throw DimensionMismatch("base_change_g: shape mismatch");
  if (eps != 1 && eps != -1) throw PreconditionViolation("base_change_g: eps must be +-1");

  IntMatrix left = IntMatrix::identity(n);
  left(k, k) = -1;
  for (std::size_t i = 0; i < n; ++i) left(i, k) += positive_part(eps * b0(i, k));

  IntMatrix row_part(n, n);
  for (std::size_t j = 0; j < n; ++j) row_part(k, j) = positive_part(-eps * g(k, j));

  return left * g + b0.entries() * row_part;
}

SignCoherence check_sign_coherence(const IntMatrix& m, Axis axis) {
  const bool by_rows = axis == Axis::rows;
  const std::size_t count = by_rows ? m.rows() : m.cols();
  for (std::size_t idx = 0; idx < count; ++idx) {
    IntVector v = by_rows ? m.row(idx) : m.column(idx);
    bool pos = false;
    bool neg = false;
    for (const Int& x : v) {
      pos = pos || x > 0;
      neg = neg || x < 0;
    }
    if (pos && neg) return SignCoherence{false, idx, std::move(v)};
  }
  return {};
}

bool tropical_duality_holds(const MatrixSeed& seed) {
  const std::size_t n = seed.rank();
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, i) = seed.b0.symmetrizer()[i];
  return seed.g.transpose() * s * seed.c == s;
}

}  // namespace gsys
