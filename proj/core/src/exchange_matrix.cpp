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

#include "gsys/exchange_matrix.hpp"

#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gsys/errors.hpp"

namespace gsys {

void check_index(std::size_t k, std::size_t n) {
  if (k >= n) {
    throw IndexOutOfRange("mutation index " + std::to_string(k + 1) + " out of range 1.." +
                          std::to_string(n));
  }
}

IntVector skew_symmetrizer(const IntMatrix& b) {
  if (!b.is_square()) throw NotSkewSymmetrizable("matrix is not square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) != 0) {
      throw NotSkewSymmetrizable("nonzero diagonal entry at " + std::to_string(i + 1));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool zi = b(i, j) == 0;
      const bool zj = b(j, i) == 0;
      if (zi != zj || (!zi && sign(b(i, j)) == sign(b(j, i)))) {
        throw NotSkewSymmetrizable("sign pattern of b(" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") is not opposite to its transpose entry");
      }
    }
  }

  // s_j / s_i = -b_ij / b_ji along every edge; propagate as rationals.
  std::vector<std::optional<Rational>> ratio(n);
  IntVector s(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (ratio[root]) continue;
    std::vector<std::size_t> component{root};
    ratio[root] = Rational(1);
    std::queue<std::size_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (b(i, j) == 0) continue;
        const Rational want = *ratio[i] * Rational(Int(-b(i, j))) / Rational(b(j, i));
        if (!ratio[j]) {
          ratio[j] = want;
          component.push_back(j);
          frontier.push(j);
        } else if (*ratio[j] != want) {
          throw NotSkewSymmetrizable("inconsistent cycle through index " +
                                     std::to_string(j + 1));
        }
      }
    }
    Int lcm_den = 1;
    for (std::size_t i : component) {
      lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(*ratio[i]));
    }
    Int g = 0;
    for (std::size_t i : component) {
      s[i] = boost::multiprecision::numerator(Rational(*ratio[i] * lcm_den));
      g = boost::multiprecision::gcd(g, s[i]);
    }
    for (std::size_t i : component) s[i] /= g;
  }
  return s;
}

IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
  check_index(k, b.rows());
  const std::size_t n = b.rows();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        out(i, j) = b(i, j) + sign(b(i, k)) * positive_part(b(i, k) * b(k, j));
      }
    }
  }
  return out;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries)
    : entries_(std::move(entries)), symmetrizer_(skew_symmetrizer(entries_)) {}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const {
  return ExchangeMatrix(mutate_matrix(entries_, k), symmetrizer_);
}

ExchangeMatrix ExchangeMatrix::permuted(std::span<const std::size_t> perm) const {
  IntVector s(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) s[i] = symmetrizer_.at(perm[i]);
  return ExchangeMatrix(entries_.permuted(perm), std::move(s));
}

}  // namespace gsys
