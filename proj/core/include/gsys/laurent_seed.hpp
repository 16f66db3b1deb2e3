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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gsys/exchange_matrix.hpp"
#include "gsys/laurent.hpp"
#include "gsys/matrix_seed.hpp"

namespace gsys {

struct LaurentSeed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix b;
  MutationSequence history;

  static LaurentSeed initial(const ExchangeMatrix& b0);

  std::size_t rank() const noexcept { return cluster.size(); }
  std::vector<std::string> cluster_text() const;

  friend bool operator==(const LaurentSeed&, const LaurentSeed&) = default;
};

// Raises InternalLaurentFailure if the exchange relation does not divide.
LaurentSeed mutate_cluster(const LaurentSeed& seed, std::size_t k);
LaurentSeed cluster_at(const ExchangeMatrix& b0, std::span<const std::size_t> seq);

// The exchange binomial of direction k over the current cluster.
LaurentPoly exchange_binomial(const LaurentSeed& seed, std::size_t k);

// H with entry (i, j) = numer(i, j) / x_{j;t}, numer(i, j) = x_i d(x_{j;t})/dx_i.
class HMatrix {
 public:
  explicit HMatrix(const LaurentSeed& seed);

  std::size_t size() const noexcept { return denom_.size(); }
  const LaurentPoly& numer(std::size_t i, std::size_t j) const { return numer_[i][j]; }
  const LaurentPoly& denom(std::size_t j) const { return denom_[j]; }

  std::vector<std::vector<Rational>> evaluate(std::span<const Rational> point) const;

  // det(H) = +-1, decided symbolically; returns the sign or 0 if neither.
  int determinant_sign() const;

  // H (B_t S^-1) H^T == B0 S^-1, decided symbolically after clearing denominators.
  bool cluster_formula_holds(const ExchangeMatrix& bt, const ExchangeMatrix& b0) const;

 private:
  std::vector<std::vector<LaurentPoly>> numer_;
  std::vector<LaurentPoly> denom_;
};

// Integer H certified by agreement at three random points from {2..97}, with
// an exact division fallback. Raises NonIntegerEntry when an entry is not a
// constant integer.
IntMatrix h_matrix_integer(const LaurentSeed& seed, std::mt19937_64& rng);

LaurentPoly laurent_determinant(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace gsys
