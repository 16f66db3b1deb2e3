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

#include "gsys/matrix.hpp"

namespace gsys {

// Canonical skew-symmetrizer of `b`: the componentwise-minimal positive
// integer diagonal S with S*B skew-symmetric, i.e. s_i b_ij = -s_j b_ji.
// Each connected component of the graph {i -- j : b_ij != 0} is scaled
// independently; isolated indices get 1.
// Throws NotSkewSymmetrizable if no such S exists.
IntVector skew_symmetrizer(const IntMatrix& b);

// b'_ij = -b_ij if i == k or j == k, otherwise
// b_ij + sgn(b_ik) * max(b_ik * b_kj, 0).
IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k);

// A skew-symmetrizable integer matrix together with its canonical
// skew-symmetrizer. Immutable.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMatrix entries);

  std::size_t size() const noexcept { return entries_.rows(); }
  const IntMatrix& entries() const noexcept { return entries_; }
  const IntVector& symmetrizer() const noexcept { return symmetrizer_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  ExchangeMatrix mutate(std::size_t k) const;
  // Simultaneous relabeling; see IntMatrix::permuted.
  ExchangeMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  ExchangeMatrix(IntMatrix entries, IntVector symmetrizer)
      : entries_(std::move(entries)), symmetrizer_(std::move(symmetrizer)) {}

  IntMatrix entries_;
  IntVector symmetrizer_;
};

// Throws IndexOutOfRange unless k < n.
void check_index(std::size_t k, std::size_t n);

}  // namespace gsys
