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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gsys {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> columns() const;
  void set_column(std::size_t j, std::span<const Int> values);

  IntMatrix transpose() const;
  // Simultaneous row/column permutation: result(i, j) = (*this)(perm[i], perm[j]).
  IntMatrix permuted(std::span<const std::size_t> perm) const;
  // Column permutation: result column j = column perm[j].
  IntMatrix permuted_columns(std::span<const std::size_t> perm) const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  friend IntMatrix operator+(IntMatrix lhs, const IntMatrix& rhs) { return lhs += rhs; }
  friend IntMatrix operator-(IntMatrix lhs, const IntMatrix& rhs) { return lhs -= rhs; }
  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntVector operator*(const IntMatrix& lhs, std::span<const Int> v);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Compact JSON-like text, e.g. [[0,1],[-1,0]].
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

// Inverse of a matrix with determinant +-1; nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

// Exact rational inverse; nullopt if singular.
std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m);

IntVector unit_vector(std::size_t n, std::size_t i);
std::string to_string(std::span<const Int> v);

inline Int positive_part(const Int& x) { return x > 0 ? x : Int(0); }
inline int sign(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace gsys
