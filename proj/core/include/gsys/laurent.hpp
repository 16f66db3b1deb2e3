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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsys/matrix.hpp"

namespace gsys {

using Exponent = std::vector<std::int64_t>;

// Reverse lexicographic comparison, last variable first. Used both as the
// display order (greatest first) and as the monomial order for division.
struct RevLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

// Sparse Laurent polynomial in n variables with integer coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Int, RevLexGreater>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const Int& c);
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  static LaurentPoly monomial(std::size_t nvars, Exponent exp, const Int& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  void add_term(const Exponent& exp, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(std::uint64_t e) const;
  LaurentPoly shifted(std::span<const std::int64_t> by) const;

  // Componentwise minimum exponent; zero vector for the zero polynomial.
  Exponent min_exponent() const;

  LaurentPoly partial(std::size_t i) const;
  // x_i * d/dx_i
  LaurentPoly euler_derivative(std::size_t i) const;

  // Requires every coordinate nonzero.
  Rational evaluate(std::span<const Rational> point) const;

  bool has_positive_coefficients() const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars);

LaurentPoly lp_exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// Always true: canonical LaurentPoly values cannot leave the Laurent ring.
inline bool is_laurent_over_initial(const LaurentPoly&) { return true; }

}  // namespace gsys
