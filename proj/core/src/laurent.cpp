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

#include "gsys/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "gsys/errors.hpp"

namespace gsys {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("Laurent polynomials in different rings");
}

Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational r = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  while (k > 0) {
    if (k & 1U) r *= b;
    b *= b;
    k >>= 1U;
  }
  return r;
}

void append_monomial(std::ostringstream& os, const Exponent& exp) {
  bool first = true;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (exp[i] != 1) os << '^' << exp[i];
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars) : s_(text), n_(nvars) {}

  LaurentPoly run() {
    LaurentPoly out(n_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Int coeff = sgn;
      Exponent exp(n_, 0);
      term(coeff, exp);
      out.add_term(exp, coeff);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("Laurent text at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::int64_t small_int() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    const std::string_view d = digits();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc()) fail("integer out of range");
    return neg ? -v : v;
  }

  void term(Int& coeff, Exponent& exp) {
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= Int(std::string(digits()));
      } else if (peek() == 'x') {
        ++pos_;
        const std::int64_t idx = small_int();
        if (idx < 1 || static_cast<std::size_t>(idx) > n_) fail("variable index out of range");
        std::int64_t e = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          e = small_int();
        }
        exp[static_cast<std::size_t>(idx - 1)] += e;
      } else {
        fail("expected coefficient or variable");
      }
      skip();
      if (peek() != '*') return;
      ++pos_;
    }
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

bool RevLexGreater::operator()(const Exponent& a, const Exponent& b) const noexcept {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Int& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw IndexOutOfRange("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, std::move(e));
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exponent exp, const Int& c) {
  if (exp.size() != nvars) throw DimensionMismatch("exponent length differs from variable count");
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.emplace(std::move(exp), c);
  return p;
}

void LaurentPoly::add_term(const Exponent& exp, const Int& c) {
  if (exp.size() != nvars_) throw DimensionMismatch("exponent length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_vars(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  require_same_vars(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  LaurentPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
  LaurentPoly r = constant(nvars_, 1);
  LaurentPoly b = *this;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(std::span<const std::int64_t> by) const {
  if (by.size() != nvars_) throw DimensionMismatch("shift length differs from variable count");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += by[i];
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

LaurentPoly LaurentPoly::partial(std::size_t i) const {
  if (i >= nvars_) throw IndexOutOfRange("variable index out of range");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * e[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::euler_derivative(std::size_t i) const {
  if (i >= nvars_) throw IndexOutOfRange("variable index out of range");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * e[i]);
  return out;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
  for (const Rational& v : point) {
    if (v == 0) throw PreconditionViolation("Laurent evaluation at a zero coordinate");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] != 0) t *= rational_pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Int mag = neg ? Int(-c) : c;
    const bool is_const = std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
    if (is_const) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      append_monomial(os, e);
    }
  }
  return os.str();
}

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars) {
  return Parser(text, nvars).run();
}

LaurentPoly lp_exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  require_same_vars(num, den);
  if (den.is_zero()) throw PreconditionViolation("division by the zero Laurent polynomial");
  const std::size_t n = num.nvars();
  if (num.is_zero()) return LaurentPoly(n);

  Exponent mn = num.min_exponent();
  Exponent md = den.min_exponent();
  Exponent neg_mn(n);
  Exponent neg_md(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
  }
  LaurentPoly rem = num.shifted(neg_mn);
  const LaurentPoly d = den.shifted(neg_md);

  Exponent bound(n, 0);
  for (const auto& [e, c] : rem.terms()) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], e[i]);
  }

  const auto& [lead_exp, lead_coeff] = *d.terms().begin();
  LaurentPoly q(n);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    Exponent diff(n);
    for (std::size_t i = 0; i < n; ++i) {
      diff[i] = re[i] - lead_exp[i];
      if (diff[i] < 0 || diff[i] > bound[i]) throw NotDivisible("no exact Laurent quotient");
    }
    if (rc % lead_coeff != 0) throw NotDivisible("no exact Laurent quotient over the integers");
    const LaurentPoly t = LaurentPoly::monomial(n, diff, rc / lead_coeff);
    q += t;
    rem -= t * d;
  }

  Exponent shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = mn[i] - md[i];
  return q.shifted(shift);
}

}  // namespace gsys
