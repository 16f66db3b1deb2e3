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

#include "gsys/laurent_seed.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsys/errors.hpp"

namespace gsys {

namespace {

std::uint64_t to_exponent(const Int& v) {
  if (v < 0 || v > Int(1'000'000)) throw PreconditionViolation("exchange exponent out of range");
  return v.convert_to<std::uint64_t>();
}

std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(2, 97);
  std::vector<Rational> p(n);
  for (auto& v : p) v = dist(rng);
  return p;
}

}  // namespace

LaurentSeed LaurentSeed::initial(const ExchangeMatrix& b0) {
  const std::size_t n = b0.size();
  LaurentSeed s{{}, b0, {}};
  for (std::size_t i = 0; i < n; ++i) s.cluster.push_back(LaurentPoly::variable(n, i));
  return s;
}

std::vector<std::string> LaurentSeed::cluster_text() const {
  std::vector<std::string> out;
  out.reserve(cluster.size());
  for (const auto& p : cluster) out.push_back(p.to_string());
  return out;
}

LaurentPoly exchange_binomial(const LaurentSeed& seed, std::size_t k) {
  const std::size_t n = seed.rank();
  check_index(k, n);
  LaurentPoly pos = LaurentPoly::constant(n, 1);
  LaurentPoly neg = LaurentPoly::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    const Int& bjk = seed.b(j, k);
    if (bjk > 0) pos *= seed.cluster[j].pow(to_exponent(bjk));
    if (bjk < 0) neg *= seed.cluster[j].pow(to_exponent(-bjk));
  }
  return pos + neg;
}

LaurentSeed mutate_cluster(const LaurentSeed& seed, std::size_t k) {
  check_index(k, seed.rank());
  LaurentSeed out = seed;
  try {
    out.cluster[k] = lp_exact_divide(exchange_binomial(seed, k), seed.cluster[k]);
  } catch (const NotDivisible& e) {
    throw InternalLaurentFailure(std::string("exchange relation left the Laurent ring: ") + e.what());
  }
  out.b = seed.b.mutate(k);
  out.history.push_back(k);
  return out;
}

LaurentSeed cluster_at(const ExchangeMatrix& b0, std::span<const std::size_t> seq) {
  for (std::size_t k : seq) check_index(k, b0.size());
  LaurentSeed s = LaurentSeed::initial(b0);
  for (std::size_t k : seq) s = mutate_cluster(s, k);
  return s;
}

HMatrix::HMatrix(const LaurentSeed& seed) : denom_(seed.cluster) {
  const std::size_t n = seed.rank();
  for (const auto& x : denom_) {
    if (x.is_zero()) throw PreconditionViolation("zero cluster entry");
  }
  numer_.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) numer_[i][j] = denom_[j].euler_derivative(i);
  }
}

std::vector<std::vector<Rational>> HMatrix::evaluate(std::span<const Rational> point) const {
  const std::size_t n = size();
  std::vector<Rational> den(n);
  for (std::size_t j = 0; j < n; ++j) {
    den[j] = denom_[j].evaluate(point);
    if (den[j] == 0) throw PreconditionViolation("cluster entry vanishes at evaluation point");
  }
  std::vector<std::vector<Rational>> h(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = numer_[i][j].evaluate(point) / den[j];
  }
  return h;
}

LaurentPoly laurent_determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly();
  const std::size_t nv = m[0][0].nvars();
  if (n == 1) return m[0][0];
  LaurentPoly det(nv);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][c] * laurent_determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

int HMatrix::determinant_sign() const {
  const std::size_t nv = denom_[0].nvars();
  LaurentPoly prod = LaurentPoly::constant(nv, 1);
  for (const auto& x : denom_) prod *= x;
  const LaurentPoly det = laurent_determinant(numer_);
  if (det == prod) return 1;
  if (det == -prod) return -1;
  return 0;
}

bool HMatrix::cluster_formula_holds(const ExchangeMatrix& bt, const ExchangeMatrix& b0) const {
  const std::size_t n = size();
  if (bt.size() != n || b0.size() != n) throw DimensionMismatch("cluster formula: rank mismatch");
  const std::size_t nv = denom_[0].nvars();
  const IntVector& s = b0.symmetrizer();
  Int l = 1;
  for (const Int& v : s) l = boost::multiprecision::lcm(l, v);

  std::vector<LaurentPoly> others(n, LaurentPoly::constant(nv, 1));
  LaurentPoly prod = LaurentPoly::constant(nv, 1);
  for (std::size_t c = 0; c < n; ++c) {
    prod *= denom_[c];
    for (std::size_t d = 0; d < n; ++d) {
      if (d != c) others[c] *= denom_[d];
    }
  }
  const LaurentPoly prod_sq = prod * prod;

  std::vector<std::vector<LaurentPoly>> mid(n, std::vector<LaurentPoly>(n, LaurentPoly(nv)));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = 0; d < n; ++d) {
      if (bt(c, d) == 0) continue;
      mid[c][d] = others[c] * others[d] * LaurentPoly::constant(nv, bt(c, d) * (l / s[d]));
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    std::vector<LaurentPoly> row(n, LaurentPoly(nv));
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!numer_[a][c].is_zero() && !mid[c][d].is_zero()) row[d] += numer_[a][c] * mid[c][d];
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      LaurentPoly lhs(nv);
      for (std::size_t d = 0; d < n; ++d) {
        if (!row[d].is_zero() && !numer_[b][d].is_zero()) lhs += row[d] * numer_[b][d];
      }
      const LaurentPoly rhs = prod_sq * LaurentPoly::constant(nv, b0(a, b) * (l / s[b]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

IntMatrix h_matrix_integer(const LaurentSeed& seed, std::mt19937_64& rng) {
  const HMatrix h(seed);
  const std::size_t n = h.size();
  std::vector<std::vector<std::vector<Rational>>> samples;
  for (int attempt = 0; samples.size() < 3 && attempt < 32; ++attempt) {
    try {
      samples.push_back(h.evaluate(random_point(n, rng)));
    } catch (const PreconditionViolation&) {
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool agree = samples.size() == 3;
      for (const auto& s : samples) agree = agree && s[i][j] == samples[0][i][j];
      if (agree && denominator(samples[0][i][j]) == 1) {
        out(i, j) = numerator(samples[0][i][j]);
        continue;
      }
      LaurentPoly q;
      try {
        q = lp_exact_divide(h.numer(i, j), h.denom(j));
      } catch (const NotDivisible&) {
        throw NonIntegerEntry("H entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not a Laurent polynomial");
      }
      if (q.is_zero()) continue;
      const auto& [e, c] = *q.terms().begin();
      const bool is_const = q.term_count() == 1 &&
                            std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
      if (!is_const) {
        throw NonIntegerEntry("H entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") is not constant");
      }
      out(i, j) = c;
    }
  }
  return out;
}

}  // namespace gsys
