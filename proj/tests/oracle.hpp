#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls into the elimination code under test.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "crsym/linalg.hpp"
#include "crsym/polynomial.hpp"

namespace crsym::oracle {

/// Textbook Gauss-Jordan on a copy of m; returns the pivot columns and leaves
/// m in reduced row echelon form.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline std::vector<std::vector<Rational>> rows_of(const RatMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

inline std::size_t dense_rank(const RatMatrix& a) {
  auto m = rows_of(a);
  return rref(m, a.cols()).size();
}

/// Primitive integer multiple with positive first nonzero entry.
inline RatVector primitive(RatVector v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.denominator());
  Integer g = 0;
  for (auto& x : v) {
    x *= Rational(l);
    g = gcd(g, x.numerator());
  }
  if (g == 0) return v;
  int sign = 0;
  for (const auto& x : v) {
    if (!x.is_zero()) {
      sign = x.sign();
      break;
    }
  }
  const Rational s = Rational(sign < 0 ? Integer(-g) : g);
  for (auto& x : v) x /= s;
  return v;
}

/// Null-space basis read off the reduced row echelon form, one vector per
/// free column in increasing order.
inline std::vector<RatVector> dense_kernel(const RatMatrix& a) {
  auto m = rows_of(a);
  const auto pivots = rref(m, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    out.push_back(primitive(std::move(v)));
  }
  return out;
}

/// Random matrix with small rational entries, a share of zeros, and often a
/// few dependent rows so the kernel is not always the generic one.
inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<int> pct(0, 99);
  RatMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i >= 2 && pct(rng) < 30) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      const std::size_t r1 = pick(rng), r2 = pick(rng);
      const Rational c1(num(rng), den(rng)), c2(num(rng), den(rng));
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = c1 * a(r1, j) + c2 * a(r2, j);
      continue;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (pct(rng) < 35) continue;
      a(i, j) = Rational(num(rng), den(rng));
    }
  }
  return a;
}

inline GaussRational random_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

/// Random holomorphic field on C^{n+1} with a few terms of low degree.
template <class Field>
Field random_field(std::mt19937_64& rng, std::size_t n, unsigned max_deg, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> slot(0, n);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<unsigned> wdeg(0, 1);
  Field x(n);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent z(n);
    const unsigned total = deg(rng);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    for (unsigned k = 0; k < total; ++k) {
      const std::size_t v = var(rng);
      z.set(v, z[v] + 1);
    }
    x += Field::monomial(n, slot(rng), z, wdeg(rng), random_gauss(rng));
  }
  return x;
}

}  // namespace crsym::oracle
