#pragma once

#include <random>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan::testing {

inline Rational random_rational(std::mt19937& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, unsigned max_degree = 3, unsigned max_terms = 4) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  MultiPoly p;
  unsigned t = nterms(rng);
  for (unsigned i = 0; i < t; ++i) {
    MultiPoly m(random_rational(rng));
    m *= MultiPoly::variable(Var::X, deg(rng));
    m *= MultiPoly::variable(Var::Y, deg(rng));
    m *= MultiPoly::variable(Var::K, deg(rng));
    p += m;
  }
  return p;
}

inline MultiPoly random_nonzero_poly(std::mt19937& rng, unsigned max_degree = 3) {
  for (;;) {
    MultiPoly p = random_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

/// Random series with prescribed constant term and unit z-coefficient when
/// asked (the shape Riordan f-series need).
inline TruncSeries random_series(std::mt19937& rng, unsigned order, const MultiPoly& c0,
                                 bool unit_linear = false) {
  std::vector<MultiPoly> coeffs;
  coeffs.push_back(c0);
  for (unsigned n = 1; n <= order; ++n) {
    if (n == 1 && unit_linear)
      coeffs.push_back(MultiPoly(1));
    else
      coeffs.push_back(random_poly(rng, 2, 2));
  }
  return TruncSeries(coeffs);
}

/// Plain recursive Laplace expansion; the slow but obviously-correct
/// determinant oracle.
inline MultiPoly laplace_det(const PolyMatrix& m) {
  unsigned n = m.rows();
  if (n == 0) return MultiPoly(1);
  if (n == 1) return m.at(0, 0);
  MultiPoly acc;
  for (unsigned c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (unsigned i = 1; i < n; ++i) {
      unsigned jj = 0;
      for (unsigned j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    MultiPoly term = m.at(0, c) * laplace_det(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

/// ln(1 + u) by the alternating-sum definition, evaluated straight from the
/// definition with repeated Cauchy products.
inline TruncSeries log_oracle(const TruncSeries& one_plus_u) {
  unsigned order = one_plus_u.order();
  TruncSeries u = one_plus_u - TruncSeries::one(order);
  TruncSeries acc = TruncSeries::zero(order);
  TruncSeries upow = u;
  for (unsigned m = 1; m <= order; ++m) {
    Rational c(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
    acc = acc + upow.scale(c);
    upow = upow * u;
  }
  return acc;
}

}  // namespace riordan::testing
