#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "riordan/errors.hpp"
#include "riordan/series.hpp"

using namespace riordan;
using riordan::testing::log_oracle;

namespace {
const unsigned N = 8;
}

TEST_CASE("constructors and coefficient access") {
  TruncSeries e = TruncSeries::exp_linear(poly_k(), N);
  CHECK(e.coeff(0) == MultiPoly(1));
  CHECK(e.coeff(3) == MultiPoly(poly_k().pow(3) * Rational(1, 6)));
  CHECK(e.egf_coeff(3) == poly_k().pow(3));
  CHECK(TruncSeries::z(N).coeff(1).is_one());
  CHECK_THROWS_AS(e.coeff(N + 1), InsufficientOrder);
}

TEST_CASE("multiplication is the Cauchy product") {
  TruncSeries a = TruncSeries::exp_linear(MultiPoly(1), N);
  CHECK(a * a == TruncSeries::exp_linear(MultiPoly(2), N));
  TruncSeries z = TruncSeries::z(N);
  CHECK((z * z).coeff(2).is_one());
  CHECK((z * z).coeff(1).is_zero());
}

TEST_CASE("log matches the alternating-sum oracle") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    TruncSeries s = riordan::testing::random_series(rng, 6, MultiPoly(1));
    CHECK(s.log() == log_oracle(s));
  }
  CHECK_THROWS_AS(TruncSeries::z(N).log(), NonUnitConstantTerm);
}

TEST_CASE("log of 1 + z has the harmonic coefficients") {
  TruncSeries s = (TruncSeries::one(N) + TruncSeries::z(N)).log();
  for (unsigned n = 1; n <= N; ++n)
    CHECK(s.coeff(n) == MultiPoly(Rational(n % 2 ? 1 : -1, static_cast<long>(n))));
}

TEST_CASE("exp and log invert each other") {
  TruncSeries v = TruncSeries::z(N).scale(poly_x() + 2);
  CHECK(v.exp().log() == v);
  TruncSeries u = TruncSeries::one(N) + TruncSeries::z(N).scale(poly_y());
  CHECK(u.log().exp() == u);
  CHECK_THROWS_AS(TruncSeries::one(N).exp(), NonzeroConstantTerm);
}

TEST_CASE("exp agrees with exp_linear") {
  CHECK(TruncSeries::z(N).scale(poly_k()).exp() == TruncSeries::exp_linear(poly_k(), N));
}

TEST_CASE("inverse is the geometric series") {
  TruncSeries s = TruncSeries::one(N) - TruncSeries::z(N);
  TruncSeries inv = s.inverse();
  for (unsigned n = 0; n <= N; ++n) CHECK(inv.coeff(n).is_one());
  CHECK((s * inv) == TruncSeries::one(N));
  CHECK_THROWS_AS(TruncSeries::z(N).inverse(), NonUnitConstantTerm);
}

TEST_CASE("compose substitutes the inner series") {
  // (1/(1-z)) o (z + z^2) at z^2: 1 + z + z^2 + ... gives 1 + (z+z^2) + (z+z^2)^2 + ...
  TruncSeries geom = (TruncSeries::one(4) - TruncSeries::z(4)).inverse();
  TruncSeries inner = TruncSeries::z(4) + TruncSeries::z(4) * TruncSeries::z(4);
  TruncSeries c = geom.compose(inner);
  CHECK(c.coeff(0).is_one());
  CHECK(c.coeff(1).is_one());
  CHECK(c.coeff(2) == MultiPoly(2));
  CHECK(c.coeff(3) == MultiPoly(3));
  CHECK_THROWS_AS(geom.compose(TruncSeries::one(4)), NonzeroConstantTerm);
}

TEST_CASE("reversion solves compose(f, fbar) = z") {
  // fbar of z/(1-z) is z/(1+z): coefficients alternate.
  TruncSeries f = TruncSeries::z(N) * (TruncSeries::one(N) - TruncSeries::z(N)).inverse();
  TruncSeries fbar = f.reversion();
  for (unsigned n = 1; n <= N; ++n)
    CHECK(fbar.coeff(n) == MultiPoly(Rational(n % 2 ? 1 : -1)));
  CHECK_THROWS_AS(TruncSeries::one(N).reversion(), BadLowOrderTerms);
  CHECK_THROWS_AS(TruncSeries::z(N).scale(MultiPoly(2)).reversion(), BadLowOrderTerms);
}

TEST_CASE("derivative drops the order by one") {
  TruncSeries e = TruncSeries::exp_linear(MultiPoly(2), N);
  TruncSeries d = e.derivative();
  CHECK(d.order() == N - 1);
  CHECK(d == e.truncate(N - 1).scale(MultiPoly(2)));
}

TEST_CASE("pow_sym expands the binomial series") {
  TruncSeries s = TruncSeries::one(3) + TruncSeries::z(3);
  TruncSeries p = s.pow_sym(poly_y());
  CHECK(p.coeff(0).is_one());
  CHECK(p.coeff(1) == poly_y());
  CHECK(p.coeff(2) == poly_y() * (poly_y() - 1) * Rational(1, 2));
  CHECK(p.coeff(3) == poly_y() * (poly_y() - 1) * (poly_y() - 2) * Rational(1, 6));
  CHECK(s.pow_sym(MultiPoly(3)) == s * s * s);
}

TEST_CASE("pow_recip_k stays polynomial in k") {
  TruncSeries s = TruncSeries::one(4) + TruncSeries::z(4).scale(poly_k());
  TruncSeries p = s.pow_recip_k();
  CHECK(p.coeff(0).is_one());
  CHECK(p.coeff(1).is_one());
  CHECK(p.coeff(2) == (MultiPoly(1) - poly_k()) * Rational(1, 2));
  // (1+kz)^(1/k) at k = 1 is 1 + z.
  TruncSeries at1 = p.substitute(Var::K, Rational(1));
  CHECK(at1 == TruncSeries::one(4) + TruncSeries::z(4));
}

TEST_CASE("exact coefficient division") {
  TruncSeries s = TruncSeries::exp_linear(poly_k(), 4) - TruncSeries::one(4);
  TruncSeries q = s.exact_div_poly(poly_k());
  CHECK(q.coeff(1).is_one());
  CHECK(q.coeff(2) == MultiPoly(poly_k() * Rational(1, 2)));
  CHECK_THROWS_AS(TruncSeries::one(4).exact_div_poly(poly_k()), NotDivisible);
}

TEST_CASE("coefficient_list respects the series kind") {
  TruncSeries e = TruncSeries::exp_linear(MultiPoly(1), 5);
  auto egf = coefficient_list(e, SeriesKind::Egf, 5);
  for (const MultiPoly& c : egf) CHECK(c.is_one());
  auto ogf = coefficient_list(e, SeriesKind::Ogf, 4);
  CHECK(ogf[3] == MultiPoly(Rational(1, 6)));
  CHECK_THROWS_AS(coefficient_list(e, SeriesKind::Egf, 7), InsufficientOrder);
}
