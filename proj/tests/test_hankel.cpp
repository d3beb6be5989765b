#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "riordan/errors.hpp"
#include "riordan/hankel.hpp"
#include "riordan/orthopoly.hpp"

using namespace riordan;

namespace {

PolyMatrix hankel_matrix(const std::vector<MultiPoly>& mu, unsigned n) {
  PolyMatrix h(n + 1, n + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) h.at(i, j) = mu[i + j];
  return h;
}

}  // namespace

TEST_CASE("hankel_det agrees with cofactor expansion on random data") {
  std::mt19937 rng(20260815);
  for (unsigned n = 0; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<MultiPoly> mu;
      for (unsigned i = 0; i < 2 * n + 1; ++i)
        mu.push_back(testing::random_poly(rng, 2, 3));
      CHECK(hankel_det(mu, n) == testing::laplace_det(hankel_matrix(mu, n)));
    }
  }
}

TEST_CASE("small Hankel determinants of the two moment sequences") {
  MultiPoly x = poly_x(), y = poly_y(), k = poly_k();

  auto a = moment_column(make_family(Family::KeulerMoment, 8), 8);
  CHECK(hankel_det(a, 0) == MultiPoly(1));
  CHECK(hankel_det(a, 1) == k * x);
  CHECK(hankel_det(a, 2) == MultiPoly(2) * (k * x).pow(3) * (k + 1));

  auto f = moment_column(make_family(Family::SvMoment, 8), 8);
  CHECK(hankel_det(f, 0) == MultiPoly(1));
  CHECK(hankel_det(f, 1) == x * y);
  CHECK(hankel_det(f, 2) == MultiPoly(2) * x.pow(3) * y.pow(2) * (y + 1));
}

TEST_CASE("closed forms match the printed prefixes") {
  MultiPoly x = poly_x(), y = poly_y(), k = poly_k();
  CHECK(hankel_closed_keuler(0) == MultiPoly(1));
  CHECK(hankel_closed_keuler(1) == k * x);
  CHECK(hankel_closed_keuler(2) == MultiPoly(2) * (k * x).pow(3) * (k + 1));
  CHECK(hankel_closed_sv(2) == MultiPoly(2) * x.pow(3) * y.pow(2) * (y + 1));
  for (unsigned n = 0; n <= 6; ++n)
    CHECK(hankel_closed_keuler(n) == hankel_closed_keuler_superfactorial(n));
}

TEST_CASE("poly_det handles zero pivots by row swaps") {
  PolyMatrix m(2, 2);
  m.at(0, 1) = MultiPoly(1);
  m.at(1, 0) = MultiPoly(1);
  CHECK(poly_det(m) == MultiPoly(-1));

  PolyMatrix singular(3, 3);
  for (unsigned j = 0; j < 3; ++j) singular.at(1, j) = MultiPoly(static_cast<long>(j));
  CHECK(poly_det(singular).is_zero());
}

TEST_CASE("elimination path agrees with cofactor expansion at size 7") {
  auto a = moment_column(make_family(Family::KeulerMoment, 12), 12);
  std::vector<MultiPoly> nums;
  for (const MultiPoly& p : a)
    nums.push_back(p.substitute(Var::X, Rational(2)).substitute(Var::K, Rational(3)));
  MultiPoly via_split = hankel_det(nums, 6);  // 7x7: elimination path
  MultiPoly via_laplace = testing::laplace_det(hankel_matrix(nums, 6));
  CHECK(via_split == via_laplace);
  MultiPoly closed = hankel_closed_keuler(6)
                         .substitute(Var::X, Rational(2))
                         .substitute(Var::K, Rational(3));
  CHECK(via_split == closed);
}

TEST_CASE("beta products reproduce the determinants") {
  std::vector<MultiPoly> ones(5, MultiPoly(1));
  CHECK(hankel_from_betas(ones, 3) == MultiPoly(1));
  CHECK_THROWS_AS(hankel_from_betas(ones, 6), InsufficientData);

  for (Family f : {Family::KeulerMoment, Family::SvMoment}) {
    auto mu = moment_column(make_family(f, 8), 8);
    TTRData t = family_ttr(f, 5);
    for (unsigned n = 0; n <= 4; ++n)
      CHECK(hankel_det(mu, n) == hankel_from_betas(t.beta, n));
  }
}

TEST_CASE("hankel_det validates the moment count") {
  std::vector<MultiPoly> mu(4, MultiPoly(1));
  CHECK_THROWS_AS(hankel_det(mu, 2), InsufficientMoments);
}

TEST_CASE("hankel_check compares determinant and closed form") {
  for (Family f : {Family::KeulerMoment, Family::SvMoment}) {
    HankelResult r = hankel_check(f, 3);
    CHECK(r.n == 3);
    CHECK(r.match);
    CHECK(r.determinant == r.closed_form);
  }
  CHECK_THROWS_AS(hankel_check(Family::KeulerCoeff, 2), UnknownFamily);
}
