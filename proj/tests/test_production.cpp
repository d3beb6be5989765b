#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/errors.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"

using namespace riordan;

namespace {

TruncSeries one_plus(const MultiPoly& slope, unsigned order) {
  return TruncSeries::one(order) + TruncSeries::z(order).scale(slope);
}

}  // namespace

TEST_CASE("Pascal's triangle has a bidiagonal production matrix") {
  RiordanPair pascal = binomial_array(8);
  ZAForms za = compute_za(pascal);
  CHECK(za.A.truncate(5) == TruncSeries::one(5));
  CHECK(za.Z.truncate(5) == TruncSeries::one(5));
  PolyMatrix p = production_ladder(pascal, 6);
  for (unsigned r = 0; r < 6; ++r)
    for (unsigned c = 0; c < 6; ++c) {
      MultiPoly want = (c == r || c == r + 1) ? MultiPoly(1) : MultiPoly(0);
      CHECK(p.at(r, c) == want);
    }
}

TEST_CASE("A and Z closed forms for the moment arrays") {
  MultiPoly x = poly_x(), y = poly_y(), k = poly_k();

  ZAForms ka = compute_za(make_family(Family::KeulerMoment, 9));
  CHECK(ka.A.truncate(6) == (one_plus(k, 6) * one_plus(k * x, 6)).truncate(6));
  CHECK(ka.Z.truncate(6) == one_plus(k * x, 6));

  ZAForms sv = compute_za(make_family(Family::SvMoment, 9));
  CHECK(sv.A.truncate(6) == (one_plus(MultiPoly(1), 6) * one_plus(x, 6)).truncate(6));
  CHECK(sv.Z.truncate(6) == one_plus(x, 6).scale(y));
}

TEST_CASE("analytic and ladder production matrices agree for every family") {
  for (Family f : kAllFamilies) {
    RiordanPair p = make_family(f, 7);
    CHECK(production_ladder(p, 6) == production_analytic(compute_za(p), 6));
  }
}

TEST_CASE("ladder recurrence data matches the closed forms") {
  for (Family f : {Family::KeulerMoment, Family::SvMoment,
                   Family::KeulerShiftedMoment, Family::SvShiftedMoment}) {
    TTRData got = extract_ttr(production_ladder(make_family(f, 8), 7));
    TTRData want = family_ttr(f, 7);
    for (unsigned n = 0; n < 7; ++n) CHECK(got.alpha[n] == want.alpha[n]);
    for (unsigned n = 0; n < 6; ++n) CHECK(got.beta[n] == want.beta[n]);
  }
}

TEST_CASE("the composition bridge is not of moment type") {
  PolyMatrix p = production_ladder(make_family(Family::StirlingBridge, 8), 6);
  MatrixEntryRef witness;
  CHECK_FALSE(is_tridiagonal(p, &witness));
  CHECK(witness.row >= witness.col + 2);
  CHECK_THROWS_AS(extract_ttr(p), NotTridiagonal);
}

TEST_CASE("tridiagonality witness points at the first offender") {
  PolyMatrix m = PolyMatrix::identity(5);
  m.at(3, 0) = MultiPoly(7);
  MatrixEntryRef witness;
  CHECK_FALSE(is_tridiagonal(m, &witness));
  CHECK(witness.row == 3);
  CHECK(witness.col == 0);
}

TEST_CASE("extract_ttr insists on a unit superdiagonal") {
  PolyMatrix m = PolyMatrix::identity(4);
  for (unsigned r = 0; r + 1 < 4; ++r) m.at(r, r + 1) = MultiPoly(2);
  CHECK_THROWS_AS(extract_ttr(m), NonMonicSuperdiagonal);
}

TEST_CASE("the two production matrices agree under specialization") {
  PolyMatrix pk = production_ladder(make_family(Family::KeulerMoment, 8), 7);
  PolyMatrix ps = production_ladder(make_family(Family::SvMoment, 8), 7);
  for (long kval : {1L, 2L, 3L}) {
    PolyMatrix lhs = pk.substitute(Var::K, Rational(kval));
    PolyMatrix rhs = ps.substitute(Var::Y, Rational(1, kval));
    for (unsigned r = 0; r < 7; ++r)
      for (unsigned c = 0; c < 7; ++c) {
        long e = 1 + static_cast<long>(r) - static_cast<long>(c);
        CHECK(lhs.at(r, c) == rhs.at(r, c) * Rational(kval).pow(e));
      }
  }
}

TEST_CASE("recurrence coefficients beta_n never vanish") {
  for (Family f : {Family::KeulerMoment, Family::SvMoment,
                   Family::KeulerShiftedMoment, Family::SvShiftedMoment}) {
    TTRData t = family_ttr(f, 7);
    for (const MultiPoly& b : t.beta) CHECK_FALSE(b.is_zero());
  }
}
