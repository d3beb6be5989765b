#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/combinat.hpp"
#include "riordan/errors.hpp"
#include "riordan/riordan_array.hpp"

using namespace riordan;

TEST_CASE("permutation statistics histogram") {
  PermStats s3 = perm_stats(3);
  CHECK(s3.total() == 6);
  CHECK(s3.histogram.at({0, 3}) == 1);  // identity
  CHECK(s3.histogram.at({1, 2}) == 3);  // transpositions
  CHECK(s3.histogram.at({1, 1}) == 1);
  CHECK(s3.histogram.at({2, 1}) == 1);

  PermStats s0 = perm_stats(0);
  CHECK(s0.total() == 1);
  CHECK(s0.histogram.at({0, 0}) == 1);

  for (unsigned n = 1; n <= 6; ++n) {
    PermStats s = perm_stats(n);
    unsigned long fact = 1;
    for (unsigned i = 2; i <= n; ++i) fact *= i;
    CHECK(s.total() == fact);
    for (const auto& [key, count] : s.histogram) {
      CHECK(key.first < n);        // excedances
      CHECK(key.second >= 1);      // cycles
      CHECK(key.second <= n);
      CHECK(count >= 1);
    }
  }
}

TEST_CASE("enumeration oracle gives the bivariate polynomials") {
  MultiPoly x = poly_x(), y = poly_y();
  CHECK(sv_oracle(0) == MultiPoly(1));
  CHECK(sv_oracle(1) == y);
  CHECK(sv_oracle(2) == y * x + y * y);
  CHECK(sv_oracle(3) == y * x * x + MultiPoly(3) * y * y * x + y.pow(3) + y * x);
  CHECK_THROWS_AS(sv_oracle(kMaxEnumN + 1), TooLarge);
}

TEST_CASE("stirling triangles by recurrence") {
  StirlingTables t = stirling_triangles(5);
  const long row4[] = {0, 6, 11, 6, 1};
  for (unsigned m = 0; m <= 4; ++m) CHECK(t.s1_unsigned[4][m] == row4[m]);
  CHECK(t.s1_unsigned[5][1] == 24);
  CHECK(t.s1_unsigned[5][2] == 50);

  auto s2 = classical_stirling2(5);
  CHECK(s2[4][2] == 7);
  CHECK(s2[5][2] == 15);
  CHECK(s2[5][3] == 25);

  MultiPoly a = poly_x() - 1;
  CHECK(t.s2_generalized.at(3, 0) == MultiPoly(0));
  CHECK(t.s2_generalized.at(3, 1) == a * a);
  CHECK(t.s2_generalized.at(3, 2) == MultiPoly(3) * a);
  CHECK(t.s2_generalized.at(3, 3) == MultiPoly(1));
}

TEST_CASE("double-sum formulas reproduce the enumeration oracle") {
  for (unsigned n = 0; n <= 6; ++n) {
    MultiPoly oracle = sv_oracle(n);
    CHECK(sv_from_stirling(n) == oracle);
    CHECK(keuler_from_stirling(n) == oracle.homogenize_y(n));
  }
}

TEST_CASE("fubini numbers by surjection counting") {
  const long want[] = {1, 1, 3, 13, 75, 541};
  for (unsigned n = 0; n <= 5; ++n) CHECK(fubini_oracle(n) == want[n]);
}

TEST_CASE("rising factorial") {
  MultiPoly y = poly_y();
  CHECK(rising_factorial(0) == MultiPoly(1));
  CHECK(rising_factorial(1) == y);
  CHECK(rising_factorial(3) == y * (y + 1) * (y + 2));
}

TEST_CASE("specialization report covers the sample identities") {
  SpecializationReport r = specialization_checks(8);
  CHECK(r.all_ok());
  CHECK(r.lines.size() >= 4);
  for (const CheckLine& line : r.lines) {
    CAPTURE(line.name);
    CHECK(line.ok);
  }
}

TEST_CASE("moment sequence specializations at small arguments") {
  auto f = moment_column(make_family(Family::SvMoment, 7), 7);
  for (unsigned n = 0; n <= 7; ++n) {
    MultiPoly at21 = f[n].substitute(Var::X, Rational(2)).substitute(Var::Y, Rational(1));
    CHECK(at21 == MultiPoly(Rational(fubini_oracle(n))));
    MultiPoly at1y = f[n].substitute(Var::X, Rational(1));
    CHECK(at1y == rising_factorial(n));
    MultiPoly at12 = at1y.substitute(Var::Y, Rational(2));
    CHECK(at12 == MultiPoly(Rational(factorial_z(n + 1))));
    MultiPoly at10 = at1y.substitute(Var::Y, Rational(0));
    CHECK(at10 == (n == 0 ? MultiPoly(1) : MultiPoly(0)));
  }
}
