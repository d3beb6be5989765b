#include "riordan/combinat.hpp"

#include <algorithm>
#include <numeric>

#include "riordan/errors.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

unsigned long PermStats::total() const {
  unsigned long t = 0;
  for (const auto& [key, count] : histogram) t += count;
  return t;
}

PermStats perm_stats(unsigned n) {
  if (n > kMaxEnumN)
    throw TooLarge("permutation enumeration capped at n = " + std::to_string(kMaxEnumN));
  PermStats stats;
  stats.n = n;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<bool> seen(n);
  do {
    unsigned exc = 0;
    for (unsigned i = 0; i < n; ++i)
      if (perm[i] > i) ++exc;
    std::fill(seen.begin(), seen.end(), false);
    unsigned cyc = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cyc;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    ++stats.histogram[{exc, cyc}];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return stats;
}

MultiPoly sv_oracle(unsigned n) {
  PermStats stats = perm_stats(n);
  MultiPoly f;
  for (const auto& [key, count] : stats.histogram)
    f += MultiPoly::variable(Var::X, key.first) * MultiPoly::variable(Var::Y, key.second) *
         MultiPoly(static_cast<long>(count));
  return f;
}

StirlingTables stirling_triangles(unsigned n) {
  std::vector<std::vector<mpz_class>> s1(n + 1);
  s1[0] = {1};
  for (unsigned r = 1; r <= n; ++r) {
    s1[r].assign(r + 1, 0);
    for (unsigned m = 0; m <= r; ++m) {
      if (m > 0) s1[r][m] += s1[r - 1][m - 1];
      if (m < r) s1[r][m] += (r - 1) * s1[r - 1][m];
    }
  }
  RiordanPair s2 = stirling2_general(poly_x() - 1, n + 1);
  return {std::move(s1), realize(s2, n + 1)};
}

std::vector<std::vector<mpz_class>> classical_stirling2(unsigned n) {
  std::vector<std::vector<mpz_class>> s2(n + 1);
  s2[0] = {1};
  for (unsigned r = 1; r <= n; ++r) {
    s2[r].assign(r + 1, 0);
    for (unsigned m = 1; m <= r; ++m) {
      s2[r][m] = s2[r - 1][m - 1];
      if (m < r) s2[r][m] += m * s2[r - 1][m];
    }
  }
  return s2;
}

namespace {

MultiPoly stirling_double_sum(unsigned n, const MultiPoly& mark, bool reverse_exponent) {
  StirlingTables tables = stirling_triangles(n);
  MultiPoly acc;
  for (unsigned j = 0; j <= n; ++j) {
    MultiPoly inner;
    for (unsigned m = 0; m <= j; ++m)
      inner += MultiPoly(Rational(tables.s1_unsigned[j][m])) *
               mark.pow(reverse_exponent ? n - m : m);
    acc += tables.s2_generalized.at(n, j) * inner;
  }
  return acc;
}

}  // namespace

MultiPoly sv_from_stirling(unsigned n) { return stirling_double_sum(n, poly_y(), false); }

MultiPoly keuler_from_stirling(unsigned n) { return stirling_double_sum(n, poly_k(), true); }

mpz_class fubini_oracle(unsigned n) {
  std::vector<std::vector<mpz_class>> s2 = classical_stirling2(n);
  mpz_class acc = 0;
  for (unsigned j = 0; j <= n; ++j) acc += s2[n][j] * factorial_z(j);
  return acc;
}

MultiPoly rising_factorial(unsigned n) {
  MultiPoly acc(1);
  for (unsigned i = 0; i < n; ++i) acc *= poly_y() + MultiPoly(static_cast<long>(i));
  return acc;
}

bool SpecializationReport::all_ok() const {
  for (const auto& line : lines)
    if (!line.ok) return false;
  return true;
}

SpecializationReport specialization_checks(unsigned n_max) {
  if (n_max > kMaxEnumN)
    throw TooLarge("specialization checks use the enumeration oracle; n_max <= 8");
  SpecializationReport report;
  std::vector<MultiPoly> f;
  for (unsigned n = 0; n <= n_max; ++n) f.push_back(sv_oracle(n));

  bool fubini_ok = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational got = f[n].substitute(Var::X, Rational(2)).substitute(Var::Y, Rational(1)).constant_value();
    if (got != Rational(fubini_oracle(n))) fubini_ok = false;
  }
  report.lines.push_back({"F_n(2,1) = sum_j S(n,j) j!", fubini_ok});

  TruncSeries base(n_max), doubled(n_max);
  std::vector<MultiPoly> b(n_max + 1), d(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational inv_fact = Rational(1) / factorial(n);
    b[n] = MultiPoly(f[n].substitute(Var::X, Rational(2)).substitute(Var::Y, Rational(1)).constant_value() * inv_fact);
    d[n] = MultiPoly(f[n].substitute(Var::X, Rational(2)).substitute(Var::Y, Rational(2)).constant_value() * inv_fact);
  }
  base = TruncSeries(b);
  doubled = TruncSeries(d);
  report.lines.push_back({"F_n(2,2) EGF is the square of the F_n(2,1) EGF", doubled == base * base});

  bool rising_ok = true;
  for (unsigned n = 0; n <= n_max; ++n)
    if (f[n].substitute(Var::X, Rational(1)) != rising_factorial(n)) rising_ok = false;
  report.lines.push_back({"F_n(1,y) = y(y+1)...(y+n-1)", rising_ok});

  bool delta_ok = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational got = f[n].substitute(Var::X, Rational(1)).substitute(Var::Y, Rational(0)).constant_value();
    if (got != Rational(n == 0 ? 1 : 0)) delta_ok = false;
  }
  report.lines.push_back({"F_n(1,0) = [n = 0]", delta_ok});

  return report;
}

}  // namespace riordan
