#include "riordan/hankel.hpp"

#include <algorithm>
#include <unordered_map>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

// Laplace expansion along the first remaining row, memoized on the set of
// still-active columns (rows are always consumed top-down).
MultiPoly cofactor_det(const PolyMatrix& m, unsigned row, unsigned colmask,
                       std::unordered_map<unsigned, MultiPoly>& memo) {
  if (colmask == 0) return MultiPoly(1);
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  MultiPoly acc;
  int sign = 1;
  for (unsigned c = 0; c < m.cols(); ++c) {
    if ((colmask & (1u << c)) == 0) continue;
    if (!m.at(row, c).is_zero()) {
      MultiPoly sub = cofactor_det(m, row + 1, colmask & ~(1u << c), memo);
      MultiPoly term = m.at(row, c) * sub;
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

MultiPoly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  unsigned n = m.rows();
  if (n == 0) return MultiPoly(1);
  PolyMatrix a = m;
  MultiPoly prev(1);
  bool negate = false;
  for (unsigned step = 0; step + 1 < n; ++step) {
    if (a.at(step, step).is_zero()) {
      unsigned swap_row = step + 1;
      while (swap_row < n && a.at(swap_row, step).is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly();
      for (unsigned j = 0; j < n; ++j) std::swap(a.at(step, j), a.at(swap_row, j));
      negate = !negate;
    }
    for (unsigned i = step + 1; i < n; ++i) {
      for (unsigned j = step + 1; j < n; ++j)
        a.at(i, j) =
            (a.at(step, step) * a.at(i, j) - a.at(i, step) * a.at(step, j)).exact_div(prev);
      a.at(i, step) = MultiPoly();
    }
    prev = a.at(step, step);
  }
  MultiPoly det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

MultiPoly hankel_det(const std::vector<MultiPoly>& moments, unsigned n) {
  if (moments.size() < 2 * n + 1)
    throw InsufficientMoments("Hankel h_" + std::to_string(n) + " needs moments through index " +
                              std::to_string(2 * n));
  PolyMatrix h(n + 1, n + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) h.at(i, j) = moments[i + j];
  if (n <= 5) {
    std::unordered_map<unsigned, MultiPoly> memo;
    return cofactor_det(h, 0, (1u << (n + 1)) - 1, memo);
  }
  return poly_det(h);
}

MultiPoly hankel_closed_keuler(unsigned n) {
  MultiPoly h = (poly_k() * poly_x()).pow(n * (n + 1) / 2);
  for (unsigned i = 1; i <= n; ++i)
    h *= MultiPoly(Rational(factorial_z(i))) * (MultiPoly(static_cast<long>(i)) * poly_k() + 1).pow(n - i);
  return h;
}

MultiPoly hankel_closed_keuler_superfactorial(unsigned n) {
  mpz_class super = 1;
  for (unsigned j = 0; j <= n; ++j) super *= factorial_z(j);
  MultiPoly h = (poly_k() * poly_x()).pow(n * (n + 1) / 2) * MultiPoly(Rational(super));
  for (unsigned i = 1; i <= n; ++i)
    h *= (MultiPoly(static_cast<long>(i)) * poly_k() + 1).pow(n - i);
  return h;
}

MultiPoly hankel_closed_sv(unsigned n) {
  MultiPoly h = poly_x().pow(n * (n + 1) / 2) * poly_y().pow(n);
  for (unsigned i = 1; i <= n; ++i)
    h *= (MultiPoly(static_cast<long>(i + 1)) * (poly_y() + MultiPoly(static_cast<long>(i)))).pow(n - i);
  return h;
}

MultiPoly hankel_from_betas(const std::vector<MultiPoly>& betas, unsigned n) {
  if (betas.size() < n)
    throw InsufficientData("beta product for h_" + std::to_string(n) + " needs beta_1..beta_" +
                           std::to_string(n));
  MultiPoly h(1);
  for (unsigned m = 1; m <= n; ++m) h *= betas[m - 1].pow(n + 1 - m);
  return h;
}

HankelResult hankel_check(Family f, unsigned n) {
  MultiPoly closed;
  switch (f) {
    case Family::KeulerMoment:
      closed = hankel_closed_keuler(n);
      break;
    case Family::SvMoment:
      closed = hankel_closed_sv(n);
      break;
    default:
      throw UnknownFamily("no Hankel closed form for " + std::string(family_name(f)));
  }
  RiordanPair p = make_family(f, std::max(2 * n, kDefaultOrder));
  std::vector<MultiPoly> mu = moment_column(p, 2 * n);
  HankelResult res;
  res.n = n;
  res.determinant = hankel_det(mu, n);
  res.closed_form = closed;
  res.match = res.determinant == res.closed_form;
  return res;
}

}  // namespace riordan
