#include "riordan/production.hpp"

#include "riordan/errors.hpp"

namespace riordan {

ZAForms compute_za(const RiordanPair& p) {
  TruncSeries fbar = p.f.reversion();
  TruncSeries A = p.f.derivative().compose(fbar);
  TruncSeries Z = p.g.derivative().compose(fbar) * p.g.compose(fbar).inverse();
  return {A, Z};
}

PolyMatrix production_analytic(const ZAForms& za, unsigned n) {
  if (n > 0 && (za.A.order() + 1 < n || za.Z.order() + 1 < n))
    throw InsufficientOrder("series order too small for production matrix of size " +
                            std::to_string(n));
  PolyMatrix m(n, n);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c <= r + 1 && c < n; ++c) {
      MultiPoly entry;
      if (c <= r) entry = za.Z.coeff(r - c) * MultiPoly(falling_factorial_ratio(r, c));
      if (c > 0)
        entry = entry + za.A.coeff(r - c + 1) * MultiPoly(falling_factorial_ratio(r, c - 1));
      m.at(r, c) = entry;
    }
  }
  return m;
}

PolyMatrix production_ladder(const RiordanPair& p, unsigned n) {
  PolyMatrix big = realize(p, n + 1);
  PolyMatrix head = big.top_left(n);
  PolyMatrix tail = big.block(1, 0, n);
  return head.invert_unit_lower_triangular() * tail;
}

TTRData extract_ttr(const PolyMatrix& m) {
  MatrixEntryRef bad{0, 0};
  if (!is_tridiagonal(m, &bad))
    throw NotTridiagonal("nonzero entry at (" + std::to_string(bad.row) + ", " +
                         std::to_string(bad.col) + ") outside the tridiagonal band");
  const MultiPoly one(Rational(1));
  TTRData out;
  for (unsigned r = 0; r < m.rows(); ++r) {
    out.alpha.push_back(m.at(r, r));
    if (r + 1 < m.cols()) {
      if (!(m.at(r, r + 1) == one))
        throw NonMonicSuperdiagonal("superdiagonal entry at row " + std::to_string(r) +
                                    " is not 1");
      out.beta.push_back(m.at(r + 1, r));
    }
  }
  return out;
}

}  // namespace riordan
