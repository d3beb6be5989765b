#include "riordan/series.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

TruncSeries::TruncSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
}

TruncSeries TruncSeries::one(unsigned order) {
  TruncSeries s(order);
  s.coeffs_[0] = MultiPoly(1);
  return s;
}

TruncSeries TruncSeries::z(unsigned order) {
  TruncSeries s(order);
  if (order < 1) throw InsufficientOrder("TruncSeries::z: order must be >= 1");
  s.coeffs_[1] = MultiPoly(1);
  return s;
}

TruncSeries TruncSeries::constant(const MultiPoly& p, unsigned order) {
  TruncSeries s(order);
  s.coeffs_[0] = p;
  return s;
}

TruncSeries TruncSeries::exp_linear(const MultiPoly& p, unsigned order) {
  TruncSeries s(order);
  MultiPoly pn(1);
  Rational inv_fact(1);
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) {
      pn *= p;
      inv_fact /= Rational(static_cast<long>(n));
    }
    s.coeffs_[n] = pn * inv_fact;
  }
  return s;
}

const MultiPoly& TruncSeries::coeff(unsigned n) const {
  if (n >= coeffs_.size())
    throw InsufficientOrder("TruncSeries: coefficient " + std::to_string(n) +
                            " beyond order " + std::to_string(order()));
  return coeffs_[n];
}

MultiPoly TruncSeries::egf_coeff(unsigned n) const { return coeff(n) * factorial(n); }

bool TruncSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const MultiPoly& p) { return p.is_zero(); });
}

TruncSeries TruncSeries::truncate(unsigned order) const {
  if (order >= this->order()) return *this;
  TruncSeries s(order);
  std::copy(coeffs_.begin(), coeffs_.begin() + order + 1, s.coeffs_.begin());
  return s;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s(order());
  for (unsigned n = 0; n <= order(); ++n) s.coeffs_[n] = -coeffs_[n];
  return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  unsigned n = std::min(a.order(), b.order());
  TruncSeries s(n);
  for (unsigned i = 0; i <= n; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return s;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  unsigned n = std::min(a.order(), b.order());
  TruncSeries s(n);
  for (unsigned i = 0; i <= n; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return s;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  unsigned n = std::min(a.order(), b.order());
  TruncSeries s(n);
  for (unsigned i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

TruncSeries TruncSeries::scale(const MultiPoly& p) const {
  TruncSeries s(order());
  for (unsigned n = 0; n <= order(); ++n) s.coeffs_[n] = coeffs_[n] * p;
  return s;
}

TruncSeries TruncSeries::scale(const Rational& r) const {
  TruncSeries s(order());
  for (unsigned n = 0; n <= order(); ++n) s.coeffs_[n] = coeffs_[n] * r;
  return s;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  if (!inner.coeff(0).is_zero())
    throw NonzeroConstantTerm("compose: inner constant term must be zero");
  unsigned n = std::min(order(), inner.order());
  TruncSeries in = inner.truncate(n);
  // Horner over the outer coefficients; valuation(inner) >= 1 keeps each
  // truncated product exact to order n.
  TruncSeries acc = TruncSeries::constant(coeffs_[n], n);
  for (unsigned i = n; i-- > 0;) {
    acc = acc * in;
    acc.coeffs_[0] += coeffs_[i];
  }
  return acc;
}

TruncSeries TruncSeries::reversion() const {
  if (order() < 1 || !coeff(0).is_zero() || !coeff(1).is_one())
    throw BadLowOrderTerms("reversion: requires f(0) = 0 and f'(0) = 1");
  unsigned n = order();
  std::vector<MultiPoly> rev{MultiPoly(0), MultiPoly(1)};
  for (unsigned m = 2; m <= n; ++m) {
    rev.push_back(MultiPoly(0));
    TruncSeries partial{rev};
    MultiPoly err = truncate(m).compose(partial).coeff(m);
    rev.back() = -err;  // coefficient of fbar_m in [z^m] f(fbar) is f_1 = 1
  }
  return TruncSeries(std::move(rev));
}

TruncSeries TruncSeries::log() const {
  if (!coeff(0).is_one())
    throw NonUnitConstantTerm("log: constant term must be 1");
  unsigned n = order();
  TruncSeries u = *this;
  u.coeffs_[0] = MultiPoly(0);
  TruncSeries acc(n);
  TruncSeries up = u;
  for (unsigned m = 1; m <= n; ++m) {
    Rational c(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
    acc = acc + up.scale(c);
    if (m < n) up = up * u;
  }
  return acc;
}

TruncSeries TruncSeries::exp() const {
  if (!coeff(0).is_zero())
    throw NonzeroConstantTerm("exp: constant term must be zero");
  unsigned n = order();
  TruncSeries acc = TruncSeries::one(n);
  TruncSeries up = TruncSeries::one(n);
  for (unsigned m = 1; m <= n; ++m) {
    up = (up * *this).scale(Rational(1, static_cast<long>(m)));
    acc = acc + up;
  }
  return acc;
}

TruncSeries TruncSeries::inverse() const {
  if (!coeff(0).is_one())
    throw NonUnitConstantTerm("inverse: constant term must be 1");
  unsigned n = order();
  TruncSeries v = TruncSeries::one(n) - *this;  // valuation >= 1
  TruncSeries acc = TruncSeries::one(n);
  TruncSeries vp = TruncSeries::one(n);
  for (unsigned m = 1; m <= n; ++m) {
    vp = vp * v;
    acc = acc + vp;
  }
  return acc;
}

TruncSeries TruncSeries::derivative() const {
  if (order() < 1)
    throw InsufficientOrder("derivative: order must be >= 1");
  TruncSeries s(order() - 1);
  for (unsigned i = 0; i < order(); ++i)
    s.coeffs_[i] = coeffs_[i + 1] * Rational(static_cast<long>(i) + 1);
  return s;
}

TruncSeries TruncSeries::pow_sym(const MultiPoly& exponent) const {
  return log().scale(exponent).exp();
}

TruncSeries TruncSeries::pow_recip_k() const {
  TruncSeries l = log();
  MultiPoly k = poly_k();
  for (unsigned n = 1; n <= l.order(); ++n)
    l.coeffs_[n] = l.coeffs_[n].exact_div(k);
  return l.exp();
}

TruncSeries TruncSeries::exact_div_poly(const MultiPoly& d) const {
  TruncSeries s(order());
  for (unsigned n = 0; n <= order(); ++n) s.coeffs_[n] = coeffs_[n].exact_div(d);
  return s;
}

TruncSeries TruncSeries::substitute(Var v, const MultiPoly& value) const {
  TruncSeries s(order());
  for (unsigned n = 0; n <= order(); ++n) s.coeffs_[n] = coeffs_[n].substitute(v, value);
  return s;
}

TruncSeries TruncSeries::substitute(Var v, const Rational& value) const {
  return substitute(v, MultiPoly(value));
}

std::vector<MultiPoly> coefficient_list(const TruncSeries& s, SeriesKind kind,
                                        unsigned count) {
  if (count > s.order() + 1)
    throw InsufficientOrder("coefficient_list: series order too small");
  std::vector<MultiPoly> out;
  out.reserve(count);
  for (unsigned n = 0; n < count; ++n)
    out.push_back(kind == SeriesKind::Egf ? s.egf_coeff(n) : s.coeff(n));
  return out;
}

}  // namespace riordan
