#pragma once

#include <vector>

#include "riordan/multipoly.hpp"

namespace riordan {

/// Truncation order used throughout unless a caller asks for more.
inline constexpr unsigned kDefaultOrder = 10;

/// Whether coefficient extraction multiplies coefficient n by n!.
enum class SeriesKind { Egf, Ogf };

/// Truncated formal power series in z with MultiPoly coefficients.
/// Coefficients are known for z^0 .. z^order; operations truncate to the
/// minimum order of their inputs.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order) : coeffs_(order + 1) {}
  explicit TruncSeries(std::vector<MultiPoly> coeffs);

  static TruncSeries zero(unsigned order) { return TruncSeries(order); }
  static TruncSeries one(unsigned order);
  static TruncSeries z(unsigned order);
  static TruncSeries constant(const MultiPoly& p, unsigned order);
  /// e^{p z}: coefficient of z^n is p^n / n!.
  static TruncSeries exp_linear(const MultiPoly& p, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const MultiPoly& coeff(unsigned n) const;
  /// n! * [z^n]; the EGF reading of the coefficient.
  MultiPoly egf_coeff(unsigned n) const;

  bool is_zero() const;
  TruncSeries truncate(unsigned order) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  /// Cauchy product truncated to min(order(a), order(b)).
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scale(const MultiPoly& p) const;
  TruncSeries scale(const Rational& r) const;

  /// outer(inner(z)); inner must have zero constant term.
  TruncSeries compose(const TruncSeries& inner) const;
  /// Compositional inverse; requires f(0) = 0 and f'(0) = 1. Solved
  /// coefficient by coefficient from compose(f, fbar) = z.
  TruncSeries reversion() const;
  /// ln(s) for s with constant term 1.
  TruncSeries log() const;
  /// exp(s) for s with constant term 0.
  TruncSeries exp() const;
  /// 1/s for s with constant term 1.
  TruncSeries inverse() const;
  /// Termwise derivative; order drops by one.
  TruncSeries derivative() const;
  /// s^e = exp(e * log s) for arbitrary polynomial exponent e; s(0) = 1.
  TruncSeries pow_sym(const MultiPoly& exponent) const;
  /// s^(1/k) = exp((log s)/k); every log coefficient must be exactly
  /// divisible by k, which keeps the result inside the polynomial ring.
  TruncSeries pow_recip_k() const;

  /// Divides every coefficient exactly by d.
  TruncSeries exact_div_poly(const MultiPoly& d) const;
  TruncSeries substitute(Var v, const MultiPoly& value) const;
  TruncSeries substitute(Var v, const Rational& value) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) {
    return !(a == b);
  }

 private:
  std::vector<MultiPoly> coeffs_;
};

/// First `count` coefficients, multiplied by n! when kind is Egf.
std::vector<MultiPoly> coefficient_list(const TruncSeries& s, SeriesKind kind,
                                        unsigned count);

}  // namespace riordan
