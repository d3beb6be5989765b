#pragma once

#include <map>
#include <string>
#include <string_view>

#include "riordan/rational.hpp"

namespace riordan {

enum class Var { X, Y, K };

/// Exponent vector of a monomial in x, y, k.
struct Monomial {
  unsigned ex = 0,ey = 0, ek = 0;

  unsigned total() const { return ex + ey + ek; }
  unsigned exponent(Var v) const;
  Monomial with_exponent(Var v, unsigned e) const;

  /// Graded lexicographic order with x > y > k. Returns <0, 0, >0.
  static int compare(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.ex == b.ex && a.ey == b.ey && a.ek == b.ek;
  }
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) < 0;
  }
};

/// Sparse multivariate polynomial over Rational in the fixed ring Q[x, y, k].
/// Stored in canonical form: no zero coefficients, terms keyed by exponent
/// vector. The zero polynomial is the empty map.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  MultiPoly() = default;  // zero
  MultiPoly(long n);      // NOLINT: implicit on purpose
  explicit MultiPoly(const Rational& r);

  static MultiPoly variable(Var v, unsigned e = 1);
  /// Canonical syntax: '^' for powers, '*' explicit, terms joined by
  /// " + " / " - ". Throws ParseError.
  static MultiPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;
  /// The value of a constant polynomial; throws if not constant.
  Rational constant_value() const;

  unsigned degree() const;          // total degree; 0 for the zero polynomial
  unsigned degree(Var v) const;
  bool contains(Var v) const { return degree(v) > 0; }

  Rational coeff(const Monomial& m) const;
  /// Polynomial in the remaining variables multiplying v^e.
  MultiPoly coeff_of(Var v, unsigned e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator*(const Rational& r) const;
  MultiPoly pow(unsigned e) const;

  /// Exact quotient q with q*d == *this; throws NotDivisible otherwise.
  MultiPoly exact_div(const MultiPoly& d) const;

  MultiPoly substitute(Var v, const MultiPoly& value) const;
  MultiPoly substitute(Var v, const Rational& value) const;
  /// k^n * p(x, 1/k): each y^m becomes k^(n-m). Requires deg_y <= n and a
  /// k-free input.
  MultiPoly homogenize_y(unsigned n) const;

  std::string str() const;

  const TermMap& terms() const { return terms_; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline MultiPoly poly_x() { return MultiPoly::variable(Var::X); }
inline MultiPoly poly_y() { return MultiPoly::variable(Var::Y); }
inline MultiPoly poly_k() { return MultiPoly::variable(Var::K); }

}  // namespace riordan
