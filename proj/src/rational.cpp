#include "riordan/rational.hpp"

#include <cctype>

#include "riordan/errors.hpp"

namespace riordan {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("Rational: empty input");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("Rational: bad literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (invert && is_zero()) throw std::domain_error("Rational: 0^negative");
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), n);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), n);
  r.canonicalize();
  Rational out(r);
  if (invert) return Rational(1) / out;
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial_z(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational factorial(unsigned n) { return Rational(factorial_z(n)); }

Rational falling_factorial_ratio(unsigned r, unsigned c) {
  mpz_class p = 1;
  for (unsigned i = c + 1; i <= r; ++i) p *= i;
  return Rational(p);
}

mpz_class binomial_z(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace riordan
