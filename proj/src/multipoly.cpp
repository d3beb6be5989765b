#include "riordan/multipoly.hpp"

#include <algorithm>
#include <cctype>

#include "riordan/errors.hpp"

namespace riordan {

unsigned Monomial::exponent(Var v) const {
  switch (v) {
    case Var::X: return ex;
    case Var::Y: return ey;
    case Var::K: return ek;
  }
  return 0;
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  Monomial m = *this;
  switch (v) {
    case Var::X: m.ex = e; break;
    case Var::Y: m.ey = e; break;
    case Var::K: m.ek = e; break;
  }
  return m;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
  if (a.ex != b.ex) return a.ex < b.ex ? -1 : 1;
  if (a.ey != b.ey) return a.ey < b.ey ? -1 : 1;
  if (a.ek != b.ek) return a.ek < b.ek ? -1 : 1;
  return 0;
}

MultiPoly::MultiPoly(long n) {
  if (n != 0) terms_.emplace(Monomial{}, Rational(n));
}

MultiPoly::MultiPoly(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Monomial{}, r);
}

MultiPoly MultiPoly::variable(Var v, unsigned e) {
  MultiPoly p;
  if (e == 0) return MultiPoly(1);
  p.terms_.emplace(Monomial{}.with_exponent(v, e), Rational(1));
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
         terms_.begin()->second.is_one();
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational MultiPoly::constant_term() const { return coeff(Monomial{}); }

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("MultiPoly: not a constant: " + str());
  return constant_term();
}

unsigned MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.total();  // graded order: last term has max degree
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::coeff_of(Var v, unsigned e) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == e) out.add_term(m.with_exponent(v, 0), c);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term(Monomial{ma.ex + mb.ex, ma.ey + mb.ey, ma.ek + mb.ek}, ca * cb);
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& r) const {
  MultiPoly out;
  if (r.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * r);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MultiPoly: division by zero polynomial");
  MultiPoly q;
  MultiPoly r = *this;
  const auto& [dm, dc] = *d.terms_.rbegin();  // leading term in graded lex order
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms_.rbegin();
    if (rm.ex < dm.ex || rm.ey < dm.ey || rm.ek < dm.ek)
      throw NotDivisible("MultiPoly: " + str() + " not divisible by " + d.str());
    Monomial t{rm.ex - dm.ex, rm.ey - dm.ey, rm.ek - dm.ek};
    Rational c = rc / dc;
    MultiPoly step;
    step.terms_.emplace(t, c);
    q += step;
    r -= step * d;
  }
  return q;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  // Group by exponent of v, then Horner in the substituted value.
  unsigned dv = degree(v);
  MultiPoly out;
  for (unsigned e = dv + 1; e-- > 0;) {
    out = out * value + coeff_of(v, e);
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const Rational& value) const {
  return substitute(v, MultiPoly(value));
}

MultiPoly MultiPoly::homogenize_y(unsigned n) const {
  if (degree(Var::K) > 0)
    throw std::invalid_argument("homogenize_y: input contains k: " + str());
  if (degree(Var::Y) > n)
    throw DegreeExceeded("homogenize_y: deg_y exceeds " + std::to_string(n));
  MultiPoly out;
  for (const auto& [m, c] : terms_)
    out.add_term(Monomial{m.ex, 0, n - m.ey}, c);
  return out;
}

namespace {

void append_monomial(std::string& s, const Monomial& m) {
  // Variables print in the order k, y, x.
  auto emit = [&s](char name, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s.push_back('*');
    s.push_back(name);
    if (e > 1) {
      s.push_back('^');
      s += std::to_string(e);
    }
  };
  emit('k', m.ek);
  emit('y', m.ey);
  emit('x', m.ex);
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending graded lex: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out.push_back('-');
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = c.abs();
    std::string mono;
    append_monomial(mono, m);
    if (mono.empty()) {
      out += a.str();
    } else {
      if (!a.is_one()) {
        out += a.str();
        out.push_back('*');
      }
      out += mono;
    }
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("MultiPoly: " + why + " at offset " + std::to_string(i) +
                     " in '" + std::string(s) + "'");
  }

  std::string integer() {
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      digits.push_back(s[i++]);
    if (digits.empty()) fail("expected integer");
    return digits;
  }

  unsigned exponent() {
    std::string d = integer();
    if (d.size() > 4) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  // factor := integer [ '/' integer ] | var [ '^' integer ]
  MultiPoly factor() {
    skip_ws();
    if (i >= s.size()) fail("expected factor");
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer();
      if (!eof() && peek() == '/') {
        ++i;
        num += "/" + integer();
      }
      return MultiPoly(Rational::parse(num));
    }
    Var v;
    if (c == 'x') v = Var::X;
    else if (c == 'y') v = Var::Y;
    else if (c == 'k') v = Var::K;
    else fail("expected variable or number");
    ++i;
    unsigned e = 1;
    if (!eof() && peek() == '^') {
      ++i;
      e = exponent();
    }
    return MultiPoly::variable(v, e);
  }

  MultiPoly term() {
    MultiPoly t = factor();
    while (!eof() && peek() == '*') {
      ++i;
      t *= factor();
    }
    return t;
  }

  MultiPoly poly() {
    MultiPoly p;
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++i;
    }
    while (true) {
      MultiPoly t = term();
      p += neg ? -t : t;
      if (eof()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      neg = op == '-';
      ++i;
    }
    return p;
  }
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
  Parser p{text};
  if (p.eof()) throw ParseError("MultiPoly: empty input");
  MultiPoly out = p.poly();
  return out;
}

}  // namespace riordan
