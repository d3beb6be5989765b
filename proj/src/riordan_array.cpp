#include "riordan/riordan_array.hpp"

#include <array>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

RiordanPair::RiordanPair(TruncSeries g_, TruncSeries f_, std::string label_)
    : g(std::move(g_)), f(std::move(f_)), label(std::move(label_)) {
  if (!g.coeff(0).is_one())
    throw BadLowOrderTerms("RiordanPair: g(0) must be 1");
  if (f.order() < 1 || !f.coeff(0).is_zero() || !f.coeff(1).is_one())
    throw BadLowOrderTerms("RiordanPair: f must have f(0) = 0, f'(0) = 1");
}

PolyMatrix realize(const RiordanPair& p, unsigned n) {
  if (p.order() < n)
    throw InsufficientOrder("realize: series order " + std::to_string(p.order()) +
                            " < requested size " + std::to_string(n));
  PolyMatrix m(n, n);
  TruncSeries col = p.g.truncate(n == 0 ? 0 : n - 1);
  for (unsigned c = 0; c < n; ++c) {
    if (c > 0) col = col * p.f.truncate(n - 1);
    Rational scale = falling_factorial_ratio(c, 0);  // c!
    for (unsigned r = c; r < n; ++r)
      m.at(r, c) = col.coeff(r) * (factorial(r) / scale);
  }
  return m;
}

RiordanPair multiply(const RiordanPair& a, const RiordanPair& b) {
  TruncSeries g = a.g * b.g.compose(a.f);
  TruncSeries f = b.f.compose(a.f);
  std::string label = a.label.empty() || b.label.empty() ? std::string()
                                                         : a.label + "*" + b.label;
  return RiordanPair(std::move(g), std::move(f), std::move(label));
}

RiordanPair inverse(const RiordanPair& p) {
  TruncSeries fbar = p.f.reversion();
  TruncSeries g = p.g.compose(fbar).inverse();
  std::string label = p.label.empty() ? std::string() : p.label + "^-1";
  return RiordanPair(std::move(g), std::move(fbar), std::move(label));
}

std::vector<MultiPoly> apply_sequence(const RiordanPair& p,
                                      const std::vector<MultiPoly>& u) {
  unsigned n = static_cast<unsigned>(u.size());
  return realize(p, n).apply(u);
}

std::vector<MultiPoly> moment_column(const RiordanPair& p, unsigned n) {
  // Column 0 of [g, f] is the EGF coefficient list of g.
  return coefficient_list(p.g, SeriesKind::Egf, n + 1);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::KeulerCoeff: return "keuler-coeff";
    case Family::KeulerMoment: return "keuler-moment";
    case Family::SvCoeff: return "sv-coeff";
    case Family::SvMoment: return "sv-moment";
    case Family::KeulerShiftedCoeff: return "keuler-shifted-coeff";
    case Family::KeulerShiftedMoment: return "keuler-shifted-moment";
    case Family::SvShiftedCoeff: return "sv-shifted-coeff";
    case Family::SvShiftedMoment: return "sv-shifted-moment";
    case Family::StirlingBridge: return "stirling-bridge";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : kAllFamilies)
    if (name == family_name(f)) return f;
  throw UnknownFamily("unknown family '" + name + "'");
}

namespace {

// Shared pieces of the two polynomial families. The moment arrays are built
// from D = (e^{qz(x-1)} - x) / (1-x) with q = k or q = 1; D has unit constant
// term and every z^n coefficient of the k-version is divisible by k^n, which
// keeps the 1/k powers polynomial.
struct FamilyParts {
  TruncSeries d;        // (e^{qz(x-1)} - x)/(1-x)
  TruncSeries f_mom;    // (e^{qz} - e^{qxz}) / (q (e^{qxz} - x e^{qz}))
  TruncSeries f_coeff;  // (1/(q(1-x))) ln((1+qz)/(1+qxz))
  TruncSeries one_plus_qz;
  TruncSeries one_plus_qxz;
};

FamilyParts build_parts(const MultiPoly& q, unsigned order) {
  MultiPoly x = poly_x();
  MultiPoly one_minus_x = MultiPoly(1) - x;

  TruncSeries e_q = TruncSeries::exp_linear(q, order);
  TruncSeries e_qx = TruncSeries::exp_linear(q * x, order);
  TruncSeries e_qxm1 = TruncSeries::exp_linear(q * (x - MultiPoly(1)), order);

  FamilyParts parts{
      (e_qxm1 - TruncSeries::constant(x, order)).exact_div_poly(one_minus_x),
      TruncSeries(order),
      TruncSeries(order),
      TruncSeries(order),
      TruncSeries(order),
  };

  TruncSeries num = (e_q - e_qx).exact_div_poly(one_minus_x * q);
  TruncSeries den = (e_qx - e_q.scale(x)).exact_div_poly(one_minus_x);
  parts.f_mom = num * den.inverse();

  TruncSeries one_plus_qz = TruncSeries::one(order);
  TruncSeries one_plus_qxz = TruncSeries::one(order);
  if (order >= 1) {
    one_plus_qz = one_plus_qz + TruncSeries::z(order).scale(q);
    one_plus_qxz = one_plus_qxz + TruncSeries::z(order).scale(q * x);
  }
  parts.one_plus_qz = one_plus_qz;
  parts.one_plus_qxz = one_plus_qxz;
  parts.f_coeff =
      (one_plus_qz.log() - one_plus_qxz.log()).exact_div_poly(one_minus_x * q);
  return parts;
}

}  // namespace

RiordanPair make_family(Family f, unsigned order) {
  MultiPoly x = poly_x();
  MultiPoly y = poly_y();
  MultiPoly k = poly_k();

  switch (f) {
    case Family::KeulerMoment: {
      FamilyParts p = build_parts(k, order);
      TruncSeries g = p.d.inverse().pow_recip_k();
      return RiordanPair(std::move(g), std::move(p.f_mom), family_name(f));
    }
    case Family::KeulerCoeff: {
      FamilyParts p = build_parts(k, order);
      TruncSeries g = p.one_plus_qz.inverse().pow_recip_k();
      return RiordanPair(std::move(g), std::move(p.f_coeff), family_name(f));
    }
    case Family::KeulerShiftedMoment: {
      FamilyParts p = build_parts(k, order);
      TruncSeries e = TruncSeries::exp_linear(k * (x - MultiPoly(1)), order);
      TruncSeries g = e * p.d.inverse().pow_recip_k() * p.d.inverse();
      return RiordanPair(std::move(g), std::move(p.f_mom), family_name(f));
    }
    case Family::KeulerShiftedCoeff: {
      FamilyParts p = build_parts(k, order);
      TruncSeries g =
          p.one_plus_qxz.inverse() * p.one_plus_qz.inverse().pow_recip_k();
      return RiordanPair(std::move(g), std::move(p.f_coeff), family_name(f));
    }
    case Family::SvMoment: {
      FamilyParts p = build_parts(MultiPoly(1), order);
      TruncSeries g = p.d.inverse().pow_sym(y);
      return RiordanPair(std::move(g), std::move(p.f_mom), family_name(f));
    }
    case Family::SvCoeff: {
      FamilyParts p = build_parts(MultiPoly(1), order);
      TruncSeries g = p.one_plus_qz.pow_sym(-y);
      return RiordanPair(std::move(g), std::move(p.f_coeff), family_name(f));
    }
    case Family::SvShiftedMoment: {
      FamilyParts p = build_parts(MultiPoly(1), order);
      TruncSeries g = TruncSeries::exp_linear(x - MultiPoly(1), order) *
                      p.d.inverse().pow_sym(y + MultiPoly(1));
      return RiordanPair(std::move(g), std::move(p.f_mom), family_name(f));
    }
    case Family::SvShiftedCoeff: {
      FamilyParts p = build_parts(MultiPoly(1), order);
      TruncSeries g = p.one_plus_qxz.inverse() * p.one_plus_qz.pow_sym(-y);
      return RiordanPair(std::move(g), std::move(p.f_coeff), family_name(f));
    }
    case Family::StirlingBridge: {
      // [1, z - ln((e^{xz} - x e^z)/(1-x))]
      MultiPoly one_minus_x = MultiPoly(1) - x;
      TruncSeries e_x = TruncSeries::exp_linear(x, order);
      TruncSeries e_1 = TruncSeries::exp_linear(MultiPoly(1), order);
      TruncSeries den = (e_x - e_1.scale(x)).exact_div_poly(one_minus_x);
      TruncSeries f_bridge = TruncSeries::z(order) - den.log();
      return RiordanPair(TruncSeries::one(order), std::move(f_bridge),
                         family_name(f));
    }
  }
  throw UnknownFamily("make_family: bad enum value");
}

RiordanPair stirling2_general(const MultiPoly& a, unsigned order) {
  TruncSeries e_a = TruncSeries::exp_linear(a, order);
  TruncSeries f = (e_a - TruncSeries::one(order)).exact_div_poly(a);
  return RiordanPair(TruncSeries::one(order), std::move(f), "stirling2-general");
}

RiordanPair stirling1_array(unsigned order) {
  TruncSeries one_minus_z = TruncSeries::one(order) - TruncSeries::z(order);
  return RiordanPair(TruncSeries::one(order), -one_minus_z.log(), "stirling1");
}

RiordanPair binomial_array(unsigned order) {
  return RiordanPair(TruncSeries::exp_linear(MultiPoly(1), order),
                     TruncSeries::z(order), "binomial");
}

}  // namespace riordan
