#include "riordan/orthopoly.hpp"

#include "riordan/errors.hpp"

namespace riordan {

std::string zpoly_str(const ZPoly& p) {
  std::string out;
  for (unsigned d = static_cast<unsigned>(p.size()); d-- > 0;) {
    const MultiPoly& c = p[d];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool multi = cs.find(' ') != std::string::npos;
    bool negative = false;
    std::string term;
    if (d == 0) {
      if (multi && !out.empty())
        term = "(" + cs + ")";
      else if (!multi && cs[0] == '-') {
        negative = true;
        term = cs.substr(1);
      } else {
        term = cs;
      }
    } else {
      std::string zpow = d == 1 ? "z" : "z^" + std::to_string(d);
      if (c.is_one()) {
        term = zpow;
      } else if (c == MultiPoly(-1)) {
        negative = true;
        term = zpow;
      } else if (multi) {
        term = "(" + cs + ")*" + zpow;
      } else if (cs[0] == '-') {
        negative = true;
        term = cs.substr(1) + "*" + zpow;
      } else {
        term = cs + "*" + zpow;
      }
    }
    if (out.empty())
      out += negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

OrthoPolySeq ttr_polynomials(const TTRData& t, unsigned n) {
  if (n > 0 && (t.alpha.size() < n || t.beta.size() + 1 < n))
    throw InsufficientData("need " + std::to_string(n) + " alphas and " +
                           std::to_string(n - 1) + " betas");
  OrthoPolySeq seq;
  seq.polys.push_back({MultiPoly(1)});
  for (unsigned m = 0; m < n; ++m) {
    const ZPoly& pm = seq.polys[m];
    ZPoly next(pm.size() + 1);
    for (unsigned d = 0; d < pm.size(); ++d) {
      next[d + 1] += pm[d];
      next[d] -= t.alpha[m] * pm[d];
    }
    if (m > 0) {
      const ZPoly& prev = seq.polys[m - 1];
      for (unsigned d = 0; d < prev.size(); ++d) next[d] -= t.beta[m - 1] * prev[d];
    }
    seq.polys.push_back(std::move(next));
  }
  return seq;
}

std::vector<MultiPoly> jfraction_moments(const TTRData& t, unsigned n) {
  if (t.alpha.size() < n + 1 || t.beta.size() < n)
    throw InsufficientData("J-fraction to depth " + std::to_string(n + 1) +
                           " needs alpha_0..alpha_" + std::to_string(n) +
                           " and beta_1..beta_" + std::to_string(n));
  const TruncSeries one = TruncSeries::one(n);
  const TruncSeries z = TruncSeries::z(n);
  TruncSeries tail = TruncSeries::zero(n);
  for (unsigned i = n + 1; i-- > 0;) {
    TruncSeries h = (one - z.scale(t.alpha[i]) - tail).inverse();
    if (i == 0) {
      std::vector<MultiPoly> mu;
      for (unsigned m = 0; m <= n; ++m) mu.push_back(h.coeff(m));
      return mu;
    }
    tail = (z * z * h).scale(t.beta[i - 1]);
  }
  return {MultiPoly(1)};  // n == 0 handled above; unreachable
}

std::vector<MultiPoly> sfraction_moments(const SFraction& s, unsigned n) {
  if (s.c.size() < n)
    throw InsufficientData("S-fraction needs c_1..c_" + std::to_string(n));
  const TruncSeries one = TruncSeries::one(n);
  const TruncSeries z = TruncSeries::z(n);
  TruncSeries h = one;
  for (unsigned i = n; i >= 1; --i) h = (one - (z * h).scale(s.c[i - 1])).inverse();
  std::vector<MultiPoly> mu;
  for (unsigned m = 0; m <= n; ++m) mu.push_back(h.coeff(m));
  return mu;
}

TTRData contract_sfraction(const SFraction& s) {
  const auto& c = s.c;  // c[i] holds c_{i+1}
  if (c.empty()) throw InsufficientData("contraction needs at least c_1");
  unsigned levels = (static_cast<unsigned>(c.size()) - 1) / 2;
  TTRData t;
  t.alpha.push_back(c[0]);
  for (unsigned m = 1; m <= levels; ++m) {
    t.alpha.push_back(c[2 * m - 1] + c[2 * m]);
    t.beta.push_back(c[2 * m - 2] * c[2 * m - 1]);
  }
  return t;
}

PolyMatrix deleham_delta(const std::vector<MultiPoly>& r,
                         const std::vector<MultiPoly>& s, unsigned n) {
  if (r.size() < n || s.size() < n)
    throw InsufficientData("Deleham lists need " + std::to_string(n) + " entries");
  SFraction frac;
  for (unsigned i = 0; i < n; ++i) {
    if (r[i].contains(Var::X) || s[i].contains(Var::X))
      throw std::invalid_argument("Deleham inputs must be x-free");
    frac.c.push_back(r[i] + s[i] * poly_x());
  }
  std::vector<MultiPoly> mu = sfraction_moments(frac, n);
  PolyMatrix tri(n + 1, n + 1);
  for (unsigned m = 0; m <= n; ++m)
    for (unsigned j = 0; j <= m; ++j) tri.at(m, j) = mu[m].coeff_of(Var::X, j);
  return tri;
}

std::optional<OrthoWitness> orthogonality_check(
    const OrthoPolySeq& polys, const std::vector<MultiPoly>& moments,
    const std::vector<MultiPoly>* betas) {
  auto functional = [&moments](const ZPoly& p, unsigned shift) {
    MultiPoly acc;
    for (unsigned j = 0; j < p.size(); ++j) {
      if (j + shift >= moments.size())
        throw InsufficientMoments("moment index " + std::to_string(j + shift) +
                                  " out of range");
      acc += p[j] * moments[j + shift];
    }
    return acc;
  };
  for (unsigned nn = 0; nn < polys.polys.size(); ++nn) {
    for (unsigned m = 0; m < nn; ++m) {
      MultiPoly v = functional(polys.polys[nn], m);
      if (!v.is_zero()) return OrthoWitness{nn, m, v};
    }
    if (betas != nullptr) {
      MultiPoly norm = functional(polys.polys[nn], nn);
      MultiPoly expected(1);
      for (unsigned i = 0; i < nn; ++i) {
        if (i >= betas->size()) throw InsufficientData("missing beta for norm check");
        expected *= (*betas)[i];
      }
      if (norm != expected) return OrthoWitness{nn, nn, norm - expected};
    }
  }
  return std::nullopt;
}

TTRData family_ttr(Family f, unsigned count) {
  const MultiPoly x = poly_x(), y = poly_y(), k = poly_k();
  TTRData t;
  for (unsigned m = 0; m < count; ++m) {
    MultiPoly n(static_cast<long>(m));
    switch (f) {
      case Family::KeulerMoment:
        t.alpha.push_back(k * n * (x + 1) + 1);
        if (m > 0) t.beta.push_back(n * k * x * (k * MultiPoly(static_cast<long>(m - 1)) + 1));
        break;
      case Family::SvMoment:
        t.alpha.push_back(y + n * (x + 1));
        if (m > 0) t.beta.push_back(n * x * (y + MultiPoly(static_cast<long>(m - 1))));
        break;
      case Family::KeulerShiftedMoment:
        t.alpha.push_back(MultiPoly(static_cast<long>(m + 1)) * k * x + n * k + 1);
        if (m > 0) t.beta.push_back(n * k * x * (n * k + 1));
        break;
      case Family::SvShiftedMoment:
        t.alpha.push_back(MultiPoly(static_cast<long>(m + 1)) * x + y + n);
        if (m > 0) t.beta.push_back(n * x * (y + n));
        break;
      default:
        throw UnknownFamily("no closed-form recurrence for " + std::string(family_name(f)));
    }
  }
  return t;
}

SFraction family_sfraction(Family f, unsigned count) {
  const MultiPoly x = poly_x(), y = poly_y(), k = poly_k();
  SFraction s;
  for (unsigned i = 1; i <= count; ++i) {
    MultiPoly half(static_cast<long>(i / 2));
    switch (f) {
      case Family::KeulerMoment:
        // 1, kx, k+1, 2kx, 2k+1, 3kx, ...
        s.c.push_back(i % 2 == 1 ? half * k + 1 : half * k * x);
        break;
      case Family::SvMoment:
        // y, x, y+1, 2x, y+2, 3x, ...
        s.c.push_back(i % 2 == 1 ? y + half : half * x);
        break;
      default:
        throw UnknownFamily("no S-fraction for " + std::string(family_name(f)));
    }
  }
  return s;
}

}  // namespace riordan
