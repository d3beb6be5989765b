#pragma once

#include <optional>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/production.hpp"

namespace riordan {

/// Univariate polynomial in z with MultiPoly coefficients, ascending degree.
using ZPoly = std::vector<MultiPoly>;

std::string zpoly_str(const ZPoly& p);

/// Monic orthogonal polynomials p_0 .. p_n from a three-term recurrence.
struct OrthoPolySeq {
  std::vector<ZPoly> polys;
};

/// Partial numerators c_1, c_2, ... of 1/(1 - c_1 z/(1 - c_2 z/(1 - ...))).
struct SFraction {
  std::vector<MultiPoly> c;
};

/// p_{n+1} = (z - alpha_n) p_n - beta_n p_{n-1}, p_0 = 1.
OrthoPolySeq ttr_polynomials(const TTRData& t, unsigned n);

/// mu_0 .. mu_n of the moment OGF, from the depth-(n+1) J-fraction
/// convergent expanded as a truncated series; mu_0 = 1.
std::vector<MultiPoly> jfraction_moments(const TTRData& t, unsigned n);

/// mu_0 .. mu_n of the S-fraction OGF (needs c_1 .. c_n).
std::vector<MultiPoly> sfraction_moments(const SFraction& s, unsigned n);

/// Standard even contraction: alpha_0 = c_1, beta_n = c_{2n-1} c_{2n},
/// alpha_n = c_{2n} + c_{2n+1}.
TTRData contract_sfraction(const SFraction& s);

/// Triangle of the bivariate S-fraction with partial numerators
/// (r_i + s_i t) z, where t marks the column index: entry (m, j) is the
/// t^j coefficient of the m-th OGF coefficient. The r_i and s_i must not
/// involve x, which is used internally as the marker.
PolyMatrix deleham_delta(const std::vector<MultiPoly>& r,
                         const std::vector<MultiPoly>& s, unsigned n);

struct OrthoWitness {
  unsigned n = 0;
  unsigned m = 0;
  MultiPoly value;
};

/// Checks L(p_n z^m) = 0 for m < n and, when betas are given,
/// L(p_n z^n) = beta_1 ... beta_n. Returns the first failure.
std::optional<OrthoWitness> orthogonality_check(
    const OrthoPolySeq& polys, const std::vector<MultiPoly>& moments,
    const std::vector<MultiPoly>* betas = nullptr);

/// Closed-form recurrence data for the four moment families.
TTRData family_ttr(Family f, unsigned count);

/// Closed-form S-fraction for the two unshifted moment families.
SFraction family_sfraction(Family f, unsigned count);

}  // namespace riordan
