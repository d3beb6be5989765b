#pragma once

#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/riordan_array.hpp"

namespace riordan {

/// det of the (n+1) x (n+1) matrix with entry (i, j) = moments[i + j].
/// Cofactor expansion for n <= 5, fraction-free elimination above.
MultiPoly hankel_det(const std::vector<MultiPoly>& moments, unsigned n);

/// Exact determinant of a square polynomial matrix (fraction-free
/// Bareiss elimination; every division is exact).
MultiPoly poly_det(const PolyMatrix& m);

/// (kx)^C(n+1,2) * prod_{i=1}^n i! (ik+1)^{n-i}. The two printed variants
/// share the factorial reading; see hankel_closed_keuler_superfactorial.
MultiPoly hankel_closed_keuler(unsigned n);

/// (kx)^C(n+1,2) * (prod_{j=0}^n j!) * prod_{i=1}^n (ik+1)^{n-i}.
MultiPoly hankel_closed_keuler_superfactorial(unsigned n);

/// x^C(n+1,2) y^n prod_{i=1}^n ((i+1)(i+y))^{n-i}.
MultiPoly hankel_closed_sv(unsigned n);

/// h_n = prod_{m=1}^n beta_m^{n+1-m} (mu_0 = 1).
MultiPoly hankel_from_betas(const std::vector<MultiPoly>& betas, unsigned n);

struct HankelResult {
  unsigned n = 0;
  MultiPoly determinant;
  MultiPoly closed_form;
  bool match = false;
};

/// Determinant vs. closed form for the two unshifted moment families.
HankelResult hankel_check(Family f, unsigned n);

}  // namespace riordan
