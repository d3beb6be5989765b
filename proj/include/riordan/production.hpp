#pragma once

#include <vector>

#include "riordan/riordan_array.hpp"

namespace riordan {

/// The series pair determining the production matrix of [g, f]:
/// A = f'(fbar), Z = g'(fbar)/g(fbar).
struct ZAForms {
  TruncSeries A;
  TruncSeries Z;
};

/// Three-term recurrence data: alpha[n] and beta[n-1] hold the alpha_n and
/// beta_n of the monic recurrence p_{n+1} = (z - alpha_n) p_n - beta_n p_{n-1}.
struct TTRData {
  std::vector<MultiPoly> alpha;
  std::vector<MultiPoly> beta;
};

ZAForms compute_za(const RiordanPair& p);

/// n x n production matrix assembled from the bivariate EGF
/// e^{zw} (Z(z) + A(z) w):  P(r, c) = (r!/c!) ([z^{r-c}] Z + c [z^{r-c+1}] A).
PolyMatrix production_analytic(const ZAForms& za, unsigned n);

/// n x n production matrix from the ladder identity P = L^{-1} Lbar, where
/// Lbar is L with its top row removed. Realizes the array at size n+1.
PolyMatrix production_ladder(const RiordanPair& p, unsigned n);

/// Reads (alpha_n) from the diagonal and (beta_n) from the subdiagonal of a
/// tridiagonal production matrix; the superdiagonal must be identically 1
/// (monic convention).
TTRData extract_ttr(const PolyMatrix& m);

}  // namespace riordan
