#pragma once

#include <string>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Exponential Riordan array [g, f] with the usual normalization
/// g(0) = 1, f(0) = 0, f'(0) = 1. Column i of the realized matrix has
/// exponential generating function g f^i / i!.
struct RiordanPair {
  TruncSeries g;
  TruncSeries f;
  std::string label;

  RiordanPair(TruncSeries g_, TruncSeries f_, std::string label_ = "");
  unsigned order() const { return std::min(g.order(), f.order()); }
};

/// n x n lower-triangular realization; entry (r, c) = r! [z^r] g f^c / c!.
PolyMatrix realize(const RiordanPair& p, unsigned n);

/// Group law [g, f] . [h, l] = [g (h o f), l o f].
RiordanPair multiply(const RiordanPair& a, const RiordanPair& b);

/// [g, f]^{-1} = [1 / (g o fbar), fbar].
RiordanPair inverse(const RiordanPair& p);

/// realize(p, |u|) * u; the fundamental-theorem action on a sequence.
std::vector<MultiPoly> apply_sequence(const RiordanPair& p,
                                      const std::vector<MultiPoly>& u);

/// First n+1 entries of column 0 (the moment sequence when p is a moment
/// array).
std::vector<MultiPoly> moment_column(const RiordanPair& p, unsigned n);

enum class Family {
  KeulerCoeff,
  KeulerMoment,
  SvCoeff,
  SvMoment,
  KeulerShiftedCoeff,
  KeulerShiftedMoment,
  SvShiftedCoeff,
  SvShiftedMoment,
  StirlingBridge,
};

inline constexpr Family kAllFamilies[] = {
    Family::KeulerCoeff,        Family::KeulerMoment,
    Family::SvCoeff,            Family::SvMoment,
    Family::KeulerShiftedCoeff, Family::KeulerShiftedMoment,
    Family::SvShiftedCoeff,     Family::SvShiftedMoment,
    Family::StirlingBridge,
};

const char* family_name(Family f);
Family family_from_string(const std::string& name);  // throws UnknownFamily

/// Constructs the named array with symbolic parameters at the given
/// truncation order.
RiordanPair make_family(Family f, unsigned order = kDefaultOrder);

/// [1, (e^{az} - 1)/a] for polynomial a: the generalized Stirling-2 array
/// (entries S(n,k) a^{n-k}).
RiordanPair stirling2_general(const MultiPoly& a, unsigned order = kDefaultOrder);
/// [1, ln(1/(1-z))]: unsigned Stirling numbers of the first kind.
RiordanPair stirling1_array(unsigned order = kDefaultOrder);
/// [e^z, z]: the binomial matrix.
RiordanPair binomial_array(unsigned order = kDefaultOrder);

}  // namespace riordan
