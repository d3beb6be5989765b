#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "riordan/matrix.hpp"

namespace riordan {

/// Joint (excedance, cycle-count) distribution over S_n.
struct PermStats {
  unsigned n = 0;
  std::map<std::pair<unsigned, unsigned>, unsigned long> histogram;

  unsigned long total() const;
};

inline constexpr unsigned kMaxEnumN = 8;

PermStats perm_stats(unsigned n);

/// sum over S_n of x^exc y^cyc, by full enumeration. Throws TooLarge past
/// n = 8.
MultiPoly sv_oracle(unsigned n);

struct StirlingTables {
  std::vector<std::vector<mpz_class>> s1_unsigned;  // |s(n, m)|
  PolyMatrix s2_generalized;                        // S(n, m) (x-1)^(n-m)
};

/// Rows 0..n of both triangles: unsigned first kind by recurrence,
/// generalized second kind by realizing [1, (e^{(x-1)z} - 1)/(x-1)].
StirlingTables stirling_triangles(unsigned n);

/// Classical S(n, m) by the recurrence S(n,m) = m S(n-1,m) + S(n-1,m-1).
std::vector<std::vector<mpz_class>> classical_stirling2(unsigned n);

/// F_n(x, y) = sum_j S_{n,j} (x-1)^{n-j} sum_m |s_{j,m}| y^m.
MultiPoly sv_from_stirling(unsigned n);

/// A_n^(k)(x) = sum_j S_{n,j} (x-1)^{n-j} sum_m |s_{j,m}| k^{n-m}.
MultiPoly keuler_from_stirling(unsigned n);

/// Fubini number by the surjection sum: sum_j S(n, j) j!.
mpz_class fubini_oracle(unsigned n);

/// y (y+1) ... (y+n-1); 1 for n = 0.
MultiPoly rising_factorial(unsigned n);

struct CheckLine {
  std::string name;
  bool ok = false;
};

struct SpecializationReport {
  std::vector<CheckLine> lines;
  bool all_ok() const;
};

/// The x = 2 / x = 1 specializations of F_n: Fubini values, the EGF-square
/// law for F_n(2,2), the rising factorial at x = 1, and F_n(1,0) = [n = 0].
SpecializationReport specialization_checks(unsigned n_max);

}  // namespace riordan
