#include "riordan/claims.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "riordan/combinat.hpp"
#include "riordan/errors.hpp"
#include "riordan/hankel.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"

namespace riordan {

namespace {

std::string poly_mismatch(const std::string& what, unsigned index, const MultiPoly& got,
                          const MultiPoly& want) {
  std::ostringstream os;
  os << what << " at index " << index << ": got " << got.str() << ", want " << want.str();
  return os.str();
}

std::string compare_lists(const std::string& what, const std::vector<MultiPoly>& got,
                          const std::vector<MultiPoly>& want, unsigned upto) {
  for (unsigned i = 0; i <= upto; ++i)
    if (got.at(i) != want.at(i)) return poly_mismatch(what, i, got.at(i), want.at(i));
  return {};
}

std::string matrix_mismatch(const std::string& what, const PolyMatrix& got,
                            const PolyMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return what + ": shape mismatch";
  for (unsigned r = 0; r < got.rows(); ++r)
    for (unsigned c = 0; c < got.cols(); ++c)
      if (got.at(r, c) != want.at(r, c)) {
        std::ostringstream os;
        os << what << " at (" << r << ", " << c << "): got " << got.at(r, c).str() << ", want "
           << want.at(r, c).str();
        return os.str();
      }
  return {};
}

TruncSeries linear_series(const MultiPoly& c0, const MultiPoly& c1, unsigned order) {
  TruncSeries s = TruncSeries::constant(c0, order);
  return s + TruncSeries::z(order).scale(c1);
}

// Production matrix of the moment array is tridiagonal with unit
// superdiagonal, ladder and analytic methods agree, Z and A meet their
// closed forms, and the inverse of the coefficient array is the moment
// array itself.
std::string check_moment_array(Family moment, Family coeff, const TruncSeries& a_closed,
                               const TruncSeries& z_closed, unsigned n) {
  unsigned order = std::max(n + 2, kDefaultOrder);
  RiordanPair m = make_family(moment, order);
  RiordanPair c = make_family(coeff, order);

  ZAForms za = compute_za(m);
  unsigned zo = std::min(a_closed.order(), za.A.order());
  if (za.A.truncate(zo) != a_closed.truncate(zo)) return "A(z) differs from its closed form";
  zo = std::min(z_closed.order(), za.Z.order());
  if (za.Z.truncate(zo) != z_closed.truncate(zo)) return "Z(z) differs from its closed form";

  PolyMatrix ladder = production_ladder(m, n);
  PolyMatrix analytic = production_analytic(za, n);
  std::string w = matrix_mismatch("production (ladder vs analytic)", ladder, analytic);
  if (!w.empty()) return w;

  MatrixEntryRef bad{0, 0};
  if (!is_tridiagonal(ladder, &bad))
    return "production matrix not tridiagonal at (" + std::to_string(bad.row) + ", " +
           std::to_string(bad.col) + ")";
  for (unsigned r = 0; r + 1 < n; ++r)
    if (!ladder.at(r, r + 1).is_one()) return "superdiagonal not 1 at row " + std::to_string(r);

  RiordanPair inv = inverse(c);
  if (inv.g.truncate(n) != m.g.truncate(n) || inv.f.truncate(n) != m.f.truncate(n))
    return "inverse of the coefficient array is not the moment array";
  return {};
}

std::string claim_p1(unsigned n) {
  unsigned order = std::max(n + 2, kDefaultOrder);
  const MultiPoly k = poly_k(), x = poly_x();
  TruncSeries a_closed = linear_series(MultiPoly(1), k, order) * linear_series(MultiPoly(1), k * x, order);
  TruncSeries z_closed = linear_series(MultiPoly(1), k * x, order);
  return check_moment_array(Family::KeulerMoment, Family::KeulerCoeff, a_closed, z_closed, n);
}

std::string claim_p5(unsigned n) {
  unsigned order = std::max(n + 2, kDefaultOrder);
  const MultiPoly x = poly_x(), y = poly_y();
  TruncSeries a_closed = linear_series(MultiPoly(1), MultiPoly(1), order) * linear_series(MultiPoly(1), x, order);
  TruncSeries z_closed = linear_series(y, y * x, order);
  return check_moment_array(Family::SvMoment, Family::SvCoeff, a_closed, z_closed, n);
}

// Extracted recurrence equals the closed form, P_1 = z - alpha_0, and the
// polynomials are orthogonal for the moment functional with the beta-product
// norms.
std::string check_ttr(Family moment, unsigned n) {
  PolyMatrix prod = production_ladder(make_family(moment, n + 3), n + 1);
  TTRData got = extract_ttr(prod);
  TTRData want = family_ttr(moment, n + 1);
  std::string w = compare_lists("alpha", got.alpha, want.alpha, n);
  if (!w.empty()) return w;
  w = compare_lists("beta", got.beta, want.beta, n - 1);
  if (!w.empty()) return w;

  OrthoPolySeq polys = ttr_polynomials(want, n);
  if (polys.polys.at(1) != ZPoly{-want.alpha[0], MultiPoly(1)}) return "P_1 != z - alpha_0";

  std::vector<MultiPoly> mu = moment_column(make_family(moment, std::max(2 * n, kDefaultOrder)), 2 * n);
  if (auto fail = orthogonality_check(polys, mu, &want.beta)) {
    std::ostringstream os;
    os << "L(p_" << fail->n << " z^" << fail->m << ") = " << fail->value.str();
    return os.str();
  }
  return {};
}

std::string claim_c2(unsigned n) { return check_ttr(Family::KeulerMoment, n); }
std::string claim_c6(unsigned n) { return check_ttr(Family::SvMoment, n); }

// Four-way agreement: S-fraction, contracted J-fraction, moment column of
// the inverse array, and the permutation-statistic oracle.
std::string check_cf(Family moment, unsigned n) {
  std::vector<MultiPoly> mu = moment_column(make_family(moment, std::max(n, kDefaultOrder)), n);

  SFraction s = family_sfraction(moment, 2 * n + 1);
  std::string w = compare_lists("S-fraction", sfraction_moments(s, n), mu, n);
  if (!w.empty()) return w;

  TTRData contracted = contract_sfraction(s);
  w = compare_lists("contracted J-fraction", jfraction_moments(contracted, n), mu, n);
  if (!w.empty()) return w;

  w = compare_lists("closed-form J-fraction", jfraction_moments(family_ttr(moment, n + 1), n), mu, n);
  if (!w.empty()) return w;

  for (unsigned m = 0; m <= std::min(n, kMaxEnumN); ++m) {
    MultiPoly oracle = sv_oracle(m);
    if (moment == Family::KeulerMoment) oracle = oracle.homogenize_y(m);
    if (oracle != mu[m]) return poly_mismatch("permutation oracle", m, oracle, mu[m]);
  }
  return {};
}

std::string claim_c3(unsigned n) { return check_cf(Family::KeulerMoment, n); }
std::string claim_c7(unsigned n) { return check_cf(Family::SvMoment, n); }

std::string check_hankel(Family moment, unsigned n) {
  std::vector<MultiPoly> mu =
      moment_column(make_family(moment, std::max(2 * n, kDefaultOrder)), 2 * n);
  TTRData t = family_ttr(moment, n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    MultiPoly det = hankel_det(mu, m);
    MultiPoly closed =
        moment == Family::KeulerMoment ? hankel_closed_keuler(m) : hankel_closed_sv(m);
    if (det != closed) return poly_mismatch("Hankel determinant vs closed form", m, det, closed);
    MultiPoly kratt = hankel_from_betas(t.beta, m);
    if (det != kratt) return poly_mismatch("Hankel determinant vs beta product", m, det, kratt);
  }
  if (moment == Family::KeulerMoment) {
    for (unsigned m = 0; m <= n + 1; ++m) {
      MultiPoly a = hankel_closed_keuler(m);
      MultiPoly b = hankel_closed_keuler_superfactorial(m);
      if (a != b) return poly_mismatch("factorial vs superfactorial form", m, a, b);
    }
  }
  return {};
}

std::string claim_c4(unsigned n) { return check_hankel(Family::KeulerMoment, n); }
std::string claim_c8(unsigned n) { return check_hankel(Family::SvMoment, n); }

// Shifted-family analogue of p1/c2/c3: tridiagonal production with the
// stated Z and A, the stated leading recurrence coefficients, and J-fraction
// moments equal to the once-shifted moment sequence.
std::string check_shifted(Family shifted, Family coeff, Family base, const TruncSeries& a_closed,
                          const TruncSeries& z_closed, const MultiPoly& alpha0,
                          const MultiPoly& beta1, bool divide_y, unsigned n) {
  std::string w = check_moment_array(shifted, coeff, a_closed, z_closed, std::max(n, 7u));
  if (!w.empty()) return w;

  TTRData got = extract_ttr(production_ladder(make_family(shifted, n + 3), n + 1));
  if (got.alpha.at(0) != alpha0)
    return poly_mismatch("alpha", 0, got.alpha.at(0), alpha0);
  if (got.beta.at(0) != beta1) return poly_mismatch("beta", 1, got.beta.at(0), beta1);
  TTRData want = family_ttr(shifted, n + 1);
  w = compare_lists("alpha", got.alpha, want.alpha, n);
  if (!w.empty()) return w;
  w = compare_lists("beta", got.beta, want.beta, n - 1);
  if (!w.empty()) return w;

  std::vector<MultiPoly> mu = jfraction_moments(want, n);
  std::vector<MultiPoly> col = moment_column(make_family(shifted, std::max(n, kDefaultOrder)), n);
  w = compare_lists("J-fraction vs moment column", mu, col, n);
  if (!w.empty()) return w;

  std::vector<MultiPoly> base_col =
      moment_column(make_family(base, std::max(n + 1, kDefaultOrder)), n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    MultiPoly lifted = divide_y ? mu[m] * poly_y() : mu[m];
    if (lifted != base_col[m + 1])
      return poly_mismatch("shifted moment vs base sequence", m, lifted, base_col[m + 1]);
  }
  return {};
}

std::string claim_s5_keuler(unsigned n) {
  unsigned order = std::max(n + 2, kDefaultOrder);
  const MultiPoly k = poly_k(), x = poly_x();
  TruncSeries a_closed =
      linear_series(MultiPoly(1), k, order) * linear_series(MultiPoly(1), k * x, order);
  TruncSeries z_closed = linear_series(k * x + 1, k * x * (k + 1), order);
  return check_shifted(Family::KeulerShiftedMoment, Family::KeulerShiftedCoeff,
                       Family::KeulerMoment, a_closed, z_closed, k * x + 1, k * x * (k + 1),
                       false, n);
}

std::string claim_s5_sv(unsigned n) {
  unsigned order = std::max(n + 2, kDefaultOrder);
  const MultiPoly x = poly_x(), y = poly_y();
  TruncSeries a_closed =
      linear_series(MultiPoly(1), MultiPoly(1), order) * linear_series(MultiPoly(1), x, order);
  TruncSeries z_closed = linear_series(x + y, x * (y + 1), order);
  return check_shifted(Family::SvShiftedMoment, Family::SvShiftedCoeff, Family::SvMoment,
                       a_closed, z_closed, x + y, x * (y + 1), true, n);
}

std::string claim_stirling4(unsigned n) {
  const unsigned size = 7;
  RiordanPair bridge = make_family(Family::StirlingBridge, std::max(n, kDefaultOrder));
  PolyMatrix b = realize(bridge, size);

  PolyMatrix s2gen = realize(stirling2_general(poly_x() - 1, size), size);
  PolyMatrix s1 = realize(stirling1_array(size), size);
  std::string w = matrix_mismatch("bridge vs Stirling product", b, s2gen * s1);
  if (!w.empty()) return w;

  w = matrix_mismatch("x = 0", b.substitute(Var::X, Rational(0)), PolyMatrix::identity(size));
  if (!w.empty()) return w;
  w = matrix_mismatch("x = 1", b.substitute(Var::X, Rational(1)), s1);
  if (!w.empty()) return w;
  PolyMatrix a079641 = realize(stirling2_general(MultiPoly(1), size), size) * s1;
  w = matrix_mismatch("x = 2", b.substitute(Var::X, Rational(2)), a079641);
  if (!w.empty()) return w;
  PolyMatrix x3 = realize(stirling2_general(MultiPoly(2), size), size) * s1;
  w = matrix_mismatch("x = 3", b.substitute(Var::X, Rational(3)), x3);
  if (!w.empty()) return w;

  // [bridge] . (y^m) expands F_n in y.
  std::vector<MultiPoly> ypowers;
  for (unsigned m = 0; m < size; ++m) ypowers.push_back(MultiPoly::variable(Var::Y, m));
  std::vector<MultiPoly> f_col =
      moment_column(make_family(Family::SvMoment, kDefaultOrder), size - 1);
  std::vector<MultiPoly> applied = apply_sequence(bridge, ypowers);
  w = compare_lists("bridge applied to y-powers", applied, f_col, size - 1);
  if (!w.empty()) return w;

  for (unsigned m = 0; m <= std::min(n, kMaxEnumN); ++m) {
    MultiPoly f = sv_oracle(m);
    if (sv_from_stirling(m) != f)
      return poly_mismatch("Stirling double sum (F)", m, sv_from_stirling(m), f);
    if (keuler_from_stirling(m) != f.homogenize_y(m))
      return poly_mismatch("Stirling double sum (1/k)", m, keuler_from_stirling(m),
                           f.homogenize_y(m));
  }
  return {};
}

std::string claim_hankel_alpha_indep(unsigned n) {
  for (Family f : {Family::KeulerMoment, Family::SvMoment}) {
    TTRData t = family_ttr(f, 2 * n + 1);
    TTRData bumped = t;
    for (MultiPoly& a : bumped.alpha) a += MultiPoly(1);
    std::vector<MultiPoly> mu = jfraction_moments(t, 2 * n);
    std::vector<MultiPoly> mu2 = jfraction_moments(bumped, 2 * n);
    if (mu == mu2) return "alpha perturbation did not change the moments";
    for (unsigned m = 0; m <= n; ++m) {
      MultiPoly a = hankel_det(mu, m);
      MultiPoly b = hankel_det(mu2, m);
      if (a != b)
        return poly_mismatch(std::string("Hankel of perturbed moments (") + family_name(f) + ")",
                             m, b, a);
    }
  }
  return {};
}

std::string claim_deleham(unsigned n) {
  const MultiPoly k = poly_k(), y = poly_y();
  auto row_poly = [](const PolyMatrix& tri, unsigned m) {
    MultiPoly acc;
    for (unsigned j = 0; j < tri.cols(); ++j)
      acc += tri.at(m, j) * MultiPoly::variable(Var::X, j);
    return acc;
  };

  std::vector<MultiPoly> r, s;
  for (unsigned m = 0; m <= n; ++m) {
    r.push_back(MultiPoly(static_cast<long>(m)) * k + 1);
    r.push_back(MultiPoly());
    s.push_back(MultiPoly());
    s.push_back(MultiPoly(static_cast<long>(m + 1)) * k);
  }
  PolyMatrix tri = deleham_delta(r, s, n);
  std::vector<MultiPoly> mu =
      moment_column(make_family(Family::KeulerMoment, std::max(n, kDefaultOrder)), n);
  for (unsigned m = 0; m <= n; ++m)
    if (row_poly(tri, m) != mu[m])
      return poly_mismatch("1/k-Eulerian Delta rows", m, row_poly(tri, m), mu[m]);

  r.clear();
  s.clear();
  for (unsigned m = 0; m <= n; ++m) {
    r.push_back(y + MultiPoly(static_cast<long>(m)));
    r.push_back(MultiPoly());
    s.push_back(MultiPoly());
    s.push_back(MultiPoly(static_cast<long>(m + 1)));
  }
  tri = deleham_delta(r, s, n);
  mu = moment_column(make_family(Family::SvMoment, std::max(n, kDefaultOrder)), n);
  for (unsigned m = 0; m <= n; ++m)
    if (row_poly(tri, m) != mu[m])
      return poly_mismatch("excedance-cycle Delta rows", m, row_poly(tri, m), mu[m]);

  r.clear();
  s.clear();
  for (unsigned m = 0; m <= n; ++m) {
    r.push_back(MultiPoly(static_cast<long>(m)));
    r.push_back(MultiPoly(static_cast<long>(2 * (m + 1))));
    s.push_back(MultiPoly(1));
    s.push_back(MultiPoly());
  }
  // r interleaves as 0, 2, 1, 4, 2, 6, ...; s as 1, 0, 1, 0, ...
  tri = deleham_delta(r, s, n);
  PolyMatrix want =
      realize(multiply(stirling2_general(MultiPoly(1), n + 1), stirling1_array(n + 1)), n + 1);
  return matrix_mismatch("A079641 Delta triangle", tri, want);
}

struct ClaimImpl {
  ClaimInfo info;
  std::function<std::string(unsigned)> run;
};

const std::vector<ClaimImpl>& claim_impls() {
  static const std::vector<ClaimImpl> impls = {
      {{"p1",
        "1/k-Eulerian moment array: tridiagonal production matrix, closed-form Z and A, inverse "
        "pairing with the coefficient array",
        7},
       claim_p1},
      {{"c2", "1/k-Eulerian three-term recurrence and orthogonality of the recurrence polynomials",
        6},
       claim_c2},
      {{"c3",
        "1/k-Eulerian moments: S-fraction, contracted J-fraction, moment column, and permutation "
        "oracle agree",
        7},
       claim_c3},
      {{"c4", "1/k-Eulerian Hankel transform: determinant, product formulas, and beta product "
              "agree",
        5},
       claim_c4},
      {{"p5",
        "excedance-cycle moment array: tridiagonal production matrix, closed-form Z and A, "
        "inverse pairing with the coefficient array",
        7},
       claim_p5},
      {{"c6",
        "excedance-cycle three-term recurrence and orthogonality of the recurrence polynomials",
        6},
       claim_c6},
      {{"c7",
        "excedance-cycle moments: S-fraction, contracted J-fraction, moment column, and "
        "permutation oracle agree",
        7},
       claim_c7},
      {{"c8", "excedance-cycle Hankel transform: determinant, product formula, and beta "
              "product agree",
        5},
       claim_c8},
      {{"s5-keuler", "once-shifted 1/k-Eulerian polynomials are again moments", 6},
       claim_s5_keuler},
      {{"s5-sv", "once-shifted excedance-cycle polynomials over y are again moments", 6},
       claim_s5_sv},
      {{"stirling4",
        "Stirling factorization of the bridge array, its integer-x specializations, and the "
        "double-sum formulas",
        7},
       claim_stirling4},
      {{"hankel-alpha-indep",
        "Hankel determinants are unchanged when every alpha_n is perturbed", 4},
       claim_hankel_alpha_indep},
      {{"deleham", "Delta-operator triangles reproduce both moment families and the x = 2 "
                   "specialization triangle",
        6},
       claim_deleham},
  };
  return impls;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& impl : claim_impls()) v.push_back(impl.info);
    return v;
  }();
  return infos;
}

bool is_known_claim(const std::string& id) {
  for (const auto& impl : claim_impls())
    if (impl.info.id == id) return true;
  return false;
}

VerifyReport run_claim(const std::string& id, std::optional<unsigned> n) {
  for (const auto& impl : claim_impls()) {
    if (impl.info.id != id) continue;
    VerifyReport report;
    report.id = id;
    auto start = std::chrono::steady_clock::now();
    try {
      report.witness = impl.run(n.value_or(impl.info.default_n));
    } catch (const std::exception& e) {
      report.witness = std::string("exception: ") + e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report.pass = report.witness.empty();
    return report;
  }
  throw UnknownFamily("unknown claim id: " + id);
}

std::vector<VerifyReport> run_all_claims(std::optional<unsigned> n) {
  std::vector<VerifyReport> reports;
  for (const auto& impl : claim_impls()) reports.push_back(run_claim(impl.info.id, n));
  return reports;
}

}  // namespace riordan
