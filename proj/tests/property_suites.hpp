#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "riordan/hankel.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"

namespace riordan::testing {

using SuiteOutcome = std::optional<std::string>;

inline std::string instance_tag(const char* suite, unsigned i, const std::string& what) {
  std::ostringstream os;
  os << suite << ": instance " << i << ": " << what;
  return os.str();
}

/// Commutative-ring axioms plus the exact-division and parse round trips.
inline SuiteOutcome prop_ring_axioms(unsigned instances, unsigned seed) {
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < instances; ++i) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    auto fail = [&](const std::string& what) {
      return instance_tag("ring-axioms", i, what);
    };
    if (a + b != b + a) return fail("additive commutativity");
    if ((a + b) + c != a + (b + c)) return fail("additive associativity");
    if (a * b != b * a) return fail("multiplicative commutativity");
    if ((a * b) * c != a * (b * c)) return fail("multiplicative associativity");
    if (a * (b + c) != a * b + a * c) return fail("distributivity");
    if (a + MultiPoly(0) != a) return fail("additive identity");
    if (a * MultiPoly(1) != a) return fail("multiplicative identity");
    if (!(a - a).is_zero()) return fail("additive inverse");
    if (-(-a) != a) return fail("double negation");
    if (a.pow(2) != a * a) return fail("pow(2)");
    if (!b.is_zero() && (a * b).exact_div(b) != a) return fail("exact division");
    if (MultiPoly::parse(a.str()) != a) return fail("parse round trip");
  }
  return std::nullopt;
}

/// exp/log, multiplicative inverse, and compositional inverse round trips.
inline SuiteOutcome prop_series_roundtrips(unsigned instances, unsigned seed) {
  std::mt19937 rng(seed);
  const unsigned order = 5;
  for (unsigned i = 0; i < instances; ++i) {
    auto fail = [&](const std::string& what) {
      return instance_tag("series-roundtrips", i, what);
    };
    TruncSeries g = random_series(rng, order, MultiPoly(1));
    TruncSeries f = random_series(rng, order, MultiPoly(0), true);
    try {
      if (g.log().exp() != g) return fail("exp(log(g)) != g");
      TruncSeries u = g - TruncSeries::one(order);
      if (u.exp().log() != u) return fail("log(exp(u)) != u");
      if (g * g.inverse() != TruncSeries::one(order)) return fail("g * 1/g != 1");
      TruncSeries fbar = f.reversion();
      if (fbar.compose(f) != TruncSeries::z(order)) return fail("fbar o f != z");
      if (f.compose(fbar) != TruncSeries::z(order)) return fail("f o fbar != z");
      if (fbar.reversion() != f) return fail("double reversion");
    } catch (const std::exception& e) {
      return fail(std::string("exception: ") + e.what());
    }
  }
  return std::nullopt;
}

/// Group law and inverse law for random and named pairs.
inline SuiteOutcome prop_riordan_group(unsigned instances, unsigned seed) {
  std::mt19937 rng(seed);
  const unsigned order = 5, size = 5;
  std::uniform_int_distribution<unsigned> pick(0, std::size(kAllFamilies) - 1);
  for (unsigned i = 0; i < instances; ++i) {
    auto fail = [&](const std::string& what) {
      return instance_tag("riordan-group", i, what);
    };
    try {
      RiordanPair a = i % 4 == 0
                          ? make_family(kAllFamilies[pick(rng)], order)
                          : RiordanPair(random_series(rng, order, MultiPoly(1)),
                                        random_series(rng, order, MultiPoly(0), true));
      RiordanPair b = i % 4 == 2
                          ? make_family(kAllFamilies[pick(rng)], order)
                          : RiordanPair(random_series(rng, order, MultiPoly(1)),
                                        random_series(rng, order, MultiPoly(0), true));
      if (realize(multiply(a, b), size) != realize(a, size) * realize(b, size))
        return fail("group law");
      RiordanPair inv = inverse(a);
      if (realize(inv, size) != realize(a, size).invert_unit_lower_triangular())
        return fail("inverse law");
      if (realize(multiply(a, inv), size) != PolyMatrix::identity(size))
        return fail("a * a^{-1} != identity");
    } catch (const std::exception& e) {
      return fail(std::string("exception: ") + e.what());
    }
  }
  return std::nullopt;
}

/// Hankel determinants computed from a recurrence depend only on the betas.
inline SuiteOutcome prop_hankel_alpha_independence(unsigned instances, unsigned seed) {
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < instances; ++i) {
    auto fail = [&](const std::string& what) {
      return instance_tag("hankel-alpha-independence", i, what);
    };
    unsigned n = i % 5 == 0 ? 3 : 2;
    TTRData t;
    for (unsigned m = 0; m <= 2 * n; ++m) t.alpha.push_back(random_poly(rng, 2, 2));
    for (unsigned m = 1; m <= 2 * n; ++m) t.beta.push_back(random_nonzero_poly(rng, 2));
    TTRData bumped = t;
    MultiPoly shift = random_nonzero_poly(rng, 2);
    for (MultiPoly& alpha : bumped.alpha) alpha += shift;
    try {
      auto mu = jfraction_moments(t, 2 * n);
      auto nu = jfraction_moments(bumped, 2 * n);
      if (mu == nu) return fail("alpha shift left the moments unchanged");
      for (unsigned m = 0; m <= n; ++m) {
        if (hankel_det(mu, m) != hankel_det(nu, m))
          return fail("h_" + std::to_string(m) + " moved with the alphas");
        if (hankel_det(mu, m) != hankel_from_betas(t.beta, m))
          return fail("h_" + std::to_string(m) + " != beta product");
      }
    } catch (const std::exception& e) {
      return fail(std::string("exception: ") + e.what());
    }
  }
  return std::nullopt;
}

/// The binomial transform preserves every Hankel determinant.
inline SuiteOutcome prop_binomial_invariance(unsigned instances, unsigned seed) {
  std::mt19937 rng(seed);
  for (unsigned i = 0; i < instances; ++i) {
    auto fail = [&](const std::string& what) {
      return instance_tag("binomial-invariance", i, what);
    };
    unsigned n = i % 4 == 0 ? 3 : 2;
    std::vector<MultiPoly> u;
    for (unsigned m = 0; m <= 2 * n; ++m) u.push_back(random_poly(rng, 2, 2));
    try {
      std::vector<MultiPoly> v = apply_sequence(binomial_array(2 * n + 1), u);
      for (unsigned m = 0; m <= n; ++m)
        if (hankel_det(u, m) != hankel_det(v, m))
          return fail("h_" + std::to_string(m) + " changed under the transform");
    } catch (const std::exception& e) {
      return fail(std::string("exception: ") + e.what());
    }
  }
  return std::nullopt;
}

struct PropertySuite {
  const char* name;
  SuiteOutcome (*run)(unsigned instances, unsigned seed);
};

inline const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites = {
      {"ring-axioms", prop_ring_axioms},
      {"series-roundtrips", prop_series_roundtrips},
      {"riordan-group", prop_riordan_group},
      {"hankel-alpha-independence", prop_hankel_alpha_independence},
      {"binomial-invariance", prop_binomial_invariance},
  };
  return suites;
}

}  // namespace riordan::testing
