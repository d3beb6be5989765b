#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "riordan/claims.hpp"
#include "riordan/combinat.hpp"
#include "riordan/hankel.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"

namespace py = pybind11;
using namespace riordan;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  for (unsigned r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (unsigned c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Family named_family(const std::string& name) {
  if (name == "sv") return Family::SvMoment;
  if (name == "keuler") return Family::KeulerMoment;
  if (name == "sv-shifted") return Family::SvShiftedMoment;
  if (name == "keuler-shifted") return Family::KeulerShiftedMoment;
  return family_from_string(name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Riordan-array moment calculator";

  m.def(
      "moments",
      [](const std::string& family, unsigned n, unsigned order) {
        std::vector<std::string> out;
        for (const MultiPoly& mu :
             moment_column(make_family(named_family(family), std::max(order, n)), n))
          out.push_back(mu.str());
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("order") = kDefaultOrder,
      "moment polynomials mu_0..mu_n in canonical text form");

  m.def(
      "families", [] {
        std::vector<std::string> names;
        for (Family f : kAllFamilies) names.emplace_back(family_name(f));
        return names;
      },
      "all named arrays");

  m.def(
      "realize",
      [](const std::string& family, unsigned n, unsigned order) {
        return matrix_strings(realize(make_family(named_family(family), std::max(order, n)), n));
      },
      py::arg("family"), py::arg("n"), py::arg("order") = kDefaultOrder,
      "n x n lower-triangular realization");

  m.def(
      "production",
      [](const std::string& family, unsigned n, unsigned order) {
        return matrix_strings(
            production_ladder(make_family(named_family(family), std::max(order, n + 1)), n));
      },
      py::arg("family"), py::arg("n"), py::arg("order") = kDefaultOrder,
      "n x n production matrix");

  m.def(
      "hankel",
      [](const std::string& family, unsigned n) {
        HankelResult res = hankel_check(named_family(family), n);
        py::dict d;
        d["n"] = res.n;
        d["determinant"] = res.determinant.str();
        d["closed_form"] = res.closed_form.str();
        d["match"] = res.match;
        return d;
      },
      py::arg("family"), py::arg("n"), "Hankel determinant vs the closed form");

  m.def(
      "verify",
      [](const std::string& claim, std::optional<unsigned> n) {
        VerifyReport report = run_claim(claim, n);
        py::dict d;
        d["id"] = report.id;
        d["pass"] = report.pass;
        d["witness"] = report.witness;
        return d;
      },
      py::arg("claim"), py::arg("n") = py::none(), "run one documented claim");

  m.def(
      "claims", [] {
        std::vector<std::string> ids;
        for (const ClaimInfo& info : claim_registry()) ids.push_back(info.id);
        return ids;
      },
      "claim registry ids in report order");

  m.def(
      "excedance_cycle_polynomial",
      [](unsigned n) { return sv_oracle(n).str(); }, py::arg("n"),
      "sum over S_n of x^exc y^cyc by enumeration");
}
