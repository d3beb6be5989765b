#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riordan/claims.hpp"
#include "riordan/combinat.hpp"
#include "riordan/errors.hpp"
#include "riordan/hankel.hpp"
#include "riordan/orthopoly.hpp"
#include "riordan/production.hpp"

using nlohmann::json;
using namespace riordan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Substitutions {
  std::optional<std::string> x, y, k;

  MultiPoly apply(MultiPoly p) const {
    if (x) p = p.substitute(Var::X, Rational::parse(*x));
    if (y) p = p.substitute(Var::Y, Rational::parse(*y));
    if (k) p = p.substitute(Var::K, Rational::parse(*k));
    return p;
  }

  json to_json() const {
    json j = json::object();
    if (x) j["x"] = *x;
    if (y) j["y"] = *y;
    if (k) j["k"] = *k;
    return j;
  }
};

void add_subst_flags(CLI::App* cmd, Substitutions& subst) {
  cmd->add_option("--x", subst.x, "substitute a rational for x");
  cmd->add_option("--y", subst.y, "substitute a rational for y");
  cmd->add_option("--k", subst.k, "substitute a rational for k");
}

Family resolve_family(const std::string& name) {
  static const std::map<std::string, Family> aliases = {
      {"sv", Family::SvMoment},
      {"keuler", Family::KeulerMoment},
      {"sv-shifted", Family::SvShiftedMoment},
      {"keuler-shifted", Family::KeulerShiftedMoment},
  };
  auto it = aliases.find(name);
  if (it != aliases.end()) return it->second;
  return family_from_string(name);
}

void print_entries_json(const std::string& family, unsigned n,
                        const std::vector<std::string>& entries, const Substitutions& subst) {
  json j;
  j["family"] = family;
  j["n"] = n;
  j["entries"] = entries;
  j["substitutions"] = subst.to_json();
  std::cout << j.dump(2) << "\n";
}

std::vector<std::string> matrix_rows(const PolyMatrix& m) {
  std::vector<std::string> rows;
  for (unsigned r = 0; r < m.rows(); ++r) {
    std::string line;
    for (unsigned c = 0; c < m.cols(); ++c) {
      if (c > 0) line += ' ';
      line += compact_str(m.at(r, c));
    }
    rows.push_back(std::move(line));
  }
  return rows;
}

int cmd_emit(const std::string& family, unsigned n, unsigned order, const Substitutions& subst,
             const std::string& format) {
  if (n > order)
    throw std::invalid_argument("--n exceeds --order; raise --order to at least " +
                                std::to_string(n));
  RiordanPair p = make_family(resolve_family(family), order);
  std::vector<std::string> entries;
  for (const MultiPoly& mu : moment_column(p, n)) entries.push_back(subst.apply(mu).str());
  if (format == "json") {
    print_entries_json(family, n, entries, subst);
  } else {
    for (const std::string& e : entries) std::cout << e << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::vector<std::string> ids, std::optional<unsigned> n, bool timing) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    ids.clear();
    for (const ClaimInfo& info : claim_registry()) ids.push_back(info.id);
  }
  for (const std::string& id : ids)
    if (!is_known_claim(id)) throw std::invalid_argument("unknown claim id: " + id);
  bool all_pass = true;
  for (const std::string& id : ids) {
    VerifyReport report = run_claim(id, n);
    std::cout << report.id << ": " << (report.pass ? "pass" : "FAIL");
    if (!report.pass) std::cout << " (" << report.witness << ")";
    if (timing) std::cout << " [" << report.elapsed_ms << " ms]";
    std::cout << "\n";
    all_pass = all_pass && report.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_triangle(const std::string& name, unsigned n, unsigned order, const Substitutions& subst,
                 const std::string& format) {
  if (n > order)
    throw std::invalid_argument("--n exceeds --order; raise --order to at least " +
                                std::to_string(n));
  unsigned size = n + 1;
  std::optional<PolyMatrix> m;
  if (name == "bridge") {
    m = realize(make_family(Family::StirlingBridge, order), size);
  } else if (name == "stirling1") {
    m = realize(stirling1_array(order), size);
  } else if (name == "a079641-product") {
    m = realize(multiply(stirling2_general(MultiPoly(1), order), stirling1_array(order)), size);
  } else if (name == "x3-product") {
    m = realize(multiply(stirling2_general(MultiPoly(2), order), stirling1_array(order)), size);
  } else if (name == "production-keuler") {
    m = production_ladder(make_family(Family::KeulerMoment, order), size);
  } else if (name == "production-sv") {
    m = production_ladder(make_family(Family::SvMoment, order), size);
  } else {
    throw std::invalid_argument("unknown triangle name: " + name);
  }
  if (subst.x) m = m->substitute(Var::X, Rational::parse(*subst.x));
  if (subst.y) m = m->substitute(Var::Y, Rational::parse(*subst.y));
  if (subst.k) m = m->substitute(Var::K, Rational::parse(*subst.k));
  std::vector<std::string> rows = matrix_rows(*m);
  if (format == "json") {
    print_entries_json(name, n, rows, subst);
  } else {
    for (const std::string& r : rows) std::cout << r << "\n";
  }
  return kExitOk;
}

int cmd_production(const std::string& family, unsigned n, unsigned order,
                   const std::string& method, const std::string& format,
                   const Substitutions& subst) {
  if (n + 1 > order)
    throw std::invalid_argument("--n exceeds --order - 1; raise --order");
  RiordanPair p = make_family(resolve_family(family), order);
  PolyMatrix m = method == "analytic" ? production_analytic(compute_za(p), n)
                                      : production_ladder(p, n);
  if (subst.x) m = m.substitute(Var::X, Rational::parse(*subst.x));
  if (subst.y) m = m.substitute(Var::Y, Rational::parse(*subst.y));
  if (subst.k) m = m.substitute(Var::K, Rational::parse(*subst.k));
  std::vector<std::string> rows = matrix_rows(m);
  if (format == "json") {
    print_entries_json(family, n, rows, subst);
  } else {
    for (const std::string& r : rows) std::cout << r << "\n";
  }
  return kExitOk;
}

int cmd_hankel(const std::string& family, unsigned n, unsigned order, const std::string& format) {
  if (2 * n > order)
    throw std::invalid_argument("h_" + std::to_string(n) + " needs --order at least " +
                                std::to_string(2 * n));
  HankelResult res = hankel_check(resolve_family(family), n);
  if (format == "json") {
    json j;
    j["family"] = family;
    j["n"] = res.n;
    j["determinant"] = res.determinant.str();
    j["closed_form"] = res.closed_form.str();
    j["match"] = res.match;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "h_" << res.n << " determinant: " << res.determinant.str() << "\n";
    std::cout << "h_" << res.n << " closed form: " << res.closed_form.str() << "\n";
    std::cout << "match: " << (res.match ? "yes" : "no") << "\n";
  }
  return res.match ? kExitOk : kExitVerifyFail;
}

int cmd_oracle(unsigned n, const std::string& format) {
  PermStats stats = perm_stats(n);
  MultiPoly f = sv_oracle(n);
  if (format == "json") {
    json j;
    j["n"] = n;
    j["polynomial"] = f.str();
    json hist = json::array();
    for (const auto& [key, count] : stats.histogram)
      hist.push_back({{"exc", key.first}, {"cyc", key.second}, {"count", count}});
    j["histogram"] = hist;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << n << "\n";
    for (const auto& [key, count] : stats.histogram)
      std::cout << "exc=" << key.first << " cyc=" << key.second << ": " << count << "\n";
    std::cout << "polynomial: " << f.str() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Riordan-array moment calculator"};
  app.require_subcommand(1);

  unsigned order = kDefaultOrder;
  app.add_option("--order", order, "series truncation order")->capture_default_str();

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  Substitutions subst;

  auto* emit = app.add_subcommand("emit", "print a moment-polynomial list");
  std::string emit_family;
  unsigned emit_n = 4;
  emit->add_option("--family", emit_family, "family name or alias")->required();
  emit->add_option("--n", emit_n, "largest index to print")->capture_default_str();
  add_subst_flags(emit, subst);
  add_format(emit);

  auto* verify = app.add_subcommand("verify", "check documented claims");
  std::vector<std::string> claim_ids;
  std::optional<unsigned> verify_n;
  bool timing = false;
  verify->add_option("--claim", claim_ids, "claim id (repeatable) or 'all'");
  verify->add_option("--n", verify_n, "override the claim's default depth");
  verify->add_flag("--timing", timing, "append elapsed milliseconds");

  auto* triangle = app.add_subcommand("triangle", "print a named triangle");
  std::string tri_name;
  unsigned tri_n = 6;
  triangle->add_option("--name", tri_name, "bridge, stirling1, a079641-product, x3-product, production-keuler, production-sv")->required();
  triangle->add_option("--n", tri_n, "largest row index")->capture_default_str();
  add_subst_flags(triangle, subst);
  add_format(triangle);

  auto* production = app.add_subcommand("production", "print a production matrix");
  std::string prod_family;
  unsigned prod_n = 7;
  std::string prod_method = "ladder";
  production->add_option("--family", prod_family, "family name or alias")->required();
  production->add_option("--n", prod_n, "matrix size")->capture_default_str();
  production->add_option("--method", prod_method, "ladder or analytic")
      ->check(CLI::IsMember({"ladder", "analytic"}));
  add_subst_flags(production, subst);
  add_format(production);

  auto* hankel = app.add_subcommand("hankel", "Hankel determinant vs closed form");
  std::string hankel_family;
  unsigned hankel_n = 4;
  hankel->add_option("--family", hankel_family, "keuler or sv")->required();
  hankel->add_option("--n", hankel_n, "Hankel index")->capture_default_str();
  add_format(hankel);

  auto* oracle = app.add_subcommand("oracle", "permutation-statistic histogram");
  unsigned oracle_n = 4;
  oracle->add_option("--n", oracle_n, "permutation size")->capture_default_str();
  add_format(oracle);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (emit->parsed()) return cmd_emit(emit_family, emit_n, order, subst, format);
    if (verify->parsed()) return cmd_verify(claim_ids, verify_n, timing);
    if (triangle->parsed()) return cmd_triangle(tri_name, tri_n, order, subst, format);
    if (production->parsed())
      return cmd_production(prod_family, prod_n, order, prod_method, format, subst);
    if (hankel->parsed()) return cmd_hankel(hankel_family, hankel_n, order, format);
    if (oracle->parsed()) return cmd_oracle(oracle_n, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
