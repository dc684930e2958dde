// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "analogy/case_studies.hpp"
#include "analogy/cli.hpp"
#include "analogy/determination.hpp"
#include "analogy/multiple_analogy.hpp"
#include "analogy/report.hpp"
#include "analogy/selection_probability.hpp"
#include "analogy/similarity.hpp"
#include "analogy/typicality.hpp"
#include "test_support.hpp"

using namespace analogy;
using analogy::testing::data_path;
using analogy::testing::load_fixture;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str()};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

const std::vector<double> kGrid{0.1, 0.5, 1.0, 1.5};

Verdict basel() {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  auto r = run_cli({"--format", "structured", "euler", "--n", "10000"});
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(r.code == cli::kExitOk, "euler exit " + std::to_string(r.code));
  auto reports = parse_structured(r.out);
  double residual = -1.0;
  for (const auto& row : reports.at(0).rows)
    if (std::get<std::string>(row[0]).rfind("basel", 0) == 0) residual = std::get<double>(row[3]);
  v.require(residual > 1.0 / 10001.0 && residual < 1.0 / 10000.0, "residual " + fmt(residual) + " outside bounds");
  v.require(seconds < 1.0, "euler took " + fmt(seconds) + " s");
  if (v.ok) v.detail = "residual " + fmt(residual) + ", euler ran in " + fmt(seconds) + " s";
  return v;
}

Verdict product() {
  Verdict v;
  double rel = std::abs(sin_via_product(std::numbers::pi / 2.0, 100000) - 1.0);
  v.require(rel <= 1e-5, "relative error " + fmt(rel));
  auto grid_max = [](std::size_t k) {
    double worst = 0.0;
    for (double x : kGrid) worst = std::max(worst, std::abs(sin_via_product(x, k) - sin_via_series(x, 30)));
    return worst;
  };
  std::vector<std::size_t> ks;
  for (std::size_t k = 1000; k < 100000; k *= 2) ks.push_back(k);
  ks.push_back(100000);
  double previous = grid_max(ks[0]);
  for (std::size_t i = 1; i < ks.size(); ++i) {
    double current = grid_max(ks[i]);
    v.require(current < previous, "grid error rose at K = " + std::to_string(ks[i]));
    previous = current;
  }
  if (v.ok) v.detail = "relative error " + fmt(rel) + ", grid error decreasing over " + std::to_string(ks.size()) + " K";
  return v;
}

Verdict coefficient() {
  Verdict v;
  double r = coefficient_identity_residual(10000);
  v.require(r <= 1.1e-5, "residual " + fmt(r));
  for (std::size_t k = 1; k < 100; ++k)
    v.require(coefficient_identity_residual(k + 1) < coefficient_identity_residual(k),
              "not decreasing at K = " + std::to_string(k));
  if (v.ok) v.detail = "residual " + fmt(r) + " at K = 10^4";
  return v;
}

Verdict polya_c1() {
  Verdict v;
  auto reports = polya_c1_checks(10000, kGrid);
  v.require(reports.size() == 3, "expected three checks");
  if (!v.ok) return v;
  v.require(reports[0].max_residual <= 1e-12, "oddness residual " + fmt(reports[0].max_residual));
  v.require(reports[1].max_residual <= 1e-3, "shift residual " + fmt(reports[1].max_residual));
  v.require(reports[2].max_residual <= 1e-3, "double-angle residual " + fmt(reports[2].max_residual));
  auto r = run_cli({"euler"});
  v.require(r.code == cli::kExitOk, "euler exit " + std::to_string(r.code));
  if (v.ok)
    v.detail = "residuals " + fmt(reports[0].max_residual) + ", " + fmt(reports[1].max_residual) + ", " +
               fmt(reports[2].max_residual);
  return v;
}

Verdict leibniz() {
  Verdict v;
  auto l = leibniz_corroboration(10000, 4);
  v.require(l.residual < 1e-8, "residual " + fmt(l.residual));
  if (v.ok) v.detail = "residual " + fmt(l.residual);
  return v;
}

Verdict grandi() {
  Verdict v;
  auto a = regroup_series(SeriesId::Grandi, GroupingScheme{{}, 2}, 1000);
  auto b = regroup_series(SeriesId::Grandi, GroupingScheme{{1}, 2}, 1000);
  v.require(a.stabilized && a.value == 0.0, "scheme A did not stabilise at 0");
  v.require(b.stabilized && b.value == 1.0, "scheme B did not stabilise at 1");

  const std::vector<double> c{1, -1, 1, -1, 1};
  for (const std::vector<std::size_t>& s : {std::vector<std::size_t>{2, 2, 1}, std::vector<std::size_t>{1, 2, 2}}) {
    auto f = finite_regroup_control(c, s);
    v.require(f.regrouped == 1.0 && f.plain == 1.0, "paper bracketing gave " + fmt(f.regrouped));
  }
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> blocks;
    std::size_t left = c.size();
    while (left > 0) {
      std::size_t len = std::uniform_int_distribution<std::size_t>(1, left)(rng);
      blocks.push_back(len);
      left -= len;
    }
    v.require(finite_regroup_control(c, blocks).regrouped == 1.0, "random scheme broke equality");
  }
  if (v.ok) v.detail = "A = 0, B = 1, finite control = 1 under 2 + 200 schemes";
  return v;
}

Verdict hypergeometric() {
  Verdict v;
  std::size_t cases = 0;
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned s = 0; s <= m; ++s)
      for (unsigned j = 0; j <= m; ++j) {
        auto [fav, total] = analogy::testing::enumerate_relevant_subsets(s, j, m);
        std::uint64_t g = std::gcd(fav, total);
        v.require(relevant_match_ratio(s, j, m) == Rational{fav / g, total / g},
                  "mismatch at (" + std::to_string(s) + "," + std::to_string(j) + "," + std::to_string(m) + ")");
        ++cases;
      }
  for (std::size_t m = 1; m <= 12; ++m)
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t s = 0; s < m; ++s)
        v.require(relevant_match_probability(s, j, m) <= relevant_match_probability(s + 1, j, m),
                  "not monotone in s at m = " + std::to_string(m));
  if (v.ok) v.detail = std::to_string(cases) + " exact matches, monotone for m <= 12";
  return v;
}

Verdict transformational() {
  Verdict v;
  const std::string a = "+++---", b = "+++--+", c = "+---++";
  v.require(transformational_distance(a, b, {true, false, false}) == 1u, "d(a,b) != 1");

  const std::optional<std::size_t> frozen[] = {4, 3, 3, 3, std::nullopt, std::nullopt, std::nullopt};
  const EditOperationSet configs[] = {{true, false, false}, {true, true, false},  {true, false, true},
                                      {true, true, true},   {false, true, false}, {false, false, true},
                                      {false, true, true}};
  std::string recorded;
  for (std::size_t k = 0; k < std::size(configs); ++k) {
    auto d = transformational_distance(a, c, configs[k]);
    v.require(d == frozen[k], "d(a,c) changed under " + configs[k].label());
    recorded += (recorded.empty() ? "" : " ") + configs[k].label() + "=" + (d ? std::to_string(*d) : "none");
  }

  std::mt19937 rng(500);
  std::uniform_int_distribution<std::size_t> length(1, 6);
  std::bernoulli_distribution coin(0.5);
  auto random_string = [&](std::size_t n) {
    std::string s;
    for (std::size_t k = 0; k < n; ++k) s += coin(rng) ? '+' : '-';
    return s;
  };
  for (const auto& ops : all_operation_sets()) {
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t n = length(rng);
      auto x = random_string(n), y = random_string(n), z = random_string(n);
      auto xy = transformational_distance(x, y, ops);
      auto yz = transformational_distance(y, z, ops);
      auto xz = transformational_distance(x, z, ops);
      v.require(xy == transformational_distance(y, x, ops), "asymmetric on " + x + ", " + y);
      if (xy && yz) v.require(xz && *xz <= *xy + *yz, "triangle fails on " + x + ", " + y + ", " + z);
    }
  }
  if (v.ok) v.detail = "d(a,c): " + recorded;
  return v;
}

Verdict metric_audit() {
  Verdict v;
  auto kb = load_fixture("metric6.json");
  auto triples = ordered_triples(kb.instances);
  v.require(triples.size() == 120, "expected 120 triples");
  auto ratio = audit_metric_axioms(GlobalIndexKind::CityBlock, kb,
                                   LocalAssignment::uniform_symbolic(LocalIndexKind::SetComplementRatio), triples);
  v.require(ratio.all_passed(), "ratio locals violated an axiom");
  auto overlap = audit_metric_axioms(GlobalIndexKind::CityBlock, kb,
                                     LocalAssignment::uniform_symbolic(LocalIndexKind::OverlapIndicator), triples);
  auto witness = std::find_if(overlap.results.begin(), overlap.results.end(),
                              [](const AxiomResult& r) { return !r.passed && r.witness; });
  v.require(witness != overlap.results.end(), "no witness for overlap locals");
  if (v.ok) {
    const auto& w = *witness->witness;
    v.detail = "ratio passes; overlap violates " + std::string(to_string(witness->axiom)) + " at (" + w[0] + ", " +
               w[1] + ", " + w[2] + ")";
  }
  return v;
}

Verdict determination() {
  Verdict v;
  auto kb = load_fixture("currency.json");
  const auto& country = *kb.connection("country_currency");
  const auto& language = *kb.connection("language_currency");
  v.require(verify_connection(kb, country) == ConnectionStatus::Total, "country_currency not total");
  v.require(verify_connection(kb, language) == ConnectionStatus::Incomplete, "language_currency not incomplete");

  auto verified = with_verified_connections(kb);
  const auto& total = *verified.connection("country_currency");
  std::size_t applied = 0;
  for (const auto& s : verified.instances)
    for (const auto& t : verified.instances) {
      try {
        auto c = apply_det1(verified, total, s, t);
        ++applied;
        v.require(c.agreement != Agreement::Conflict, "DET1 conflict on " + s.id + " -> " + t.id);
      } catch (const AnalogyError& e) {
        v.require(e.kind() == ErrorKind::RuleInapplicable, "unexpected error " + std::string(e.what()));
      }
    }
  v.require(applied > 0, "DET1 never applied");

  kb.instances.push_back(Instance{"nice_shop", {{"country", SymbolSet{"france"}}, {"currency", SymbolSet{"franc"}}}});
  v.require(verify_connection(kb, country) == ConnectionStatus::Incomplete, "conflict did not flip the status");
  if (v.ok) v.detail = std::to_string(applied) + " DET1 applications, none conflicting; total -> incomplete";
  return v;
}

Verdict typicality() {
  Verdict v;
  auto kb = load_fixture("berlin_rome.json");
  auto c = apply_typ(kb, kb.concepts[0], *kb.instance("berlin"), *kb.instance("rome"), "transportation");
  v.require(c.value == FeatureValue{SymbolSet{"underground", "buses", "taxis"}}, "Rome got " + format_value(c.value));

  auto posets = load_fixture("posets.json");
  auto typical = typical_examples(*posets.concept_by_id("two_chains"));
  v.require(typical.size() == 2, "two_chains has " + std::to_string(typical.size()) + " typical members");

  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  for (int sample = 0; sample < 200; ++sample) {
    auto p = analogy::testing::random_poset(rng, size(rng), density(rng));
    auto t = typical_examples(p);
    auto m = maximal_members(p);
    auto e = exceptions(p);
    for (const auto& x : t) {
      v.require(m.contains(x), "typical member not maximal");
      v.require(!e.contains(x), "typical member is an exception");
    }
  }
  if (v.ok) v.detail = "Rome <- " + format_value(c.value) + "; two typical; 200 random posets";
  return v;
}

Verdict talaly() {
  Verdict v;
  auto r = run_cli({"--format", "structured", "multi", "--problem", data_path("talaly.json")});
  v.require(r.code == cli::kExitOk, "multi exit " + std::to_string(r.code));
  if (!v.ok) return v;
  auto reports = parse_structured(r.out);
  const Report* support = nullptr;
  const Report* roles = nullptr;
  for (const auto& rep : reports) {
    if (rep.title.rfind("support for", 0) == 0) support = &rep;
    if (rep.title == "provenance roles") roles = &rep;
  }
  v.require(support && roles, "missing support or provenance report");
  if (!v.ok) return v;
  std::map<std::string, std::pair<std::string, std::int64_t>> got;
  for (const auto& row : support->rows)
    got[std::get<std::string>(row[0])] = {std::get<std::string>(row[1]), std::get<std::int64_t>(row[2])};
  v.require(got["h_a"] == std::pair<std::string, std::int64_t>{"{i, iv, vi}", 3}, "h_a support " + got["h_a"].first);
  v.require(got["h_b"] == std::pair<std::string, std::int64_t>{"{ii, iii, v}", 3}, "h_b support " + got["h_b"].first);
  std::size_t both = 0;
  for (const auto& row : roles->rows)
    if (std::get<std::string>(row[1]) == "{generation, justification}") ++both;
  v.require(both > 0, "no source carries both roles");
  if (v.ok) v.detail = "a:{i,iv,vi} b:{ii,iii,v} 3/3, " + std::to_string(both) + " sources with both roles";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"basel reproduction", basel},
      {"product vs sine", product},
      {"coefficient identity", coefficient},
      {"polya C1 suite", polya_c1},
      {"leibniz C2", leibniz},
      {"grandi contradiction", grandi},
      {"hypergeometric oracle", hypergeometric},
      {"transformational distance", transformational},
      {"metric audit", metric_audit},
      {"determination soundness", determination},
      {"typicality", typicality},
      {"talaly reproduction", talaly},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, check] : criteria) {
    ++number;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.ok) ++failures;
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << number << ". " << name << ": " << v.detail << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
