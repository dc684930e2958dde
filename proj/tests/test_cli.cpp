#include "analogy/cli.hpp"

#include <sstream>

#include "analogy/report.hpp"
#include "doctest.h"
#include "test_support.hpp"

using analogy::testing::data_path;
namespace cli = analogy::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const analogy::Report* find_report(const std::vector<analogy::Report>& rs, const std::string& prefix) {
  for (const auto& r : rs)
    if (r.title.rfind(prefix, 0) == 0) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("euler with defaults passes") {
  auto r = run({"euler"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("euler with an impossible tolerance fails its checks") {
  auto r = run({"euler", "--tolerance", "1e-12"});
  CHECK(r.code == cli::kExitCheckFailed);
}

TEST_CASE("grandi reports both scheme values and the finite control") {
  auto r = run({"--format", "structured", "grandi"});
  REQUIRE(r.code == cli::kExitOk);
  auto reports = analogy::parse_structured(r.out);
  REQUIRE(reports.size() == 2);
  CHECK(std::get<double>(reports[0].rows[0][3]) == 0.0);
  CHECK(std::get<double>(reports[0].rows[1][3]) == 1.0);
  CHECK(reports[1].passed == true);
  for (const auto& row : reports[1].rows) CHECK(std::get<bool>(row[3]));
}

TEST_CASE("missing input file names the path") {
  const auto path = data_path("does_not_exist.json");
  auto r = run({"determine", "--kb", path});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.err.find(path) != std::string::npos);
}

TEST_CASE("malformed document is an input error") {
  auto r = run({"determine", "--kb", data_path("../CMakeLists.txt")});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.err.find("error [parse]") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"euler", "--no-such-flag"}).code == cli::kExitUsage);
  CHECK(run({"infer", "--kb", data_path("currency.json"), "--rule", "det9", "--source", "a", "--target", "b"}).code ==
        cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("an inapplicable rule is an input error") {
  auto bad = run({"infer", "--kb", data_path("currency.json"), "--rule", "det1", "--source", "paris_shop", "--target",
                  "madrid_shop", "--connection", "country_currency"});
  CHECK(bad.code == cli::kExitInputError);
  CHECK(bad.err.find("rule-inapplicable") != std::string::npos);
}

TEST_CASE("structured output round-trips and is deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "structured", "sim", "--kb", data_path("metric6.json")},
      {"--format", "structured", "sim", "--kb", data_path("binary_traits.json"), "--index", "contrast"},
      {"--format", "structured", "audit", "--kb", data_path("metric6.json"), "--local", "overlap"},
      {"--format", "structured", "rank", "--kb", data_path("currency.json"), "--target", "marseille_shop", "--j", "1"},
      {"--format", "structured", "determine", "--kb", data_path("currency.json")},
      {"--format", "structured", "typicality", "--kb", data_path("posets.json")},
      {"--format", "structured", "multi", "--problem", data_path("talaly.json")},
      {"--format", "structured", "grandi"},
  };
  for (const auto& args : commands) {
    CAPTURE(args.back());
    auto first = run(args);
    auto second = run(args);
    REQUIRE(first.code == cli::kExitOk);
    CHECK(first.out == second.out);
    auto parsed = analogy::parse_structured(first.out);
    CHECK_FALSE(parsed.empty());
    CHECK(analogy::render_structured(parsed) == first.out);
  }
}

TEST_CASE("infer subcommands") {
  auto det1 = run({"--format", "structured", "infer", "--kb", data_path("currency.json"), "--rule", "det1", "--source",
                   "paris_shop", "--target", "marseille_shop", "--connection", "country_currency"});
  REQUIRE(det1.code == cli::kExitOk);
  auto r = analogy::parse_structured(det1.out);
  CHECK(std::get<std::string>(r[0].rows[0][2]) == "{euro}");
  CHECK(std::get<std::string>(r[0].rows[0][3]) == "deductive");

  auto typ = run({"--format", "structured", "infer", "--kb", data_path("berlin_rome.json"), "--rule", "typ",
                  "--source", "berlin", "--target", "rome", "--concept", "cities", "--aspect", "transportation"});
  REQUIRE(typ.code == cli::kExitOk);
  auto t = analogy::parse_structured(typ.out);
  CHECK(std::get<std::string>(t[0].rows[0][2]) == "{buses, taxis, underground}");
}

TEST_CASE("multi on Talaly") {
  auto r = run({"--format", "structured", "multi", "--problem", data_path("talaly.json")});
  REQUIRE(r.code == cli::kExitOk);
  auto reports = analogy::parse_structured(r.out);
  const auto* support = find_report(reports, "support for");
  REQUIRE(support);
  REQUIRE(support->rows.size() == 2);
  CHECK(std::get<std::string>(support->rows[0][1]) == "{i, iv, vi}");
  CHECK(std::get<std::string>(support->rows[1][1]) == "{ii, iii, v}");
  CHECK(std::get<std::int64_t>(support->rows[0][2]) == 3);
  CHECK(std::get<std::int64_t>(support->rows[1][2]) == 3);
}
