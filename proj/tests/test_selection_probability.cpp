#include "analogy/selection_probability.hpp"

#include <numeric>

#include "doctest.h"
#include "test_support.hpp"

using namespace analogy;
using analogy::testing::enumerate_relevant_subsets;

namespace {

Instance with_matches(const std::string& id, std::size_t shared, std::size_t matched) {
  Instance inst{id, {}};
  for (std::size_t k = 0; k < shared; ++k)
    inst.values["a" + std::to_string(k)] = SymbolSet{k < matched ? "same" : id};
  return inst;
}

Instance target_of(std::size_t shared) {
  Instance inst{"target", {}};
  for (std::size_t k = 0; k < shared; ++k) inst.values["a" + std::to_string(k)] = SymbolSet{"same"};
  return inst;
}

}  // namespace

TEST_CASE("degree of similarity") {
  CHECK(degree_of_similarity(4, 4) == 1.0);
  CHECK(degree_of_similarity(0, 4) == 0.0);
  CHECK(degree_of_similarity(3, 4) == doctest::Approx(0.75));
  CHECK_THROWS_AS(degree_of_similarity(5, 4), AnalogyError);
  CHECK_THROWS_AS(degree_of_similarity(0, 0), AnalogyError);
}

TEST_CASE("relevant match probability on small cases") {
  CHECK(relevant_match_probability(4, 2, 4) == 1.0);
  CHECK(relevant_match_probability(2, 0, 4) == 1.0);
  CHECK(relevant_match_probability(3, 2, 4) == doctest::Approx(0.5));
  CHECK(relevant_match_ratio(3, 2, 4) == Rational{1, 2});
  CHECK(relevant_match_probability(1, 2, 4) == 0.0);
}

TEST_CASE("relevant match probability domain errors") {
  for (auto [s, j, m] : {std::array<std::size_t, 3>{1, 2, 0}, {5, 1, 4}, {2, 5, 4}}) {
    try {
      relevant_match_probability(s, j, m);
      FAIL("expected an error");
    } catch (const AnalogyError& e) {
      CHECK(e.kind() == ErrorKind::Domain);
    }
  }
}

TEST_CASE("exact ratio equals subset enumeration for m <= 10") {
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned s = 0; s <= m; ++s)
      for (unsigned j = 0; j <= m; ++j) {
        auto [favourable, total] = enumerate_relevant_subsets(s, j, m);
        std::uint64_t g = std::gcd(favourable, total);
        Rational expected{favourable / g, total / g};
        CAPTURE(s);
        CAPTURE(j);
        CAPTURE(m);
        CHECK(relevant_match_ratio(s, j, m) == expected);
        CHECK(relevant_match_probability(s, j, m) == doctest::Approx(expected.to_double()));
      }
}

TEST_CASE("probability is nondecreasing in s for m <= 12") {
  for (std::size_t m = 1; m <= 12; ++m)
    for (std::size_t j = 0; j <= m; ++j)
      for (std::size_t s = 0; s < m; ++s) CHECK(relevant_match_probability(s, j, m) <= relevant_match_probability(s + 1, j, m));
}

TEST_CASE("binomial") {
  CHECK(binomial(64, 32) == 1832624140942590534ull);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  for (std::size_t n = 1; n <= 64; ++n)
    for (std::size_t k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("large m falls back to log-gamma") {
  // C(90,3)/C(100,3) = 90*89*88 / (100*99*98)
  CHECK(relevant_match_probability(90, 3, 100) == doctest::Approx(704880.0 / 970200.0).epsilon(1e-12));
  CHECK(relevant_match_probability(100, 7, 100) == doctest::Approx(1.0));
}

TEST_CASE("rank_sources") {
  auto target = target_of(5);

  SUBCASE("single candidate") {
    std::vector<Instance> c{with_matches("only", 5, 3)};
    auto ranked = rank_sources(target, c, 2);
    REQUIRE(ranked.size() == 1);
    CHECK(ranked[0].source->id == "only");
    CHECK(ranked[0].counts == MatchCounts{3, 5});
  }

  SUBCASE("more matches rank first") {
    std::vector<Instance> c{with_matches("weak", 5, 2), with_matches("strong", 5, 4)};
    auto ranked = rank_sources(target, c, 2);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].source->id == "strong");
    CHECK(ranked[0].probability == doctest::Approx(6.0 / 10.0));
    CHECK(ranked[1].probability == doctest::Approx(1.0 / 10.0));
  }

  SUBCASE("ties fall back to id order") {
    std::vector<Instance> c{with_matches("zeta", 5, 3), with_matches("alpha", 5, 3)};
    auto ranked = rank_sources(target, c, 2);
    CHECK(ranked[0].source->id == "alpha");
    CHECK(ranked[1].source->id == "zeta");
  }

  SUBCASE("too few shared aspects scores zero") {
    std::vector<Instance> c{with_matches("short", 2, 2), with_matches("long", 5, 3)};
    auto ranked = rank_sources(target, c, 3);
    CHECK(ranked[0].source->id == "long");
    CHECK(ranked[1].probability == 0.0);
  }
}
