#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "analogy/core_model.hpp"

namespace analogy {

struct MatchStatistics {
  std::size_t matched = 0;   // i
  std::size_t shared = 0;    // m
  std::size_t relevant_matched = 0;  // s
  std::size_t relevant = 0;  // j

  // l: aspects still open after the observed matches.
  std::size_t remaining() const { return shared - matched; }
};

// Match fraction i/m.
double degree_of_similarity(std::size_t matched, std::size_t shared);

// Reduced fraction with 64-bit parts.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

// Exact for m <= kExactBinomialLimit.
std::uint64_t binomial(std::size_t n, std::size_t k);
inline constexpr std::size_t kExactBinomialLimit = 64;

// C(s,j)/C(m,j) as a reduced fraction; requires m <= kExactBinomialLimit.
Rational relevant_match_ratio(std::size_t s, std::size_t j, std::size_t m);

// C(s,j)/C(m,j); exact rational up to m = 64, log-gamma beyond.
double relevant_match_probability(std::size_t s, std::size_t j, std::size_t m);

struct RankedSource {
  const Instance* source = nullptr;
  MatchCounts counts;
  double probability = 0.0;
};

// Sorted by probability descending, then id. A candidate sharing fewer
// than j aspects with the target scores 0.
std::vector<RankedSource> rank_sources(const Instance& target, std::span<const Instance> candidates,
                                       std::size_t relevant);

}  // namespace analogy
