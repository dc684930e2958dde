#include "analogy/selection_probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace analogy {

double degree_of_similarity(std::size_t matched, std::size_t shared) {
  if (shared == 0) throw AnalogyError(ErrorKind::Domain, "m", "degree of similarity undefined for m = 0");
  if (matched > shared) throw AnalogyError(ErrorKind::Domain, "i", "matched count exceeds shared count");
  return static_cast<double>(matched) / static_cast<double>(shared);
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n > kExactBinomialLimit)
    throw AnalogyError(ErrorKind::Domain, "n", "exact binomial limited to n <= 64");
  k = std::min(k, n - k);
  // C(n, r) = C(n, r-1) * (n-r+1) / r; the gcd split keeps the product in range.
  std::uint64_t result = 1;
  for (std::size_t r = 1; r <= k; ++r) {
    std::uint64_t num = n - r + 1;
    std::uint64_t den = r;
    std::uint64_t g = std::gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    result *= num;
  }
  return result;
}

namespace {

void check_counts(std::size_t s, std::size_t j, std::size_t m) {
  if (m == 0) throw AnalogyError(ErrorKind::Domain, "m", "m must be at least 1");
  if (j > m) throw AnalogyError(ErrorKind::Domain, "j", "relevant count j exceeds m");
  if (s > m) throw AnalogyError(ErrorKind::Domain, "s", "matched count s exceeds m");
}

}  // namespace

Rational relevant_match_ratio(std::size_t s, std::size_t j, std::size_t m) {
  check_counts(s, j, m);
  if (m > kExactBinomialLimit) throw AnalogyError(ErrorKind::Domain, "m", "exact ratio limited to m <= 64");
  if (j > s) return {0, 1};
  std::uint64_t num = binomial(s, j);
  std::uint64_t den = binomial(m, j);
  std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

double relevant_match_probability(std::size_t s, std::size_t j, std::size_t m) {
  check_counts(s, j, m);
  if (j > s) return 0.0;
  if (m <= kExactBinomialLimit) return relevant_match_ratio(s, j, m).to_double();
  auto log_choose = [](double n, double k) {
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
  };
  return std::exp(log_choose(double(s), double(j)) - log_choose(double(m), double(j)));
}

std::vector<RankedSource> rank_sources(const Instance& target, std::span<const Instance> candidates,
                                       std::size_t relevant) {
  std::vector<RankedSource> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    RankedSource r{&c, instance_match_counts(target, c), 0.0};
    if (relevant <= r.counts.shared)
      r.probability = relevant_match_probability(r.counts.matched, relevant, r.counts.shared);
    out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedSource& a, const RankedSource& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.source->id < b.source->id;
  });
  return out;
}

}  // namespace analogy
