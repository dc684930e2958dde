#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace analogy {

// pi^2/6 and pi/4 to 36 digits, evaluated once with an arbitrary-precision
// package (mpmath, 60 digits) and rounded. Kept as literals so checks do not
// depend on the series they are checking.
inline constexpr double kPiSquaredOverSix = 1.644934066848226436472415166646025189;
inline constexpr double kPiOverFour = 0.785398163397448309615660845819875721;

enum class SeriesId { Basel, Leibniz, Grandi };

std::string_view to_string(SeriesId s);
SeriesId parse_series(std::string_view s);

// k-th term, k >= 1: 1/k^2, (-1)^(k-1)/(2k-1), (-1)^(k-1).
double series_term(SeriesId s, std::size_t k);

// Sum of the first n terms, added smallest magnitude first.
double partial_sum(SeriesId s, std::size_t n);

struct BaselCheck {
  std::size_t n = 0;
  double partial = 0.0;
  double residual = 0.0;  // pi^2/6 - S_n
  double lower = 0.0;     // 1/(n+1)
  double upper = 0.0;     // 1/n
  bool within_bounds() const { return lower < residual && residual < upper; }
};

BaselCheck basel_limit_check(std::size_t n);

double sin_via_series(double x, std::size_t terms);
// prod_{k=1..K} (1 - x^2/(k^2 pi^2))
double sin_product_factor(double x, std::size_t factors);
// x * sin_product_factor(x, K)
double sin_via_product(double x, std::size_t factors);
// prod_{k=1..K} (1 - x^2/((k-1/2)^2 pi^2))
double cos_via_product(double x, std::size_t factors);

// |1/6 - sum_{k=1..K} 1/(k^2 pi^2)|
double coefficient_identity_residual(std::size_t factors);

struct CorroborationReport {
  std::string check;
  std::size_t truncation = 0;
  std::vector<double> grid;
  double max_residual = 0.0;
  double tolerance = 0.0;
  // Strict lower bound on the residual; only the tail-bound check sets it.
  double floor = -1.0;
  bool passed() const { return max_residual > floor && max_residual <= tolerance; }
};

struct C1Tolerances {
  double oddness = 1e-12;
  double shift = 1e-3;
  double double_angle = 1e-3;
};

// Checks the product form against sin(-x) = -sin x, sin(x+pi) = -sin x and
// sin x = 2 sin(x/2) cos(x/2).
std::vector<CorroborationReport> polya_c1_checks(std::size_t factors, std::span<const double> grid,
                                                 const C1Tolerances& tol = {});

struct LeibnizCorroboration {
  std::size_t n = 0;
  std::size_t iterations = 0;
  double accelerated = 0.0;
  double residual = 0.0;  // |accelerated - pi/4|
};

// Starts from S_{n-iterations} .. S_n and averages neighbours `iterations`
// times.
LeibnizCorroboration leibniz_corroboration(std::size_t n, std::size_t iterations = 4);

struct GroupingScheme {
  std::vector<std::size_t> prefix;
  std::size_t tail = 1;

  std::size_t block_length(std::size_t block) const {
    return block < prefix.size() ? prefix[block] : tail;
  }
};

struct RegroupResult {
  std::vector<double> block_sums;
  std::vector<double> running_sums;
  bool stabilized = false;
  double value = 0.0;  // meaningful when stabilized
};

inline constexpr std::size_t kDefaultHorizon = 1000;

// Sums consecutive blocks of the series. Stabilized means the running block
// sums are constant over the last half of the horizon.
RegroupResult regroup_series(SeriesId s, const GroupingScheme& scheme, std::size_t blocks = kDefaultHorizon);

struct EulerSettings {
  std::size_t n = 10000;                // basel and leibniz truncation
  std::size_t factors = 10000;          // K for the coefficient identity and C1
  std::size_t product_factors = 100000; // K for the product-vs-sine check
  std::vector<double> grid{0.1, 0.5, 1.0, 1.5};
  std::size_t leibniz_iterations = 4;
  double product_tolerance = 1e-5;      // relative, at x = pi/2
  double coefficient_slack = 1.1;       // times the tail bound 1/(pi^2 K)
  double leibniz_tolerance = 1e-8;
  C1Tolerances c1;
};

CorroborationReport basel_report(const EulerSettings& s);
CorroborationReport product_report(const EulerSettings& s);
CorroborationReport coefficient_report(const EulerSettings& s);
CorroborationReport leibniz_report(const EulerSettings& s);

// Named groups of reports: basel, product, coefficient, c1, c2.
std::vector<std::string> corroboration_check_names();
std::vector<CorroborationReport> run_corroboration_check(std::string_view name, const EulerSettings& s);

// Every group in order.
std::vector<CorroborationReport> euler_reports(const EulerSettings& s);

struct FiniteRegroup {
  double regrouped = 0.0;
  double plain = 0.0;
};

FiniteRegroup finite_regroup_control(std::span<const double> terms, std::span<const std::size_t> blocks);

}  // namespace analogy
