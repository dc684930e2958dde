#include "analogy/case_studies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "analogy/error.hpp"

namespace analogy {

using std::numbers::pi;

std::string_view to_string(SeriesId s) {
  switch (s) {
    case SeriesId::Basel: return "basel";
    case SeriesId::Leibniz: return "leibniz";
    case SeriesId::Grandi: return "grandi";
  }
  return "basel";
}

SeriesId parse_series(std::string_view s) {
  if (s == "basel") return SeriesId::Basel;
  if (s == "leibniz") return SeriesId::Leibniz;
  if (s == "grandi") return SeriesId::Grandi;
  throw AnalogyError(ErrorKind::Domain, std::string(s), "unknown series '" + std::string(s) + "'");
}

double series_term(SeriesId s, std::size_t k) {
  if (k == 0) throw AnalogyError(ErrorKind::Domain, "k", "term index starts at 1");
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  const double kd = static_cast<double>(k);
  switch (s) {
    case SeriesId::Basel: return 1.0 / (kd * kd);
    case SeriesId::Leibniz: return sign / (2.0 * kd - 1.0);
    case SeriesId::Grandi: return sign;
  }
  return 0.0;
}

double partial_sum(SeriesId s, std::size_t n) {
  if (n == 0) throw AnalogyError(ErrorKind::Domain, "n", "partial sum needs n >= 1");
  // Term magnitudes are nonincreasing in k for all three series.
  double sum = 0.0;
  for (std::size_t k = n; k >= 1; --k) sum += series_term(s, k);
  return sum;
}

BaselCheck basel_limit_check(std::size_t n) {
  if (n < 2) throw AnalogyError(ErrorKind::Domain, "n", "basel check needs n >= 2");
  BaselCheck out;
  out.n = n;
  out.partial = partial_sum(SeriesId::Basel, n);
  out.residual = kPiSquaredOverSix - out.partial;
  out.lower = 1.0 / static_cast<double>(n + 1);
  out.upper = 1.0 / static_cast<double>(n);
  return out;
}

double sin_via_series(double x, std::size_t terms) {
  if (terms == 0) throw AnalogyError(ErrorKind::Domain, "terms", "series needs at least one term");
  std::vector<double> t(terms);
  t[0] = x;
  const double x2 = x * x;
  for (std::size_t k = 1; k < terms; ++k) {
    const double a = static_cast<double>(2 * k);
    t[k] = -t[k - 1] * x2 / (a * (a + 1.0));
  }
  double sum = 0.0;
  for (std::size_t k = terms; k-- > 0;) sum += t[k];
  return sum;
}

double sin_product_factor(double x, std::size_t factors) {
  if (factors == 0) throw AnalogyError(ErrorKind::Domain, "K", "product needs at least one factor");
  const double r = (x * x) / (pi * pi);
  double p = 1.0;
  for (std::size_t k = 1; k <= factors; ++k) {
    const double kd = static_cast<double>(k);
    p *= 1.0 - r / (kd * kd);
  }
  return p;
}

double sin_via_product(double x, std::size_t factors) { return x * sin_product_factor(x, factors); }

double cos_via_product(double x, std::size_t factors) {
  if (factors == 0) throw AnalogyError(ErrorKind::Domain, "K", "product needs at least one factor");
  const double r = (x * x) / (pi * pi);
  double p = 1.0;
  for (std::size_t k = 1; k <= factors; ++k) {
    const double h = static_cast<double>(k) - 0.5;
    p *= 1.0 - r / (h * h);
  }
  return p;
}

double coefficient_identity_residual(std::size_t factors) {
  if (factors == 0) throw AnalogyError(ErrorKind::Domain, "K", "needs K >= 1");
  double sum = 0.0;
  for (std::size_t k = factors; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    sum += 1.0 / (kd * kd * pi * pi);
  }
  return std::abs(1.0 / 6.0 - sum);
}

std::vector<CorroborationReport> polya_c1_checks(std::size_t factors, std::span<const double> grid,
                                                 const C1Tolerances& tol) {
  if (factors == 0) throw AnalogyError(ErrorKind::Domain, "K", "needs K >= 1");
  if (grid.empty()) throw AnalogyError(ErrorKind::Domain, "grid", "evaluation grid is empty");
  for (double x : grid)
    if (!(std::abs(x) <= 2.0 * pi)) throw AnalogyError(ErrorKind::Domain, "grid", "grid points need |x| <= 2 pi");

  std::vector<double> g(grid.begin(), grid.end());
  CorroborationReport odd{"sin(-x) = -sin x", factors, g, 0.0, tol.oddness};
  CorroborationReport shift{"sin(x+pi) = -sin x", factors, g, 0.0, tol.shift};
  CorroborationReport doubled{"sin x = 2 sin(x/2) cos(x/2)", factors, g, 0.0, tol.double_angle};

  for (double x : grid) {
    const double p = sin_via_product(x, factors);
    odd.max_residual = std::max(odd.max_residual, std::abs(sin_via_product(-x, factors) + p));
    shift.max_residual = std::max(shift.max_residual, std::abs(sin_via_product(x + pi, factors) + p));
    const double half = 0.5 * x;
    doubled.max_residual = std::max(
        doubled.max_residual, std::abs(p - 2.0 * sin_via_product(half, factors) * cos_via_product(half, factors)));
  }
  return {odd, shift, doubled};
}

LeibnizCorroboration leibniz_corroboration(std::size_t n, std::size_t iterations) {
  if (n == 0) throw AnalogyError(ErrorKind::Domain, "n", "needs n >= 1");
  if (iterations >= n)
    throw AnalogyError(ErrorKind::Domain, "iterations", "acceleration needs iterations < n");

  std::vector<double> sums;
  sums.reserve(iterations + 1);
  sums.push_back(partial_sum(SeriesId::Leibniz, n - iterations));
  for (std::size_t k = n - iterations + 1; k <= n; ++k) sums.push_back(sums.back() + series_term(SeriesId::Leibniz, k));

  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t k = 0; k + 1 < sums.size(); ++k) sums[k] = 0.5 * (sums[k] + sums[k + 1]);
    sums.pop_back();
  }
  return {n, iterations, sums.front(), std::abs(sums.front() - kPiOverFour)};
}

RegroupResult regroup_series(SeriesId s, const GroupingScheme& scheme, std::size_t blocks) {
  if (blocks == 0) throw AnalogyError(ErrorKind::Domain, "blocks", "needs at least one block");
  if (scheme.tail == 0 ||
      std::any_of(scheme.prefix.begin(), scheme.prefix.end(), [](std::size_t b) { return b == 0; }))
    throw AnalogyError(ErrorKind::Domain, "scheme", "block lengths must be positive");

  RegroupResult out;
  out.block_sums.reserve(blocks);
  out.running_sums.reserve(blocks);
  std::size_t next = 1;
  double running = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    double block = 0.0;
    for (std::size_t len = scheme.block_length(b); len > 0; --len) block += series_term(s, next++);
    running += block;
    out.block_sums.push_back(block);
    out.running_sums.push_back(running);
  }

  const double last = out.running_sums.back();
  out.stabilized = std::all_of(out.running_sums.begin() + static_cast<std::ptrdiff_t>(blocks / 2),
                               out.running_sums.end(), [&](double v) { return v == last; });
  out.value = last;
  return out;
}

FiniteRegroup finite_regroup_control(std::span<const double> terms, std::span<const std::size_t> blocks) {
  std::size_t covered = 0;
  for (std::size_t b : blocks) {
    if (b == 0) throw AnalogyError(ErrorKind::SchemeMismatch, "blocks", "block lengths must be positive");
    covered += b;
  }
  if (covered != terms.size())
    throw AnalogyError(ErrorKind::SchemeMismatch, "blocks",
                       "scheme covers " + std::to_string(covered) + " terms, list has " +
                           std::to_string(terms.size()));

  FiniteRegroup out;
  for (double t : terms) out.plain += t;
  std::size_t pos = 0;
  for (std::size_t b : blocks) {
    double block = 0.0;
    for (std::size_t k = 0; k < b; ++k) block += terms[pos++];
    out.regrouped += block;
  }
  return out;
}

CorroborationReport basel_report(const EulerSettings& s) {
  auto b = basel_limit_check(s.n);
  return {"basel: pi^2/6 - S_n in (1/(n+1), 1/n)", s.n, {}, b.residual, b.upper, b.lower};
}

CorroborationReport product_report(const EulerSettings& s) {
  const double x = pi / 2.0;
  const double rel = std::abs(sin_via_product(x, s.product_factors) - 1.0);
  return {"product form at pi/2 vs sin(pi/2) = 1", s.product_factors, {x}, rel, s.product_tolerance};
}

CorroborationReport coefficient_report(const EulerSettings& s) {
  const double bound = s.coefficient_slack / (pi * pi * static_cast<double>(s.factors));
  return {"x^2 coefficient: 1/3! = sum 1/(k^2 pi^2)", s.factors, {}, coefficient_identity_residual(s.factors),
          bound};
}

CorroborationReport leibniz_report(const EulerSettings& s) {
  auto l = leibniz_corroboration(s.n, s.leibniz_iterations);
  return {"leibniz: accelerated sum vs pi/4", s.n, {}, l.residual, s.leibniz_tolerance};
}

std::vector<std::string> corroboration_check_names() { return {"basel", "product", "coefficient", "c1", "c2"}; }

std::vector<CorroborationReport> run_corroboration_check(std::string_view name, const EulerSettings& s) {
  if (name == "basel") return {basel_report(s)};
  if (name == "product") return {product_report(s)};
  if (name == "coefficient") return {coefficient_report(s)};
  if (name == "c1") return polya_c1_checks(s.factors, s.grid, s.c1);
  if (name == "c2") return {leibniz_report(s)};
  throw AnalogyError(ErrorKind::Specification, std::string(name),
                     "unknown corroboration check '" + std::string(name) + "'");
}

std::vector<CorroborationReport> euler_reports(const EulerSettings& s) {
  std::vector<CorroborationReport> out;
  for (const auto& name : corroboration_check_names()) {
    auto part = run_corroboration_check(name, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace analogy
