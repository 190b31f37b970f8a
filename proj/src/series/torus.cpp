#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/series_ops.hpp"

namespace bohr {

namespace {

constexpr double kTorusSlack = 1e-9;
constexpr double kMaxTorusWork = 2.0e9;

}  // namespace

TorusReport torus_bound_check(const CoefficientSeries& series, double radius, std::uint32_t samples_per_axis) {
  if (samples_per_axis < 8) throw DomainError("torus_bound_check: need at least 8 samples per axis");
  if (!(radius >= 0.0)) throw DomainError("torus_bound_check: radius must be nonnegative");

  const std::size_t n = series.dimension();
  const std::uint32_t K = series.truncation_degree();
  const double points = std::pow(static_cast<double>(samples_per_axis), static_cast<double>(n));
  if (points * static_cast<double>(series.term_count()) > kMaxTorusWork) {
    throw BudgetError(fmt::format("torus_bound_check: {} points x {} terms exceeds the work budget", points,
                                  series.term_count()));
  }

  // powers[j][e] = (radius * exp(2 pi i j / m))^e, shared by every axis.
  std::vector<std::vector<Complex>> powers(samples_per_axis, std::vector<Complex>(K + 1, 1.0));
  for (std::uint32_t j = 0; j < samples_per_axis; ++j) {
    const Complex z = std::polar(radius, 2.0 * std::numbers::pi * j / samples_per_axis);
    for (std::uint32_t e = 1; e <= K; ++e) powers[j][e] = powers[j][e - 1] * z;
  }

  TorusReport report;
  std::vector<std::uint32_t> sample(n, 0);
  std::vector<std::uint32_t> best(n, 0);
  for (;;) {
    Complex value = 0.0;
    for (std::uint32_t k = 0; k <= K; ++k) {
      for (const auto& term : series.slice(k)) {
        Complex m = term.value;
        for (std::size_t i = 0; i < n; ++i) m *= powers[sample[i]][term.index[i]];
        value += m;
      }
    }
    if (const double modulus = std::abs(value); modulus > report.sup_modulus) {
      report.sup_modulus = modulus;
      best = sample;
    }
    std::size_t axis = 0;
    while (axis < n && ++sample[axis] == samples_per_axis) sample[axis++] = 0;
    if (axis == n) break;
  }

  for (std::uint32_t j : best) {
    report.witness.push_back(std::polar(radius, 2.0 * std::numbers::pi * j / samples_per_axis));
  }
  if (const auto& cert = series.tail_certificate(); cert && cert->radius >= radius) {
    report.tail = cert->majorant;
    report.certified = true;
  }
  report.ok = report.sup_modulus + report.tail.value_or(0.0) <= 1.0 + kTorusSlack;
  return report;
}

TorusReport torus_bound_check(const FamilySpec& family, double radius, std::uint32_t samples_per_axis) {
  if (!(radius <= family.domain_radius_cap())) {
    throw DomainError(fmt::format("torus radius {} exceeds the domain cap {} of {}", radius,
                                  family.domain_radius_cap(), family.describe()));
  }
  const auto K = truncation_degree(family, radius);
  return torus_bound_check(expand(family, K, radius), radius, samples_per_axis);
}

}  // namespace bohr
