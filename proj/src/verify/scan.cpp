#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/tools/minima.hpp>
#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/verify.hpp"

namespace bohr {

PerturbationTarget resolve_target(const FunctionalSpec& spec, PerturbationTarget target) {
  if (target != PerturbationTarget::automatic) return target;
  if (spec.area_squared_weight != 0.0) return PerturbationTarget::area_squared;
  if (spec.extra_area_weight != 0.0) return PerturbationTarget::extra_area;
  return PerturbationTarget::area;
}

FunctionalSpec perturbed(const FunctionalSpec& spec, PerturbationTarget target, double epsilon) {
  FunctionalSpec out = spec;
  switch (resolve_target(spec, target)) {
    case PerturbationTarget::area_squared:
      out.area_squared_weight += epsilon;
      break;
    case PerturbationTarget::extra_area:
      out.extra_area_weight += epsilon;
      break;
    default:
      out.area_weight += epsilon;
      break;
  }
  return out;
}

ScanReport sharpness_scan(const FunctionalSpec& spec, const FamilyTemplate& family, const std::vector<double>& a_grid,
                          double bold_r, double epsilon, PerturbationTarget target) {
  if (a_grid.empty()) throw DomainError("sharpness_scan: empty a-grid");
  for (double a : a_grid) {
    if (!(a >= 0.0 && a < 1.0)) throw DomainError(fmt::format("sharpness_scan: grid value {} outside [0,1)", a));
  }
  if (!(epsilon >= 0.0)) throw DomainError("sharpness_scan: epsilon must be nonnegative");

  const auto radius = RadiusSpec::diagonal(family.n, bold_r);
  const auto shifted = perturbed(spec, target, epsilon);
  auto total = [&](const FunctionalSpec& s, double a) { return evaluate(s, family.at(a), radius).total; };

  ScanReport report;
  report.epsilon = epsilon;
  report.target = resolve_target(spec, target);
  report.perturbed_max = -std::numeric_limits<double>::infinity();
  std::vector<double> totals(a_grid.size());
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    totals[i] = total(spec, a_grid[i]);
    report.perturbed_max = std::max(report.perturbed_max, total(shifted, a_grid[i]));
  }

  // Refine every local maximum of the grid: near-tangent maxima can hide
  // below the endpoint values at the grid resolution.
  report.refined_max_total = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    const bool left = i == 0 || totals[i] >= totals[i - 1];
    const bool right = i + 1 == a_grid.size() || totals[i] >= totals[i + 1];
    if (!left || !right) continue;
    double best_a = a_grid[i];
    double best = totals[i];
    const double lo = a_grid[i == 0 ? 0 : i - 1];
    const double hi = a_grid[i + 1 == a_grid.size() ? i : i + 1];
    if (hi > lo) {
      const auto [a, neg] = boost::math::tools::brent_find_minima([&](double x) { return -total(spec, x); }, lo, hi,
                                                                  std::numeric_limits<double>::digits);
      if (-neg > best) {
        best_a = a;
        best = -neg;
      }
    }
    if (best > report.refined_max_total) {
      report.refined_max_total = best;
      report.refined_argmax_a = best_a;
      report.argmax_a = a_grid[i];
      report.max_total = totals[i];
    }
  }
  report.perturbed_at_argmax = total(shifted, report.refined_argmax_a);
  return report;
}

}  // namespace bohr
