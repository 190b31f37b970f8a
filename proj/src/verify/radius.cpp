#include <array>
#include <cmath>

#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/verify.hpp"

namespace bohr {

namespace {

// Roundoff allowance when comparing neighbouring samples.
constexpr double kMonotoneSlack = 1e-12;

}  // namespace

RadiusResult radius_search(const FunctionalSpec& spec, const FamilySpec& family, double tol) {
  if (!(tol > 0.0)) throw DomainError("radius_search: tolerance must be positive");
  const std::size_t n = family.dimension();
  const double upper = family.domain_radius_cap() * (1.0 - 1e-9);

  RadiusResult result;
  result.certified = true;
  auto total_at = [&](double r) {
    const auto terms = evaluate(spec, family, RadiusSpec::diagonal(n, r));
    result.certified = result.certified && terms.certified;
    return terms.total;
  };

  std::array<double, kMonotonicitySamples> radius{};
  std::array<double, kMonotonicitySamples> total{};
  for (int i = 0; i < kMonotonicitySamples; ++i) {
    radius[i] = upper * i / (kMonotonicitySamples - 1);
    total[i] = total_at(radius[i]);
    if (i > 0 && total[i] < total[i - 1] - kMonotoneSlack) {
      throw MonotonicityError(fmt::format("{} on {} decreases between r = {:.12g} ({:.12g}) and r = {:.12g} ({:.12g})",
                                          spec.name, family.describe(), radius[i - 1], total[i - 1], radius[i],
                                          total[i]));
    }
  }

  if (total.back() <= 1.0) {
    result.radius = result.lo = result.hi = upper;
    result.binding = false;
    return result;
  }
  result.binding = true;
  if (total.front() > 1.0) {
    result.radius = result.lo = result.hi = 0.0;
    return result;
  }

  int last_ok = 0;
  while (total[last_ok + 1] <= 1.0) ++last_ok;
  double lo = radius[last_ok];
  double hi = radius[last_ok + 1];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (total_at(mid) <= 1.0 ? lo : hi) = mid;
    ++result.iterations;
  }
  result.lo = lo;
  result.hi = hi;
  result.radius = lo;
  return result;
}

}  // namespace bohr
