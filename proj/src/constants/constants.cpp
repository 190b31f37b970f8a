#include "bohr/constants.hpp"

#include <cmath>

#include <fmt/format.h>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kPoleGuard = 1e-9;
constexpr double kRootTolerance = 1e-13;

// Published decimals.
constexpr double kPublishedAStar1 = 0.567284;
constexpr double kPublishedAStar2 = 0.537869;
constexpr double kPublishedLambda1 = 18.6095;
constexpr double kPublishedLambda2 = 16.4618;
constexpr double kPublishedRadiusE = 0.236068;

void check_unit_interval(double t, const char* what) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError(fmt::format("{}: argument {} outside [0,1]", what, t));
}

double horner(std::initializer_list<double> ascending, double t) {
  double acc = 0.0;
  for (auto it = std::rbegin(ascending); it != std::rend(ascending); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

double lambda1_of(double a) {
  check_unit_interval(a, "lambda1_of");
  if (std::abs(a - 0.6) <= kPoleGuard) throw SingularityError(fmt::format("lambda1_of: a = {} at the pole 3/5", a));
  const double num = 4.0 * horner({486.0, -261.0, -324.0, 2.0, 30.0, 3.0}, a);
  const double den = 81.0 * std::pow(1.0 + a, 3) * (3.0 - 5.0 * a);
  return num / den;
}

double lambda2_of(double a) {
  check_unit_interval(a, "lambda2_of");
  if (std::abs(a - 0.5) <= kPoleGuard) throw SingularityError(fmt::format("lambda2_of: a = {} at the pole 1/2", a));
  const double num = horner({-81.0, 1044.0, 54.0, -116.0, -5.0}, a);
  const double den = 162.0 * (a + 1.0) * (a + 1.0) * (2.0 * a - 1.0);
  return num / den;
}

double phi1(double t, double lambda) {
  check_unit_interval(t, "phi1");
  return horner({3078.0, 1944.0, -522.0, -432.0, 2.0, 24.0, 2.0}, t) +
         lambda * horner({-81.0, -243.0, -162.0, 162.0, 243.0, 81.0}, t);
}

double phi2(double t, double lambda) {
  check_unit_interval(t, "phi2");
  return horner({2349.0, 81.0, -522.0, -18.0, 29.0, 1.0}, t) + lambda * horner({-81.0, -162.0, 0.0, 162.0, 81.0}, t);
}

double big_f(double a) {
  check_unit_interval(a, "big_f");
  const double s5 = std::sqrt(5.0);
  const double quadratic = 7.0 * (-9.0 + 4.0 * s5) + 4.0 * (-47.0 + 21.0 * s5) * a + (-161.0 + 72.0 * s5) * a * a;
  const double d = (4.0 * s5 - 9.0) * a * a + 1.0;
  return std::pow(1.0 - a, 3) * quadratic / (d * d);
}

namespace {

// Shared tail of both small-|a_0| bounds at r = 1/3.
double case2_common(double a, double lambda) {
  const double w = 1.0 - a * a;
  const double q = 9.0 - a * a;
  return std::sqrt(w) / std::sqrt(8.0) + 16.0 * w * w / (q * q) + 81.0 * lambda * std::pow(w, 4) / std::pow(q, 4);
}

}  // namespace

double case2_bound_c(double a, double lambda1) {
  check_unit_interval(a, "case2_bound_c");
  return a + case2_common(a, lambda1);
}

double case2_bound_d(double a, double lambda2) {
  check_unit_interval(a, "case2_bound_d");
  const double head = (1.0 + 3.0 * a) / (3.0 + a);
  return head * head + case2_common(a, lambda2);
}

double sharp_p() { return 2.0 * (std::sqrt(5.0) - 1.0); }
double radius_e() { return std::sqrt(5.0) - 2.0; }

double Residual::residual() const { return std::abs(computed - reference); }

double Radii::multi(std::size_t n) const {
  if (n == 0) throw DomainError("dimension must be at least 1");
  return 1.0 / (3.0 * static_cast<double>(n));
}

double Radii::multi_e(std::size_t n) const {
  if (n == 0) throw DomainError("dimension must be at least 1");
  return radius_e() / static_cast<double>(n);
}

bool ConstantsReport::within_tolerance() const { return !first_breach().has_value(); }

std::optional<Residual> ConstantsReport::first_breach() const {
  for (const auto& r : residuals) {
    if (!r.ok()) return r;
  }
  return std::nullopt;
}

ConstantsReport constants_report(const ResidualTolerances& tolerances) {
  ConstantsReport report;
  report.a_star1 = solve_unique_root(psi1(), 0.0, 1.0, kRootTolerance);
  report.a_star2 = solve_unique_root(psi2(), 0.0, 1.0, kRootTolerance);
  report.lambda1 = lambda1_of(report.a_star1);
  report.lambda2 = lambda2_of(report.a_star2);
  report.p = sharp_p();
  report.radii.thm_e = radius_e();

  report.residuals = {
      {"aStar1", report.a_star1, kPublishedAStar1, tolerances.root},
      {"aStar2", report.a_star2, kPublishedAStar2, tolerances.root},
      {"lambda1", report.lambda1, kPublishedLambda1, tolerances.lambda},
      {"lambda2", report.lambda2, kPublishedLambda2, tolerances.lambda},
      {"p", report.p, 2.4721359550, tolerances.p},
      {"thmE", report.radii.thm_e, kPublishedRadiusE, tolerances.radius},
  };
  return report;
}

}  // namespace bohr
