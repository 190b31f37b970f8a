#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bohr/polynomial.hpp"

namespace bohr {

/// Sharp coefficient of the squared area term when |a_0| = a; pole at a = 3/5.
double lambda1_of(double a);
/// Same for the |f|^2-headed functional; pole at a = 1/2.
double lambda2_of(double a);

/// Coefficient polynomial whose nonnegativity on [1/3, 1] certifies the
/// constant-term functional: total = 1 - (1-t)^3 phi1(t) / (9 - t^2)^4.
double phi1(double t, double lambda);
/// Same for the |f|^2 head: total = 1 - (1-t)^3 (1+t) phi2(t) / (9 - t^2)^4.
double phi2(double t, double lambda);
/// Excess over 1 of the |f|-headed functional at n r = sqrt(5) - 2; carries (1-a)^3.
double big_f(double a);

/// Upper bound of the constant-term functional when |a_0| < r (first branch
/// of the sub-radius estimate replaced by the square-root one).
double case2_bound_c(double a, double lambda1);
/// Same with the |f|^2 head ((1 + 3a)/(3 + a))^2.
double case2_bound_d(double a, double lambda2);

/// p = 2 (sqrt(5) - 1)
double sharp_p();
/// sqrt(5) - 2
double radius_e();

struct Residual {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  double residual() const;
  bool ok() const { return residual() <= tolerance; }
};

struct Radii {
  double classic = 1.0 / 3.0;
  double thm_e = 0.0;
  /// 1 / (3n)
  double multi(std::size_t n) const;
  /// (sqrt(5) - 2) / n
  double multi_e(std::size_t n) const;
};

struct ConstantsReport {
  double a_star1 = 0.0;
  double a_star2 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double p = 0.0;
  Radii radii;
  std::vector<Residual> residuals;

  bool within_tolerance() const;
  /// First residual outside tolerance, if any.
  std::optional<Residual> first_breach() const;
};

/// Tolerances applied to the published decimals.
struct ResidualTolerances {
  double root = 1e-6;
  double lambda = 1e-3;
  double p = 1e-9;
  double radius = 1e-6;
};

/// Computes every constant from the root of psi1 / psi2 and the closed forms,
/// then compares with the published decimals.
ConstantsReport constants_report(const ResidualTolerances& tolerances = {});

}  // namespace bohr
