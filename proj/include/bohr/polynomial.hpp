#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace bohr {

/// Real polynomial with coefficients in ascending degree.
class PolynomialR {
 public:
  PolynomialR() = default;
  PolynomialR(std::initializer_list<double> ascending) : coefficients_(ascending) {}
  explicit PolynomialR(std::vector<double> ascending) : coefficients_(std::move(ascending)) {}

  std::span<const double> coefficients() const noexcept { return coefficients_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

  /// Horner evaluation.
  double operator()(double x) const noexcept;
  PolynomialR derivative() const;

 private:
  std::vector<double> coefficients_;
};

/// -405 + 473 t + 402 t^2 + 38 t^3 + 3 t^4 + t^5
const PolynomialR& psi1();
/// -513 + 910 t + 80 t^2 + 2 t^3 + t^4
const PolynomialR& psi2();

/// Root of `poly` in [lo, hi] with |x - root| <= tol.
///
/// Bisection narrows the bracket to width 1e-6, Newton steps polish inside
/// the bracket, and bisection resumes whenever a step would leave it. The
/// final bracket [x - tol, x + tol] is checked for a sign change.
///
/// Throws BracketError when poly(lo) * poly(hi) >= 0 and NonUniqueRootError
/// when a 1e4-point grid shows more than one sign change.
double solve_unique_root(const PolynomialR& poly, double lo, double hi, double tol);

}  // namespace bohr
