#include "bohr/polynomial.hpp"

#include <cmath>

#include <fmt/format.h>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr int kUniquenessGrid = 10000;
constexpr double kPolishWidth = 1e-6;
constexpr int kMaxNewtonSteps = 60;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int count_sign_changes(const PolynomialR& poly, double lo, double hi) {
  int changes = 0;
  int previous = sign_of(poly(lo));
  for (int i = 1; i <= kUniquenessGrid; ++i) {
    const double x = lo + (hi - lo) * i / kUniquenessGrid;
    const int s = sign_of(poly(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

}  // namespace

double PolynomialR::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolynomialR PolynomialR::derivative() const {
  if (coefficients_.size() <= 1) return PolynomialR{0.0};
  std::vector<double> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = static_cast<double>(k) * coefficients_[k];
  return PolynomialR(std::move(d));
}

const PolynomialR& psi1() {
  static const PolynomialR p{-405.0, 473.0, 402.0, 38.0, 3.0, 1.0};
  return p;
}

const PolynomialR& psi2() {
  static const PolynomialR p{-513.0, 910.0, 80.0, 2.0, 1.0};
  return p;
}

double solve_unique_root(const PolynomialR& poly, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw DomainError("solve_unique_root: tolerance must be positive");
  if (!(lo < hi)) throw DomainError("solve_unique_root: need lo < hi");
  double f_lo = poly(lo);
  const double f_hi = poly(hi);
  if (!(f_lo * f_hi < 0.0)) {
    throw BracketError(fmt::format("no sign change on [{}, {}]: p(lo) = {}, p(hi) = {}", lo, hi, f_lo, f_hi));
  }
  if (const int changes = count_sign_changes(poly, lo, hi); changes > 1) {
    throw NonUniqueRootError(fmt::format("{} sign changes on [{}, {}]", changes, lo, hi));
  }

  auto bisect_once = [&] {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = poly(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
    } else if (sign_of(f_mid) == sign_of(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  };

  while (hi - lo > kPolishWidth) bisect_once();

  const PolynomialR slope = poly.derivative();
  double x = 0.5 * (lo + hi);
  for (int step = 0; step < kMaxNewtonSteps && hi - lo > 2.0 * tol; ++step) {
    const double fx = poly(x);
    if (fx == 0.0) return x;
    // Keep the bracket current so a rejected step loses nothing.
    if (sign_of(fx) == sign_of(f_lo)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
    }
    const double d = slope(x);
    const double next = d != 0.0 ? x - fx / d : lo - 1.0;
    if (next <= lo || next >= hi) {
      bisect_once();
      x = 0.5 * (lo + hi);
      continue;
    }
    if (std::abs(next - x) <= 0.25 * tol) {
      x = next;
      break;
    }
    x = next;
  }

  // Certify: a sign change within tol of x, else finish by bisection.
  auto certified = [&](double c) {
    const double left = poly(c - tol);
    const double right = poly(c + tol);
    return poly(c) == 0.0 || sign_of(left) != sign_of(right);
  };
  if (certified(x)) return x;
  while (hi - lo > 2.0 * tol) bisect_once();
  return 0.5 * (lo + hi);
}

}  // namespace bohr
