#include <cmath>

#include "bohr/errors.hpp"
#include "bohr/series_ops.hpp"

namespace bohr {

namespace {

// sum_{k>K} k x^{k-1}
double shifted_derivative_tail(double x, std::uint32_t max_degree) {
  const double K = max_degree;
  return std::pow(x, K) * ((K + 1.0) - K * x) / ((1.0 - x) * (1.0 - x));
}

// Taylor coefficients of (z - w) / (1 - conj(w) z) up to degree K.
std::vector<Complex> blaschke_factor(Complex w, std::uint32_t max_degree) {
  std::vector<Complex> c(max_degree + 1);
  c[0] = -w;
  const Complex wbar = std::conj(w);
  Complex power = 1.0;
  for (std::uint32_t k = 1; k <= max_degree; ++k) {
    c[k] = (1.0 - std::norm(w)) * power;
    power *= wbar;
  }
  return c;
}

}  // namespace

std::optional<TailCertificate> family_tail(const FamilySpec& family, std::uint32_t max_degree, double radius) {
  if (!(radius >= 0.0)) throw DomainError("tail radius must be nonnegative");
  const double K = max_degree;
  if (family.is_moebius_type()) {
    const double a = family.moebius_parameter();
    const double rho = radius * static_cast<double>(family.dimension()) * family.slice_scale();
    if (!(a * rho < 1.0)) return std::nullopt;
    const double w = 1.0 - a * a;
    const double majorant = w * std::pow(a, K) * std::pow(rho, K + 1.0) / (1.0 - a * rho);
    const double area = w * w * rho * rho * shifted_derivative_tail(a * a * rho * rho, max_degree);
    return TailCertificate{radius, majorant, area};
  }
  if (family.kind() == FamilyKind::constant) return TailCertificate{radius, 0.0, 0.0};

  // Blaschke products are bounded by 1, so |c_m| <= 1 - |c_0|^2 for m >= 1.
  if (!(radius < 1.0)) return std::nullopt;
  const double w = 1.0 - std::norm(family.constant_term());
  const double majorant = w * std::pow(radius, K + 1.0) / (1.0 - radius);
  const double area = w * w * radius * radius * shifted_derivative_tail(radius * radius, max_degree);
  return TailCertificate{radius, majorant, area};
}

std::uint32_t truncation_degree(const FamilySpec& family, double radius) {
  for (std::uint32_t k = 0; k < kMaxTruncationDegree; ++k) {
    const auto tail = family_tail(family, k, radius);
    if (!tail) return kMaxTruncationDegree;
    if (tail->majorant < kTailTarget && tail->area < kTailTarget) return k;
  }
  return kMaxTruncationDegree;
}

CoefficientSeries expand(const FamilySpec& family, std::uint32_t max_degree,
                         std::optional<double> certificate_radius) {
  const std::size_t n = family.dimension();
  CoefficientSeries series(n, max_degree);

  if (family.is_moebius_type()) {
    const double a = family.moebius_parameter();
    const double scale = family.slice_scale();
    series.set(MultiIndex::zero(n), a);
    // f = a - (1 - a^2) sum_k a^{k-1} (scale * s)^k, expanded multinomially.
    double slice_coefficient = -(1.0 - a * a) * scale;
    for (std::uint32_t k = 1; k <= max_degree; ++k) {
      for (const auto& alpha : multi_indices_of_degree(n, k)) {
        series.set(alpha, slice_coefficient * alpha.multinomial());
      }
      slice_coefficient *= a * scale;
    }
  } else if (const auto* c = std::get_if<ConstantFn>(&family.variant())) {
    series.set(MultiIndex::zero(n), c->c);
  } else {
    const auto& zeros = std::get<FiniteBlaschke>(family.variant()).zeros;
    std::vector<Complex> product(max_degree + 1, 0.0);
    product[0] = 1.0;
    for (const auto& w : zeros) {
      const auto factor = blaschke_factor(w, max_degree);
      std::vector<Complex> next(max_degree + 1, 0.0);
      for (std::uint32_t i = 0; i <= max_degree; ++i) {
        for (std::uint32_t j = 0; i + j <= max_degree; ++j) next[i + j] += product[i] * factor[j];
      }
      product = std::move(next);
    }
    for (std::uint32_t k = 0; k <= max_degree; ++k) series.set(MultiIndex{k}, product[k]);
  }

  if (certificate_radius) {
    if (auto tail = family_tail(family, max_degree, *certificate_radius)) series.set_tail_certificate(*tail);
  }
  return series;
}

SliceSeries slice_coefficients(const FamilySpec& family, std::uint32_t max_degree) {
  SliceSeries slice;
  if (family.is_moebius_type()) {
    slice.moebius_a = family.moebius_parameter();
    slice.scale = family.slice_scale();
    slice.coefficients.reserve(max_degree + 1);
    for (std::uint32_t k = 0; k <= max_degree; ++k) slice.coefficients.push_back(slice.b(k));
    return slice;
  }
  if (const auto* c = std::get_if<ConstantFn>(&family.variant())) {
    slice.coefficients.assign(max_degree + 1, 0.0);
    slice.coefficients[0] = c->c;
    return slice;
  }
  return slice_coefficients(expand(family, max_degree));
}

SliceSeries slice_coefficients(const CoefficientSeries& series) {
  if (series.dimension() != 1) {
    throw UnsupportedError("slice_coefficients: multivariate series without diagonal structure");
  }
  SliceSeries slice;
  slice.coefficients.reserve(series.truncation_degree() + 1);
  for (std::uint32_t k = 0; k <= series.truncation_degree(); ++k) {
    slice.coefficients.push_back(series.coefficient(MultiIndex{k}));
  }
  return slice;
}

Complex SliceSeries::b(std::uint32_t k) const {
  if (moebius_a) {
    const double a = *moebius_a;
    if (k == 0) return a;
    return -(1.0 - a * a) * std::pow(a, k - 1.0) * std::pow(scale, static_cast<double>(k));
  }
  return k < coefficients.size() ? coefficients[k] : Complex{};
}

}  // namespace bohr
