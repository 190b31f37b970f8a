#include "bohr/coefficient_series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

// powers[i][e] = radius[i]^e for e <= k
std::vector<std::vector<double>> power_table(std::span<const double> radius, std::uint32_t k) {
  std::vector<std::vector<double>> table(radius.size(), std::vector<double>(k + 1, 1.0));
  for (std::size_t i = 0; i < radius.size(); ++i) {
    for (std::uint32_t e = 1; e <= k; ++e) table[i][e] = table[i][e - 1] * radius[i];
  }
  return table;
}

double monomial(const MultiIndex& index, const std::vector<std::vector<double>>& powers) {
  double m = 1.0;
  for (std::size_t i = 0; i < index.dimension(); ++i) m *= powers[i][index[i]];
  return m;
}

}  // namespace

CoefficientSeries::CoefficientSeries(std::size_t dimension, std::uint32_t max_degree)
    : dimension_(dimension), max_degree_(max_degree), slices_(max_degree + 1) {
  if (dimension == 0) throw DomainError("CoefficientSeries: dimension must be at least 1");
}

std::size_t CoefficientSeries::term_count() const noexcept {
  std::size_t count = 0;
  for (const auto& s : slices_) count += s.size();
  return count;
}

void CoefficientSeries::set(const MultiIndex& index, Complex value) {
  if (index.dimension() != dimension_) {
    throw DomainError("CoefficientSeries::set: index " + index.to_string() + " has wrong dimension");
  }
  if (index.degree() > max_degree_) {
    throw DomainError("CoefficientSeries::set: index " + index.to_string() +
                      " exceeds truncation degree " + std::to_string(max_degree_));
  }
  auto& slice = slices_[index.degree()];
  // Appending in canonical order is the common case.
  if (slice.empty() || slice.back().index < index) {
    slice.push_back({index, value});
    return;
  }
  auto it = std::lower_bound(slice.begin(), slice.end(), index,
                             [](const SeriesTerm& t, const MultiIndex& m) { return t.index < m; });
  if (it != slice.end() && it->index == index) {
    it->value = value;
  } else {
    slice.insert(it, {index, value});
  }
}

Complex CoefficientSeries::coefficient(const MultiIndex& index) const {
  if (index.dimension() != dimension_ || index.degree() > max_degree_) return {};
  const auto& slice = slices_[index.degree()];
  auto it = std::lower_bound(slice.begin(), slice.end(), index,
                             [](const SeriesTerm& t, const MultiIndex& m) { return t.index < m; });
  if (it != slice.end() && it->index == index) return it->value;
  return {};
}

Complex CoefficientSeries::constant_term() const { return coefficient(MultiIndex::zero(dimension_)); }

std::span<const SeriesTerm> CoefficientSeries::slice(std::uint32_t k) const {
  if (k > max_degree_) return {};
  return slices_[k];
}

void CoefficientSeries::check_radius(std::span<const double> radius) const {
  if (radius.size() != dimension_) throw DomainError("CoefficientSeries: radius vector has wrong length");
  for (double r : radius) {
    if (!(r >= 0.0)) throw DomainError("CoefficientSeries: radius coordinates must be nonnegative");
  }
}

double CoefficientSeries::homogeneous_abs_sum(std::uint32_t k, std::span<const double> radius) const {
  check_radius(radius);
  if (k > max_degree_) return 0.0;
  const auto powers = power_table(radius, k);
  double sum = 0.0;
  for (const auto& term : slices_[k]) sum += std::abs(term.value) * monomial(term.index, powers);
  return sum;
}

double CoefficientSeries::homogeneous_sq_sum(std::uint32_t k, std::span<const double> radius) const {
  check_radius(radius);
  if (k > max_degree_) return 0.0;
  const auto powers = power_table(radius, k);
  double sum = 0.0;
  for (const auto& term : slices_[k]) {
    const double m = monomial(term.index, powers);
    sum += std::norm(term.value) * m * m;
  }
  return sum;
}

Complex CoefficientSeries::evaluate(std::span<const Complex> z) const {
  if (z.size() != dimension_) throw DomainError("CoefficientSeries::evaluate: point has wrong length");
  std::vector<std::vector<Complex>> powers(dimension_, std::vector<Complex>(max_degree_ + 1, 1.0));
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::uint32_t e = 1; e <= max_degree_; ++e) powers[i][e] = powers[i][e - 1] * z[i];
  }
  Complex sum = 0.0;
  for (const auto& slice : slices_) {
    for (const auto& term : slice) {
      Complex m = term.value;
      for (std::size_t i = 0; i < dimension_; ++i) m *= powers[i][term.index[i]];
      sum += m;
    }
  }
  return sum;
}

void CoefficientSeries::set_tail_certificate(TailCertificate certificate) {
  if (!(certificate.majorant >= 0.0) || !(certificate.area >= 0.0) || !(certificate.radius >= 0.0)) {
    throw DomainError("CoefficientSeries: tail certificate must be nonnegative");
  }
  tail_ = certificate;
}

}  // namespace bohr
