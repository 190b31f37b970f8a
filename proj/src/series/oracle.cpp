#include <map>

#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/series_ops.hpp"

namespace bohr {

namespace {

using Polynomial = std::map<MultiIndex, Complex>;

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [i, x] : p) {
    for (const auto& [j, y] : q) out[i + j] += x * y;
  }
  return out;
}

struct RationalForm {
  Polynomial numerator;
  Polynomial denominator;
};

RationalForm rational_form(const FamilySpec& family) {
  const std::size_t n = family.dimension();
  const MultiIndex origin = MultiIndex::zero(n);
  RationalForm form;
  if (family.is_moebius_type()) {
    // (a - c s) / (1 - a c s) with s = z_1 + ... + z_n
    const double a = family.moebius_parameter();
    const double c = family.slice_scale();
    form.numerator[origin] = a;
    form.denominator[origin] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      form.numerator[MultiIndex::unit(n, i)] = -c;
      form.denominator[MultiIndex::unit(n, i)] = -a * c;
    }
  } else if (const auto* f = std::get_if<ConstantFn>(&family.variant())) {
    form.numerator[origin] = f->c;
    form.denominator[origin] = 1.0;
  } else {
    form.numerator[origin] = 1.0;
    form.denominator[origin] = 1.0;
    for (const auto& w : std::get<FiniteBlaschke>(family.variant()).zeros) {
      form.numerator = multiply(form.numerator, {{MultiIndex{0}, -w}, {MultiIndex{1}, 1.0}});
      form.denominator = multiply(form.denominator, {{MultiIndex{0}, 1.0}, {MultiIndex{1}, -std::conj(w)}});
    }
  }
  return form;
}

}  // namespace

CoefficientSeries oracle_expand(const FamilySpec& family, std::uint32_t max_degree, double budget) {
  const std::size_t n = family.dimension();
  const double count = total_count(n, max_degree);
  if (count > budget) {
    throw BudgetError(fmt::format("oracle_expand: {} coefficients for n = {}, K = {} exceed budget {}", count, n,
                                  max_degree, budget));
  }

  const auto [numerator, denominator] = rational_form(family);
  const Complex d0 = denominator.at(MultiIndex::zero(n));

  // Solve D * Q = N degree by degree.
  Polynomial quotient;
  CoefficientSeries series(n, max_degree);
  for (std::uint32_t k = 0; k <= max_degree; ++k) {
    for (const auto& alpha : multi_indices_of_degree(n, k)) {
      Complex q = 0.0;
      if (auto it = numerator.find(alpha); it != numerator.end()) q = it->second;
      for (const auto& [delta, d] : denominator) {
        if (delta.degree() == 0 || !alpha.dominates(delta)) continue;
        if (auto it = quotient.find(alpha - delta); it != quotient.end()) q -= d * it->second;
      }
      q /= d0;
      quotient.emplace(alpha, q);
      series.set(alpha, q);
    }
  }
  return series;
}

}  // namespace bohr
