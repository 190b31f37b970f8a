#include <cmath>

#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/series_ops.hpp"
#include "bohr/verify.hpp"

namespace bohr {

namespace {

void require_unit_polydisk(const FamilySpec& family) {
  if (family.domain_radius_cap() < 1.0) {
    throw DomainError(family.describe() + " is not bounded on the unit polydisk");
  }
}

CoefficientSeries lemma_series(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree,
                               ExpansionRoute route, double budget) {
  const auto K = max_degree.value_or(truncation_degree(family, bold_r));
  return route == ExpansionRoute::oracle ? oracle_expand(family, K, budget) : expand(family, K);
}

}  // namespace

LemmaCheck lemma1a_check(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree,
                         ExpansionRoute route, double budget) {
  if (!(bold_r > 0.0 && bold_r <= 1.0 / std::sqrt(2.0))) {
    throw DomainError(fmt::format("lemma (a) needs 0 < r <= 1/sqrt(2), got {}", bold_r));
  }
  require_unit_polydisk(family);
  const auto series = lemma_series(family, bold_r, max_degree, route, budget);
  const std::vector<double> radius(series.dimension(), bold_r);

  LemmaCheck out;
  for (std::uint32_t k = 1; k <= series.truncation_degree(); ++k) out.lhs += k * series.homogeneous_sq_sum(k, radius);
  const double a0sq = std::norm(series.constant_term());
  const double d = 1.0 - a0sq * bold_r * bold_r;
  out.rhs = bold_r * bold_r * (1.0 - a0sq) * (1.0 - a0sq) / (d * d);
  out.ok = out.lhs <= out.rhs + kLemmaTolerance;
  return out;
}

LemmaCheck lemma1b_check(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree,
                         ExpansionRoute route, double budget) {
  if (!(bold_r > 0.0 && bold_r < 1.0)) {
    throw DomainError(fmt::format("lemma (b) needs 0 < r < 1, got {}", bold_r));
  }
  require_unit_polydisk(family);
  const auto series = lemma_series(family, std::sqrt(bold_r), max_degree, route, budget);
  // |a_alpha|^2 (sqrt r)^{2 alpha} = |a_alpha|^2 r^{|alpha|} on the diagonal.
  const std::vector<double> radius(series.dimension(), std::sqrt(bold_r));

  LemmaCheck out;
  for (std::uint32_t k = 1; k <= series.truncation_degree(); ++k) out.lhs += series.homogeneous_sq_sum(k, radius);
  const double a0sq = std::norm(series.constant_term());
  out.rhs = bold_r * (1.0 - a0sq) * (1.0 - a0sq) / (1.0 - a0sq * bold_r);
  out.ok = out.lhs <= out.rhs + kLemmaTolerance;
  return out;
}

double lemma1c_bound(double a0, double bold_r, std::size_t n) {
  if (!(a0 >= 0.0 && a0 <= 1.0)) throw DomainError(fmt::format("lemma (c): |a0| = {} outside [0,1]", a0));
  if (!(bold_r >= 0.0 && bold_r < 1.0)) throw DomainError(fmt::format("lemma (c): r = {} outside [0,1)", bold_r));
  if (n == 0) throw DomainError("lemma (c): dimension must be at least 1");
  const double dn = static_cast<double>(n);
  if (a0 >= bold_r) {
    if (!(dn * a0 * bold_r < 1.0)) throw DomainError("lemma (c): first branch needs n |a0| r < 1");
    return std::sqrt(dn) * bold_r * (1.0 - a0 * a0) / (1.0 - dn * a0 * bold_r);
  }
  if (!(dn * bold_r * bold_r < 1.0)) throw DomainError("lemma (c): second branch needs n r^2 < 1");
  return std::sqrt(dn) * bold_r * std::sqrt(1.0 - a0 * a0) / std::sqrt(1.0 - dn * bold_r * bold_r);
}

LemmaCheck lemma1c_check(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree) {
  if (!(bold_r > 0.0 && bold_r < 1.0)) throw DomainError(fmt::format("lemma (c) needs 0 < r < 1, got {}", bold_r));
  require_unit_polydisk(family);
  const auto series = expand(family, max_degree.value_or(truncation_degree(family, bold_r)));
  const std::vector<double> radius(series.dimension(), bold_r);

  LemmaCheck out;
  for (std::uint32_t k = 1; k <= series.truncation_degree(); ++k) out.lhs += series.homogeneous_abs_sum(k, radius);
  out.rhs = lemma1c_bound(std::abs(series.constant_term()), bold_r, series.dimension());
  out.ok = out.lhs <= out.rhs + kLemmaTolerance;
  return out;
}

SchwarzPickChain schwarz_pick_chain(const FamilySpec& family, const std::vector<Complex>& z) {
  if (z.size() != family.dimension()) throw DomainError("schwarz_pick_chain: point has wrong dimension");
  double bold_r = 0.0;
  for (const auto& v : z) bold_r = std::max(bold_r, std::abs(v));
  if (!(bold_r < family.domain_radius_cap())) {
    throw DomainError("schwarz_pick_chain: point outside the domain of " + family.describe());
  }
  constexpr double slack = 1e-12;
  const double a0 = std::abs(family.constant_term());
  const double nr = static_cast<double>(family.dimension()) * bold_r;

  SchwarzPickChain out;
  out.modulus = std::abs(family.value_at(z));
  out.inner = schwarz_pick(a0, bold_r);
  out.outer = (a0 + nr) / (1.0 + a0 * nr);
  out.inner_ok = out.modulus <= out.inner + slack;
  out.outer_ok = out.modulus <= out.outer + slack && out.inner <= out.outer + slack;
  return out;
}

}  // namespace bohr
