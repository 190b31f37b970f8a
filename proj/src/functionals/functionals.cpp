#include "bohr/functionals.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "bohr/errors.hpp"
#include "bohr/series_ops.hpp"

namespace bohr {

namespace {

constexpr double kAreaWeightA = 16.0 / 9.0;

// A term of a functional together with how it was obtained.
struct TermValue {
  double value = 0.0;
  bool closed_form = true;
  bool certified = true;
};

void check_radius(const FamilySpec& family, const RadiusSpec& radius) {
  if (radius.dimension() != family.dimension()) {
    throw DomainError(fmt::format("radius has dimension {} but {} has dimension {}", radius.dimension(),
                                  family.describe(), family.dimension()));
  }
  if (!(radius.bold() < family.domain_radius_cap())) {
    throw DomainError(fmt::format("radius {} is at or above the domain cap {} of {}", radius.bold(),
                                  family.domain_radius_cap(), family.describe()));
  }
}

// sum_{|alpha| >= 1} |a_alpha| r^alpha
TermValue majorant_tail_term(const FamilySpec& family, const RadiusSpec& radius) {
  if (family.is_moebius_type()) {
    const double a = family.moebius_parameter();
    double s = 0.0;
    for (double r : radius.coordinates()) s += r;
    s *= family.slice_scale();
    // Multinomial identity: the degree-k slice sums to (1 - a^2) a^{k-1} s^k.
    return {(1.0 - a * a) * s / (1.0 - a * s)};
  }
  if (family.kind() == FamilyKind::constant) return {};
  const auto K = truncation_degree(family, radius.bold());
  const auto series = expand(family, K, radius.bold());
  double sum = 0.0;
  for (std::uint32_t k = 1; k <= K; ++k) sum += series.homogeneous_abs_sum(k, radius.coordinates());
  return {sum, false, majorant_tail_bound(series, radius).has_value()};
}

// T[k] = sum_{|alpha|=k} (k!/alpha! n^{-k})^2 for k <= K: the chance that two
// independent multinomial draws with equal cell weights 1/n coincide.
std::vector<double> multinomial_collision(std::size_t n, std::uint32_t K) {
  std::vector<double> t(K + 1, 1.0);
  for (std::size_t m = 2; m <= n; ++m) {
    const double q = 1.0 / static_cast<double>(m);
    std::vector<double> next(K + 1, 0.0);
    for (std::uint32_t k = 0; k <= K; ++k) {
      for (std::uint32_t j = 0; j <= k; ++j) {
        const double log_p = std::lgamma(k + 1.0) - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0) +
                             j * std::log(q) + (k - j) * std::log1p(-q);
        next[k] += std::exp(2.0 * log_p) * t[k - j];
      }
    }
    t = std::move(next);
  }
  return t;
}

TermValue area(const FamilySpec& family, const RadiusSpec& radius, AreaInterpretation interpretation) {
  if (family.kind() == FamilyKind::constant) return {};
  const double n = static_cast<double>(family.dimension());
  if (family.is_moebius_type() && (interpretation == AreaInterpretation::slice || family.dimension() == 1)) {
    const double a = family.moebius_parameter();
    const double t = n * radius.bold() * family.slice_scale();
    const double w = 1.0 - a * a;
    const double d = 1.0 - a * a * t * t;
    return {w * w * t * t / (d * d)};
  }
  if (interpretation == AreaInterpretation::slice) {
    // Blaschke products are univariate, so s = z and rho = bold(r).
    const double rho = n * radius.bold();
    const auto K = truncation_degree(family, rho);
    const auto slice = slice_coefficients(family, K);
    double sum = 0.0;
    double power = 1.0;
    for (std::uint32_t k = 1; k <= K; ++k) {
      power *= rho * rho;
      sum += k * std::norm(slice.b(k)) * power;
    }
    return {sum, false, family_tail(family, K, rho).has_value()};
  }
  const auto K = truncation_degree(family, radius.bold());
  if (family.is_moebius_type() && radius.is_diagonal()) {
    // |a_alpha| = (1 - a^2) a^{k-1} c^k k!/alpha!, so each degree collapses
    // to the slice term times the collision probability.
    const double a = family.moebius_parameter();
    const double rho = n * radius.bold() * family.slice_scale();
    const auto collision = multinomial_collision(family.dimension(), K);
    const double w = 1.0 - a * a;
    double sum = 0.0;
    double power = rho * rho;
    for (std::uint32_t k = 1; k <= K; ++k) {
      sum += k * w * w * power * collision[k];
      power *= a * a * rho * rho;
    }
    return {sum, false, family_tail(family, K, radius.bold()).has_value()};
  }
  const auto series = expand(family, K, radius.bold());
  return {area_term(series, radius), false, series.tail_certificate().has_value()};
}

}  // namespace

RadiusSpec::RadiusSpec(std::vector<double> coordinates, bool diagonal)
    : coordinates_(std::move(coordinates)), diagonal_(diagonal) {
  if (coordinates_.empty()) throw DomainError("radius must have at least one coordinate");
  for (double r : coordinates_) {
    if (!(r >= 0.0)) throw DomainError(fmt::format("radius coordinate {} is negative", r));
  }
  bold_ = *std::max_element(coordinates_.begin(), coordinates_.end());
}

RadiusSpec RadiusSpec::diagonal(std::size_t n, double r) { return RadiusSpec(std::vector<double>(n, r), true); }

RadiusSpec RadiusSpec::vector(std::vector<double> coordinates) {
  const bool diag = !coordinates.empty() &&
                    std::all_of(coordinates.begin(), coordinates.end(), [&](double r) { return r == coordinates[0]; });
  return RadiusSpec(std::move(coordinates), diag);
}

std::string_view to_string(AreaInterpretation interpretation) {
  return interpretation == AreaInterpretation::literal ? "literal" : "slice";
}

namespace {
constexpr std::array<std::pair<TheoremId, std::string_view>, 10> kTheoremNames{{{TheoremId::classic, "classic"},
                                                                                {TheoremId::a, "A"},
                                                                                {TheoremId::b1, "B1"},
                                                                                {TheoremId::b2, "B2"},
                                                                                {TheoremId::c, "C"},
                                                                                {TheoremId::d, "D"},
                                                                                {TheoremId::e, "E"},
                                                                                {TheoremId::t21, "T21"},
                                                                                {TheoremId::t22, "T22"},
                                                                                {TheoremId::t23, "T23"}}};
}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& [key, name] : kTheoremNames) {
    if (key == id) return name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const auto& [key, name] : kTheoremNames) {
    if (name.size() != text.size()) continue;
    if (std::equal(name.begin(), name.end(), text.begin(),
                   [](char x, char y) { return std::tolower(x) == std::tolower(y); })) {
      return key;
    }
  }
  return std::nullopt;
}

bool is_polydisk_theorem(TheoremId id) {
  return id == TheoremId::t21 || id == TheoremId::t22 || id == TheoremId::t23;
}

namespace presets {

FunctionalSpec classic() { return {"classic", HeadTerm::constant_term, true, 0.0, 0.0, 0.0}; }
FunctionalSpec thm_a() { return {"A", HeadTerm::constant_term, true, kAreaWeightA, 0.0, 0.0}; }
FunctionalSpec thm_b1() { return {"B1", HeadTerm::abs_f, true, 0.0, 0.0, 0.0}; }
FunctionalSpec thm_b2() { return {"B2", HeadTerm::abs_f_squared, true, 0.0, 0.0, 0.0}; }
FunctionalSpec thm_c(const SharpConstants& k) {
  return {"C", HeadTerm::constant_term, true, kAreaWeightA, k.lambda1, 0.0};
}
FunctionalSpec thm_d(const SharpConstants& k) {
  return {"D", HeadTerm::abs_f_squared, true, kAreaWeightA, k.lambda2, 0.0};
}
FunctionalSpec thm_e(const SharpConstants& k) { return {"E", HeadTerm::abs_f, true, k.p, 0.0, 0.0}; }
FunctionalSpec thm_2_1(const SharpConstants& k) {
  auto spec = thm_c(k);
  spec.name = "T21";
  return spec;
}
FunctionalSpec thm_2_2(const SharpConstants& k) {
  auto spec = thm_d(k);
  spec.name = "T22";
  return spec;
}
FunctionalSpec thm_2_3(const SharpConstants& k) { return {"T23", HeadTerm::abs_f, true, 0.0, 0.0, k.p}; }

}  // namespace presets

FunctionalSpec preset(TheoremId id, const SharpConstants& constants) {
  switch (id) {
    case TheoremId::classic:
      return presets::classic();
    case TheoremId::a:
      return presets::thm_a();
    case TheoremId::b1:
      return presets::thm_b1();
    case TheoremId::b2:
      return presets::thm_b2();
    case TheoremId::c:
      return presets::thm_c(constants);
    case TheoremId::d:
      return presets::thm_d(constants);
    case TheoremId::e:
      return presets::thm_e(constants);
    case TheoremId::t21:
      return presets::thm_2_1(constants);
    case TheoremId::t22:
      return presets::thm_2_2(constants);
    case TheoremId::t23:
      return presets::thm_2_3(constants);
  }
  throw UnsupportedError("unknown theorem id");
}

double majorant(const CoefficientSeries& series, const RadiusSpec& radius) {
  double sum = 0.0;
  for (std::uint32_t k = 0; k <= series.truncation_degree(); ++k) {
    sum += series.homogeneous_abs_sum(k, radius.coordinates());
  }
  return sum;
}

std::optional<double> majorant_tail_bound(const CoefficientSeries& series, const RadiusSpec& radius) {
  const auto& cert = series.tail_certificate();
  if (!cert || cert->radius < radius.bold()) return std::nullopt;
  return cert->majorant;
}

double majorant(const FamilySpec& family, const RadiusSpec& radius) {
  check_radius(family, radius);
  return std::abs(family.constant_term()) + majorant_tail_term(family, radius).value;
}

double area_term(const CoefficientSeries& series, const RadiusSpec& radius) {
  double sum = 0.0;
  for (std::uint32_t k = 1; k <= series.truncation_degree(); ++k) {
    sum += k * series.homogeneous_sq_sum(k, radius.coordinates());
  }
  return sum;
}

double area_term(const FamilySpec& family, const RadiusSpec& radius, AreaInterpretation interpretation) {
  check_radius(family, radius);
  return area(family, radius, interpretation).value;
}

std::vector<Complex> default_evaluation_point(const RadiusSpec& radius) {
  return std::vector<Complex>(radius.dimension(), Complex(-radius.bold()));
}

TermBreakdown evaluate(const FunctionalSpec& spec, const FamilySpec& family, const RadiusSpec& radius,
                       std::optional<std::vector<Complex>> eval_point) {
  check_radius(family, radius);

  TermBreakdown out;
  out.interpretation = spec.interpretation;
  out.closed_form = true;
  out.certified = true;

  switch (spec.head) {
    case HeadTerm::constant_term:
      out.head_value = std::abs(family.constant_term());
      break;
    case HeadTerm::abs_f:
    case HeadTerm::abs_f_squared: {
      const auto point = eval_point ? *eval_point : default_evaluation_point(radius);
      for (const auto& z : point) {
        if (!(std::abs(z) < family.domain_radius_cap())) {
          throw DomainError("evaluation point lies outside the domain of " + family.describe());
        }
      }
      const double modulus = std::abs(family.value_at(point));
      out.head_value = spec.head == HeadTerm::abs_f ? modulus : modulus * modulus;
      break;
    }
  }

  if (spec.include_majorant_tail) {
    const auto tail = majorant_tail_term(family, radius);
    out.majorant_tail = tail.value;
    out.closed_form = out.closed_form && tail.closed_form;
    out.certified = out.certified && tail.certified;
  }

  if (spec.area_weight != 0.0 || spec.area_squared_weight != 0.0 || spec.extra_area_weight != 0.0) {
    const auto s = area(family, radius, spec.interpretation);
    out.area_term = s.value;
    out.closed_form = out.closed_form && s.closed_form;
    out.certified = out.certified && s.certified;
  }
  out.area_contribution = spec.area_weight * out.area_term;
  out.area_squared_contribution = spec.area_squared_weight * out.area_term * out.area_term;
  out.extra_area_contribution = spec.extra_area_weight * out.area_term;

  out.total = out.head_value + out.majorant_tail + out.area_contribution + out.area_squared_contribution +
              out.extra_area_contribution;
  out.margin = 1.0 - out.total;
  return out;
}

double schwarz_pick(double a0, double bold_r) {
  if (!(a0 >= 0.0 && a0 <= 1.0)) throw DomainError(fmt::format("schwarz_pick: |f(0)| = {} outside [0,1]", a0));
  if (!(bold_r >= 0.0 && bold_r < 1.0)) throw DomainError(fmt::format("schwarz_pick: radius {} outside [0,1)", bold_r));
  return (a0 + bold_r) / (1.0 + a0 * bold_r);
}

}  // namespace bohr
