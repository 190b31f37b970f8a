#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/coefficient_series.hpp"
#include "bohr/family.hpp"

namespace bohr {

/// Radius vector r = (r_1, ..., r_n); bold() is its sup-norm.
class RadiusSpec {
 public:
  static RadiusSpec diagonal(std::size_t n, double r);
  static RadiusSpec vector(std::vector<double> coordinates);

  std::size_t dimension() const noexcept { return coordinates_.size(); }
  std::span<const double> coordinates() const noexcept { return coordinates_; }
  double bold() const noexcept { return bold_; }
  bool is_diagonal() const noexcept { return diagonal_; }

 private:
  RadiusSpec(std::vector<double> coordinates, bool diagonal);

  std::vector<double> coordinates_;
  double bold_ = 0.0;
  bool diagonal_ = false;
};

enum class HeadTerm { constant_term, abs_f, abs_f_squared };

/// Literal: true multi-index coefficients. Slice: univariate series in
/// s = z_1 + ... + z_n evaluated at s = n * bold(r).
enum class AreaInterpretation { literal, slice };

std::string_view to_string(AreaInterpretation interpretation);

/// Weights of a Bohr-type functional
///   head + tail + w_1 * S + w_2 * S^2 + w_3 * S
/// where S is the area-type term and the tail never contains |a_0|.
struct FunctionalSpec {
  std::string name;
  HeadTerm head = HeadTerm::constant_term;
  bool include_majorant_tail = true;
  double area_weight = 0.0;
  double area_squared_weight = 0.0;
  double extra_area_weight = 0.0;
  AreaInterpretation interpretation = AreaInterpretation::literal;
};

/// Sharp constants injected into the presets that need them.
struct SharpConstants {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double p = 0.0;
};

enum class TheoremId { classic, a, b1, b2, c, d, e, t21, t22, t23 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
/// T21, T22 and T23 are stated on the polydisk; the rest are single-variable.
bool is_polydisk_theorem(TheoremId id);

namespace presets {
FunctionalSpec classic();
FunctionalSpec thm_a();
FunctionalSpec thm_b1();
FunctionalSpec thm_b2();
FunctionalSpec thm_c(const SharpConstants& k);
FunctionalSpec thm_d(const SharpConstants& k);
FunctionalSpec thm_e(const SharpConstants& k);
FunctionalSpec thm_2_1(const SharpConstants& k);
FunctionalSpec thm_2_2(const SharpConstants& k);
FunctionalSpec thm_2_3(const SharpConstants& k);
}  // namespace presets

FunctionalSpec preset(TheoremId id, const SharpConstants& constants);

struct TermBreakdown {
  double head_value = 0.0;
  double majorant_tail = 0.0;
  /// Raw area-type term S.
  double area_term = 0.0;
  double area_contribution = 0.0;
  double area_squared_contribution = 0.0;
  double extra_area_contribution = 0.0;
  double total = 0.0;
  double margin = 0.0;
  /// Every truncated term carries a tail certificate.
  bool certified = false;
  /// No truncated series participated.
  bool closed_form = false;
  AreaInterpretation interpretation = AreaInterpretation::literal;
};

/// Truncated sum_{|alpha| <= K} |a_alpha| r^alpha, including |a_0|.
double majorant(const CoefficientSeries& series, const RadiusSpec& radius);
/// Certified bound on what majorant(series, radius) leaves out, if any.
std::optional<double> majorant_tail_bound(const CoefficientSeries& series, const RadiusSpec& radius);
/// Full majorant series of a family; closed form for Moebius-type families.
double majorant(const FamilySpec& family, const RadiusSpec& radius);

/// Literal area term sum_k k sum_{|alpha|=k} |a_alpha|^2 r^{2 alpha}, truncated.
double area_term(const CoefficientSeries& series, const RadiusSpec& radius);
double area_term(const FamilySpec& family, const RadiusSpec& radius, AreaInterpretation interpretation);

/// The point (-bold(r), ..., -bold(r)): the diagonal of the torus on which
/// |f| is largest for every Moebius-type family.
std::vector<Complex> default_evaluation_point(const RadiusSpec& radius);

TermBreakdown evaluate(const FunctionalSpec& spec, const FamilySpec& family, const RadiusSpec& radius,
                       std::optional<std::vector<Complex>> eval_point = std::nullopt);

/// (a0 + R) / (1 + a0 R)
double schwarz_pick(double a0, double bold_r);

}  // namespace bohr
