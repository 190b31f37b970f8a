#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/constants.hpp"
#include "bohr/family.hpp"
#include "bohr/functionals.hpp"

namespace bohr {

/// Violation tolerance when only closed forms participate.
inline constexpr double kClosedFormTolerance = 1e-12;
/// Violation tolerance when a truncated series participates.
inline constexpr double kTruncatedTolerance = 1e-9;
/// Slack for the lemma comparisons lhs <= rhs.
inline constexpr double kLemmaTolerance = 1e-10;

SharpConstants sharp_constants(const ConstantsReport& report);

/// Boundary radius of a theorem in dimension n (1/3, sqrt(5)-2, 1/(3n), (sqrt(5)-2)/n).
double threshold_radius(TheoremId id, std::size_t n, const Radii& radii);

// --- lemma-level checks -----------------------------------------------------

struct LemmaCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

/// Whether the lemma routes expand the series in closed form or by division.
enum class ExpansionRoute { closed_form, oracle };

/// sum_k k sum_{|alpha|=k} |a_alpha|^2 R^{2k} <= R^2 (1-|a0|^2)^2 / (1-|a0|^2 R^2)^2,
/// for 0 < R <= 1/sqrt(2). Requires a family bounded on the unit polydisk.
LemmaCheck lemma1a_check(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree = {},
                         ExpansionRoute route = ExpansionRoute::closed_form,
                         double budget = 2.0e6);

/// sum_k sum_{|alpha|=k} |a_alpha|^2 R^k <= R (1-|a0|^2)^2 / (1-|a0|^2 R), for 0 < R < 1.
LemmaCheck lemma1b_check(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree = {},
                         ExpansionRoute route = ExpansionRoute::closed_form,
                         double budget = 2.0e6);

/// Two-branch bound on sum_{|alpha|>=1} |a_alpha| R^{|alpha|}.
double lemma1c_bound(double a0, double bold_r, std::size_t n);

/// Truncated majorant tail of the family at R against lemma1c_bound.
LemmaCheck lemma1c_check(const FamilySpec& family, double bold_r, std::optional<std::uint32_t> max_degree = {});

struct SchwarzPickChain {
  double modulus = 0.0;  ///< |f(z)|
  double inner = 0.0;    ///< (|a0| + R) / (1 + |a0| R)
  double outer = 0.0;    ///< (|a0| + nR) / (1 + |a0| n R)
  bool inner_ok = false;
  bool outer_ok = false;
};

/// |f(z)| <= inner <= outer at a point z of the family's domain.
SchwarzPickChain schwarz_pick_chain(const FamilySpec& family, const std::vector<Complex>& z);

// --- radius search ------------------------------------------------------------

struct RadiusResult {
  double radius = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::uint32_t iterations = 0;
  /// False when the functional stays <= 1 on the whole domain.
  bool binding = false;
  bool certified = false;
};

/// Number of samples used to confirm monotonicity before bisecting.
inline constexpr int kMonotonicitySamples = 64;

/// Largest diagonal radius R with total(R) <= 1, by bisection on [0, cap).
/// Throws MonotonicityError when sampling finds total decreasing in R.
RadiusResult radius_search(const FunctionalSpec& spec, const FamilySpec& family, double tol);

// --- sharpness scans ----------------------------------------------------------

enum class PerturbationTarget { automatic, area, area_squared, extra_area };

struct ScanReport {
  /// Grid point whose refined local maximum is largest, and the grid value there.
  double max_total = 0.0;
  double argmax_a = 0.0;
  /// Maximiser refined by Brent's method between the neighbours of argmax_a.
  double refined_argmax_a = 0.0;
  double refined_max_total = 0.0;
  double epsilon = 0.0;
  PerturbationTarget target = PerturbationTarget::automatic;
  /// Maximum over the grid with the perturbed weight.
  double perturbed_max = 0.0;
  /// Perturbed total at refined_argmax_a.
  double perturbed_at_argmax = 0.0;
};

/// Resolves `automatic`: squared-area weight if present, else the extra
/// area weight, else the linear area weight.
PerturbationTarget resolve_target(const FunctionalSpec& spec, PerturbationTarget target);
FunctionalSpec perturbed(const FunctionalSpec& spec, PerturbationTarget target, double epsilon);

ScanReport sharpness_scan(const FunctionalSpec& spec, const FamilyTemplate& family, const std::vector<double>& a_grid,
                          double bold_r, double epsilon, PerturbationTarget target = PerturbationTarget::automatic);

// --- theorem sweeps -----------------------------------------------------------

struct SweepRow {
  std::size_t n = 1;
  double a = 0.0;
  double r = 0.0;
  std::string family;
  TermBreakdown terms;
  bool violation = false;
};

struct SweepReport {
  TheoremId theorem = TheoremId::classic;
  /// Sorted by (n, a, r, interpretation).
  std::vector<SweepRow> rows;
  /// Minimum margin over the literal-interpretation rows.
  double worst_margin = 1.0;
  /// Indices into rows.
  std::vector<std::size_t> violations;

  bool ok() const { return violations.empty(); }
};

struct SweepTolerances {
  double closed_form = kClosedFormTolerance;
  double truncated = kTruncatedTolerance;
};

struct SweepConfig {
  TheoremId theorem = TheoremId::classic;
  std::vector<std::size_t> dimensions{1};
  std::vector<double> a_grid;
  /// Explicit radii; empty means the theorem's threshold for each n.
  std::vector<double> radii;
  /// Fixed family instead of the extremal family over a_grid.
  std::optional<FamilySpec> family;
  SweepTolerances tolerances;
};

/// The extremal family of a theorem in dimension n at parameter a.
FamilySpec extremal_family(TheoremId id, std::size_t n, double a);

SweepReport theorem_sweep(const SweepConfig& config, const ConstantsReport& constants);

/// Grid start, start+step, ..., <= stop (stop included within 1e-9 step).
std::vector<double> make_grid(double start, double stop, double step);

}  // namespace bohr
