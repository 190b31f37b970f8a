#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bohr/coefficient_series.hpp"
#include "bohr/family.hpp"

namespace bohr {

/// Truncation policy: grow K until the certified tail at the radius drops
/// below kTailTarget, never beyond kMaxTruncationDegree.
inline constexpr double kTailTarget = 1e-13;
inline constexpr std::uint32_t kMaxTruncationDegree = 200;

/// Default coefficient budget for the brute-force oracle.
inline constexpr double kDefaultOracleBudget = 2.0e6;

/// Tail bounds beyond degree K at diagonal radius `radius`, or nullopt when
/// the family admits no certificate there.
std::optional<TailCertificate> family_tail(const FamilySpec& family, std::uint32_t max_degree, double radius);

/// Smallest K (<= kMaxTruncationDegree) whose certified tails at `radius`
/// are both below kTailTarget.
std::uint32_t truncation_degree(const FamilySpec& family, double radius);

/// All coefficients of degree <= K from the closed forms.
///
/// When `certificate_radius` is given, the tail certificate for that diagonal
/// radius is attached (if the family admits one).
CoefficientSeries expand(const FamilySpec& family, std::uint32_t max_degree,
                         std::optional<double> certificate_radius = std::nullopt);

/// Coefficients by formal power-series division of numerator by denominator
/// polynomial. Shares nothing with expand() beyond the family parameters.
///
/// Throws BudgetError when C(K+n, n) exceeds `budget`.
CoefficientSeries oracle_expand(const FamilySpec& family, std::uint32_t max_degree,
                                double budget = kDefaultOracleBudget);

struct TorusReport {
  double sup_modulus = 0.0;
  std::vector<Complex> witness;
  /// Certified tail at the torus radius; nullopt when none is available.
  std::optional<double> tail;
  bool certified = false;
  /// sup_modulus + tail <= 1 + 1e-9 (tail taken as 0 when uncertified).
  bool ok = false;
};

/// Maximum of |truncated series| over samplesPerAxis^n points of the torus
/// {|z_i| = radius}. Requires samples_per_axis >= 8.
TorusReport torus_bound_check(const CoefficientSeries& series, double radius, std::uint32_t samples_per_axis);

/// Family overload: checks radius <= domain cap and expands with the
/// truncation policy before sampling.
TorusReport torus_bound_check(const FamilySpec& family, double radius, std::uint32_t samples_per_axis);

/// Coefficients b_k of the univariate series in s = z_1 + ... + z_n.
struct SliceSeries {
  std::vector<Complex> coefficients;
  /// Set for Moebius-type families: b_k = -(1 - a^2) a^{k-1} scale^k.
  std::optional<double> moebius_a;
  double scale = 1.0;

  /// b_k from the closed form when available, else from the stored list.
  Complex b(std::uint32_t k) const;
};

/// Slice coefficients b_0..b_K. Blaschke products return their own Taylor
/// coefficients; constants return (c, 0, ...).
SliceSeries slice_coefficients(const FamilySpec& family, std::uint32_t max_degree);

/// Univariate series are their own slice; throws UnsupportedError for n >= 2.
SliceSeries slice_coefficients(const CoefficientSeries& series);

}  // namespace bohr
