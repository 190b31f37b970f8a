#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bohr/coefficient_series.hpp"

namespace bohr {

/// psi_a(z) = (a - z) / (1 - a z) on the unit disk.
struct MoebiusDisk {
  double a;
};

/// (a - s) / (1 - a s), s = z_1 + ... + z_n; bounded on the polydisk of radius 1/n.
struct ExtremalPolydiskUnit {
  double a;
  std::size_t n;
};

/// (a - s/n) / (1 - a s/n), s = z_1 + ... + z_n; bounded on the unit polydisk.
struct ExtremalPolydiskScaled {
  double a;
  std::size_t n;
};

/// prod_j (z - w_j) / (1 - conj(w_j) z), |w_j| < 1.
struct FiniteBlaschke {
  std::vector<Complex> zeros;
};

/// f = c on the polydisk of dimension n.
struct ConstantFn {
  Complex c;
  std::size_t n = 1;
};

enum class FamilyKind { moebius, unit, scaled, blaschke, constant };

/// Closed-form generator for one of the test/extremal function families.
///
/// Construct through the named factories; they validate parameters and throw
/// DomainError on a outside [0,1), |c| > 1, or a Blaschke zero with |w| >= 1.
class FamilySpec {
 public:
  using Variant = std::variant<MoebiusDisk, ExtremalPolydiskUnit, ExtremalPolydiskScaled,
                               FiniteBlaschke, ConstantFn>;

  static FamilySpec moebius(double a);
  static FamilySpec extremal_unit(double a, std::size_t n);
  static FamilySpec extremal_scaled(double a, std::size_t n);
  static FamilySpec blaschke(std::vector<Complex> zeros);
  static FamilySpec constant(Complex c, std::size_t n = 1);

  const Variant& variant() const noexcept { return variant_; }
  FamilyKind kind() const noexcept;
  std::size_t dimension() const noexcept;

  /// Supremum of admissible radius coordinates: 1/n for the unit extremal
  /// family, 1 otherwise.
  double domain_radius_cap() const noexcept;

  /// Members of the (a - s)/(1 - a s) family in some scaling of s.
  bool is_moebius_type() const noexcept;
  /// Parameter a of a Moebius-type family; throws UnsupportedError otherwise.
  double moebius_parameter() const;
  /// Factor c with the family written as psi_a(c * (z_1 + ... + z_n)).
  double slice_scale() const;

  Complex constant_term() const;
  /// Exact value of the rational function at z.
  Complex value_at(std::span<const Complex> z) const;

  /// Short tag such as "moebius:0.5" or "scaled:0.6,2", accepted by parse().
  std::string describe() const;
  static FamilySpec parse(const std::string& text);

 private:
  explicit FamilySpec(Variant v) : variant_(std::move(v)) {}
  Variant variant_;
};

/// Family member as a function of the parameter a, with n fixed.
struct FamilyTemplate {
  FamilyKind kind = FamilyKind::unit;
  std::size_t n = 1;

  FamilySpec at(double a) const;
};

}  // namespace bohr
