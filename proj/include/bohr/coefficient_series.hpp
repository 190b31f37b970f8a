#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bohr/multi_index.hpp"

namespace bohr {

using Complex = std::complex<double>;

/// Upper bounds for everything a truncated series drops beyond degree K.
///
/// Valid for every radius vector whose largest coordinate is <= `radius`.
struct TailCertificate {
  double radius = 0.0;
  /// Bound on sum_{|alpha|>K} |a_alpha| r^alpha.
  double majorant = 0.0;
  /// Bound on sum_{k>K} k sum_{|alpha|=k} |a_alpha|^2 r^{2 alpha}.
  double area = 0.0;
};

struct SeriesTerm {
  MultiIndex index;
  Complex value;
};

/// Power series in n variables truncated at total degree K.
///
/// Coefficients live in per-degree slices, each sorted in canonical
/// MultiIndex order. Unset coefficients read as zero.
class CoefficientSeries {
 public:
  CoefficientSeries(std::size_t dimension, std::uint32_t max_degree);

  std::size_t dimension() const noexcept { return dimension_; }
  std::uint32_t truncation_degree() const noexcept { return max_degree_; }
  std::size_t term_count() const noexcept;

  /// Insert or overwrite; throws DomainError on wrong length or degree > K.
  void set(const MultiIndex& index, Complex value);
  Complex coefficient(const MultiIndex& index) const;
  Complex constant_term() const;

  /// Stored terms of degree exactly k (the homogeneous polynomial P_k).
  std::span<const SeriesTerm> slice(std::uint32_t k) const;

  /// sum_{|alpha|=k} |a_alpha| r^alpha
  double homogeneous_abs_sum(std::uint32_t k, std::span<const double> radius) const;
  /// sum_{|alpha|=k} |a_alpha|^2 r^{2 alpha}
  double homogeneous_sq_sum(std::uint32_t k, std::span<const double> radius) const;

  /// Truncated series evaluated at z.
  Complex evaluate(std::span<const Complex> z) const;

  const std::optional<TailCertificate>& tail_certificate() const noexcept { return tail_; }
  void set_tail_certificate(TailCertificate certificate);
  void clear_tail_certificate() noexcept { tail_.reset(); }

 private:
  void check_radius(std::span<const double> radius) const;

  std::size_t dimension_;
  std::uint32_t max_degree_;
  std::vector<std::vector<SeriesTerm>> slices_;
  std::optional<TailCertificate> tail_;
};

}  // namespace bohr
