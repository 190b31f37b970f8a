#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bohr {

/// Exponent vector (alpha_1, ..., alpha_n) of a monomial z^alpha.
///
/// Ordering is graded: lower total degree first, then lexicographically
/// descending exponents, so (1,0) precedes (0,1). Every coefficient container
/// in the library iterates in this order.
class MultiIndex {
 public:
  using Exponent = std::uint32_t;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<Exponent> exponents);
  explicit MultiIndex(std::span<const Exponent> exponents);

  static MultiIndex zero(std::size_t dimension);
  /// e_i: a single 1 at position `axis`.
  static MultiIndex unit(std::size_t dimension, std::size_t axis);

  std::size_t dimension() const noexcept { return exponents_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const noexcept {
    return {exponents_.data(), exponents_.size()};
  }

  /// alpha! = alpha_1! ... alpha_n!
  double factorial() const;
  /// |alpha|! / alpha!
  double multinomial() const;

  /// True when every exponent of `other` is <= the matching one here.
  bool dominates(const MultiIndex& other) const;
  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires dominates(other).
  MultiIndex operator-(const MultiIndex& other) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex& lhs, const MultiIndex& rhs) {
    return lhs.exponents_ == rhs.exponents_;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& lhs, const MultiIndex& rhs);

 private:
  boost::container::small_vector<Exponent, 6> exponents_;
  std::uint32_t degree_ = 0;
};

/// All multi-indices of dimension n and degree exactly k, in canonical order.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, std::uint32_t k);

/// C(k + n - 1, n - 1): number of monomials of degree k in n variables.
double homogeneous_count(std::size_t n, std::uint32_t k);

/// C(K + n, n): number of monomials of degree <= K in n variables.
double total_count(std::size_t n, std::uint32_t max_degree);

}  // namespace bohr
