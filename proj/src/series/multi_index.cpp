#include "bohr/multi_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bohr {

namespace {

std::uint32_t sum_of(std::span<const MultiIndex::Exponent> e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

void fill_degree(std::size_t axis, std::uint32_t remaining,
                 std::vector<MultiIndex::Exponent>& scratch, std::vector<MultiIndex>& out) {
  if (axis + 1 == scratch.size()) {
    scratch[axis] = remaining;
    out.emplace_back(std::span<const MultiIndex::Exponent>(scratch));
    return;
  }
  // Largest exponent on the leading axis first: canonical (descending lex) order.
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    scratch[axis] = e;
    fill_degree(axis + 1, remaining - e, scratch, out);
  }
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<Exponent> exponents)
    : exponents_(exponents.begin(), exponents.end()),
      degree_(sum_of({exponents.begin(), exponents.size()})) {}

MultiIndex::MultiIndex(std::span<const Exponent> exponents)
    : exponents_(exponents.begin(), exponents.end()), degree_(sum_of(exponents)) {}

MultiIndex MultiIndex::zero(std::size_t dimension) {
  MultiIndex m;
  m.exponents_.assign(dimension, 0);
  return m;
}

MultiIndex MultiIndex::unit(std::size_t dimension, std::size_t axis) {
  if (axis >= dimension) throw std::out_of_range("MultiIndex::unit: axis out of range");
  MultiIndex m = zero(dimension);
  m.exponents_[axis] = 1;
  m.degree_ = 1;
  return m;
}

double MultiIndex::factorial() const {
  double f = 1.0;
  for (Exponent e : exponents_) f *= std::tgamma(static_cast<double>(e) + 1.0);
  return f;
}

double MultiIndex::multinomial() const {
  // Product of binomials keeps intermediate values integral and small.
  double result = 1.0;
  std::uint32_t running = 0;
  for (Exponent e : exponents_) {
    for (std::uint32_t j = 1; j <= e; ++j) {
      ++running;
      result = result * running / j;
    }
  }
  return std::round(result);
}

bool MultiIndex::dominates(const MultiIndex& other) const {
  if (other.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (other.exponents_[i] > exponents_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dimension() != dimension()) throw std::invalid_argument("MultiIndex: dimension mismatch");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!dominates(other)) throw std::invalid_argument("MultiIndex: difference would be negative");
  MultiIndex r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] -= other.exponents_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents_[i]);
  }
  return s + ')';
}

std::strong_ordering operator<=>(const MultiIndex& lhs, const MultiIndex& rhs) {
  if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) return c;
  if (auto c = lhs.dimension() <=> rhs.dimension(); c != 0) return c;
  for (std::size_t i = 0; i < lhs.exponents_.size(); ++i) {
    // Larger leading exponent sorts first.
    if (auto c = rhs.exponents_[i] <=> lhs.exponents_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, std::uint32_t k) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  out.reserve(static_cast<std::size_t>(homogeneous_count(n, k)));
  std::vector<MultiIndex::Exponent> scratch(n, 0);
  fill_degree(0, k, scratch, out);
  return out;
}

double homogeneous_count(std::size_t n, std::uint32_t k) {
  if (n == 0) return k == 0 ? 1.0 : 0.0;
  double c = 1.0;
  for (std::size_t j = 1; j < n; ++j) c = c * static_cast<double>(k + j) / static_cast<double>(j);
  return std::round(c);
}

double total_count(std::size_t n, std::uint32_t max_degree) {
  double c = 1.0;
  for (std::size_t j = 1; j <= n; ++j) c = c * static_cast<double>(max_degree + j) / static_cast<double>(j);
  return std::round(c);
}

}  // namespace bohr
