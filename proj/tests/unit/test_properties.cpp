#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "bohr/series_ops.hpp"
#include "bohr/verify.hpp"

using namespace bohr;

namespace {

// Fixed-seed generators; every property below sees the same inputs on every run.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t dimension(std::size_t max) { return std::uniform_int_distribution<std::size_t>(1, max)(rng_); }

  Complex disk_point(double radius) { return std::polar(radius * std::sqrt(uniform(0, 1)), uniform(0, 6.283185307179586)); }

  /// A family bounded by 1 on the unit polydisk of its dimension.
  FamilySpec bounded_family(std::size_t max_n) {
    switch (std::uniform_int_distribution<int>(0, 3)(rng_)) {
      case 0:
        return FamilySpec::moebius(uniform(0, 0.95));
      case 1:
        return FamilySpec::extremal_scaled(uniform(0, 0.95), dimension(max_n));
      case 2: {
        std::vector<Complex> zeros(dimension(3));
        for (auto& w : zeros) w = disk_point(0.9);
        return FamilySpec::blaschke(zeros);
      }
      default:
        return FamilySpec::constant(disk_point(1.0), dimension(max_n));
    }
  }

  FamilySpec any_family(std::size_t max_n) {
    if (uniform(0, 1) < 0.25) return FamilySpec::extremal_unit(uniform(0, 0.95), dimension(max_n));
    return bounded_family(max_n);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("property: oracle and closed forms agree for n <= 3, K <= 10") {
  Gen gen(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = gen.any_family(3);
    const auto K = static_cast<std::uint32_t>(gen.uniform(0, 10.999));
    CAPTURE(f.describe());
    const auto x = expand(f, K);
    const auto y = oracle_expand(f, K);
    for (std::uint32_t k = 0; k <= K; ++k) {
      for (const auto& alpha : multi_indices_of_degree(f.dimension(), k)) {
        CHECK(std::abs(x.coefficient(alpha) - y.coefficient(alpha)) < 1e-12);
      }
    }
  }
}

TEST_CASE("property: degree slices hold only their own degree") {
  Gen gen(102);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = expand(gen.any_family(4), 8);
    for (std::uint32_t k = 0; k <= 8; ++k) {
      for (const auto& term : s.slice(k)) CHECK(term.index.degree() == k);
    }
  }
}

TEST_CASE("property: multinomial identity on the diagonal") {
  Gen gen(103);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = gen.dimension(4);
    const double a = gen.uniform(0, 0.95);
    const double r = gen.uniform(0, 1.0 / n);
    const auto s = expand(FamilySpec::extremal_unit(a, n), 12);
    const std::vector<double> radius(n, r);
    for (std::uint32_t k = 1; k <= 12; ++k) {
      const double expected = (1 - a * a) * std::pow(a, k - 1.0) * std::pow(n * r, k);
      CHECK(s.homogeneous_abs_sum(k, radius) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("property: truncated series reproduces the function inside the domain") {
  Gen gen(104);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = gen.any_family(3);
    const double r = gen.uniform(0, 0.8) * f.domain_radius_cap();
    std::vector<Complex> z(f.dimension());
    for (auto& zi : z) zi = gen.disk_point(r);
    const auto s = expand(f, truncation_degree(f, r), r);
    CAPTURE(f.describe());
    CHECK(std::abs(s.evaluate(z) - f.value_at(z)) < 1e-11);
  }
}

TEST_CASE("property: |f(z)| never exceeds the majorant, nor the Schwarz-Pick chain") {
  Gen gen(105);
  for (int trial = 0; trial < 80; ++trial) {
    const auto f = gen.bounded_family(4);
    const double r = gen.uniform(0, 0.9);
    std::vector<Complex> z(f.dimension());
    for (auto& zi : z) zi = gen.disk_point(r);
    CAPTURE(f.describe());
    CHECK(std::abs(f.value_at(z)) <= majorant(f, RadiusSpec::diagonal(f.dimension(), r)) + 1e-12);
    const auto chain = schwarz_pick_chain(f, z);
    CHECK(chain.inner_ok);
    CHECK(chain.outer_ok);
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = gen.dimension(5);
    const auto f = FamilySpec::extremal_unit(gen.uniform(0, 0.95), n);
    std::vector<Complex> z(n);
    for (auto& zi : z) zi = gen.disk_point(gen.uniform(0, 0.99) / n);
    CHECK(schwarz_pick_chain(f, z).outer_ok);
  }
}

TEST_CASE("property: torus maximum stays within 1 at the domain cap") {
  Gen gen(106);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = gen.any_family(2);
    const double r = 0.98 * f.domain_radius_cap();
    CAPTURE(f.describe());
    const auto report = torus_bound_check(expand(f, 60), r, 32);
    CHECK(report.sup_modulus <= 1.0 + 1e-9);
  }
}

TEST_CASE("property: lemmas hold for bounded families") {
  Gen gen(107);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = gen.bounded_family(3);
    const double r = gen.uniform(0.05, 0.7);
    CAPTURE(f.describe());
    CAPTURE(r);
    CHECK(lemma1a_check(f, r).ok);
    CHECK(lemma1b_check(f, r).ok);
    const double a0 = std::abs(f.constant_term());
    const double n = static_cast<double>(f.dimension());
    const bool admissible = a0 >= r ? n * a0 * r < 1.0 : n * r * r < 1.0;
    if (admissible) CHECK(lemma1c_check(f, r).ok);
  }
}

TEST_CASE("property: literal area never exceeds the slice area") {
  Gen gen(108);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = gen.dimension(4);
    const double a = gen.uniform(0, 0.95);
    const auto f = gen.uniform(0, 1) < 0.5 ? FamilySpec::extremal_unit(a, n) : FamilySpec::extremal_scaled(a, n);
    const auto r = RadiusSpec::diagonal(n, gen.uniform(0, 0.9) * f.domain_radius_cap());
    const double literal = area_term(f, r, AreaInterpretation::literal);
    const double slice = area_term(f, r, AreaInterpretation::slice);
    if (n == 1) {
      CHECK(literal == doctest::Approx(slice).epsilon(1e-12));
    } else {
      CHECK(literal <= slice * (1 + 1e-12));
    }
  }
}

TEST_CASE("property: totals of Moebius-type families grow with the radius") {
  Gen gen(109);
  const auto k = sharp_constants(constants_report());
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = gen.dimension(3);
    const double a = gen.uniform(0, 0.95);
    const auto f = n == 1 ? FamilySpec::moebius(a) : FamilySpec::extremal_unit(a, n);
    for (auto id : {TheoremId::classic, TheoremId::a, TheoremId::b1, TheoremId::b2, TheoremId::c, TheoremId::d,
                    TheoremId::e, TheoremId::t21, TheoremId::t22, TheoremId::t23}) {
      const auto spec = preset(id, k);
      double previous = -1.0;
      for (int i = 0; i < 20; ++i) {
        const double r = 0.95 * f.domain_radius_cap() * i / 19.0;
        const double total = evaluate(spec, f, RadiusSpec::diagonal(n, r)).total;
        CHECK(total >= previous - 1e-12);
        previous = total;
      }
    }
  }
}

TEST_CASE("property: radius search is stable under tolerance refinement") {
  Gen gen(110);
  for (int trial = 0; trial < 15; ++trial) {
    const auto f = FamilySpec::moebius(gen.uniform(0.01, 0.95));
    double tol = 1e-4;
    double previous = radius_search(presets::thm_a(), f, tol).radius;
    for (int step = 0; step < 6; ++step) {
      const double next = radius_search(presets::thm_a(), f, tol / 2).radius;
      CHECK(std::abs(next - previous) < tol);
      previous = next;
      tol /= 2;
    }
  }
}

TEST_CASE("property: a nonnegative perturbation never lowers a scan") {
  Gen gen(111);
  const auto k = sharp_constants(constants_report());
  for (int trial = 0; trial < 10; ++trial) {
    const double eps = gen.uniform(0, 1e-2);
    const auto grid = make_grid(0.0, 0.95, 0.05);
    const auto report = sharpness_scan(presets::thm_d(k), {FamilyKind::moebius, 1}, grid, 1.0 / 3.0, eps);
    CHECK(report.perturbed_max >= report.max_total);
    CHECK(report.refined_max_total <= 1.0 + 1e-12);
  }
}
