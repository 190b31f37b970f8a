#include "doctest.h"

#include <cmath>

#include "bohr/constants.hpp"
#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"
#include "bohr/series_ops.hpp"
#include "bohr/verify.hpp"

using namespace bohr;

namespace {

SharpConstants sharp() { return sharp_constants(constants_report()); }

}  // namespace

TEST_CASE("radius specs") {
  const auto d = RadiusSpec::diagonal(3, 0.2);
  CHECK(d.is_diagonal());
  CHECK(d.bold() == 0.2);
  const auto v = RadiusSpec::vector({0.1, 0.3});
  CHECK_FALSE(v.is_diagonal());
  CHECK(v.bold() == 0.3);
  CHECK_THROWS_AS(RadiusSpec::vector({}), DomainError);
  CHECK_THROWS_AS(RadiusSpec::diagonal(2, -0.1), DomainError);
}

TEST_CASE("theorem ids") {
  for (auto id : {TheoremId::classic, TheoremId::a, TheoremId::b1, TheoremId::b2, TheoremId::c, TheoremId::d,
                  TheoremId::e, TheoremId::t21, TheoremId::t22, TheoremId::t23}) {
    CHECK(parse_theorem_id(to_string(id)) == id);
    CHECK(preset(id, sharp()).name == to_string(id));
  }
  CHECK(parse_theorem_id("t21") == TheoremId::t21);
  CHECK_FALSE(parse_theorem_id("T24").has_value());
  CHECK(is_polydisk_theorem(TheoremId::t23));
  CHECK_FALSE(is_polydisk_theorem(TheoremId::e));
}

TEST_CASE("majorant closed form matches the truncated series") {
  const auto f = FamilySpec::extremal_scaled(0.5, 3);
  const auto r = RadiusSpec::vector({0.1, 0.2, 0.3});
  // Frozen from symbolic expansion (tests/oracle/frozen_values.py).
  CHECK(majorant(f, r) - 0.5 == doctest::Approx(0.16666666666666667).epsilon(1e-14));
  const auto series = expand(f, 60, r.bold());
  CHECK(majorant(series, r) == doctest::Approx(majorant(f, r)).epsilon(1e-13));
  REQUIRE(majorant_tail_bound(series, r).has_value());

  const auto b = FamilySpec::parse("blaschke:0.5,-0.3i");
  CHECK(majorant(b, RadiusSpec::diagonal(1, 0.4)) == doctest::Approx(0.49744070625995584).epsilon(1e-12));
  CHECK_THROWS_AS(majorant(FamilySpec::extremal_unit(0.5, 2), RadiusSpec::diagonal(2, 0.5)), DomainError);
  CHECK_THROWS_AS(majorant(FamilySpec::extremal_unit(0.5, 2), RadiusSpec::diagonal(3, 0.1)), DomainError);
}

TEST_CASE("area term, literal and slice") {
  // Frozen from symbolic expansion (tests/oracle/frozen_values.py).
  const auto unit = FamilySpec::extremal_unit(0.6, 2);
  const auto r = RadiusSpec::diagonal(2, 1.0 / 6.0);
  CHECK(area_term(unit, r, AreaInterpretation::literal) ==
        doctest::Approx(0.024192491286747438).epsilon(1e-12));
  CHECK(area_term(expand(unit, 40), r) == doctest::Approx(0.024192491286747438).epsilon(1e-12));
  // slice: (1-a^2)^2 t^2 / (1-a^2 t^2)^2 at t = 1/3
  const double w = 0.64, t = 1.0 / 3.0;
  const double slice = w * w * t * t / std::pow(1 - 0.36 * t * t, 2);
  CHECK(area_term(unit, r, AreaInterpretation::slice) == doctest::Approx(slice).epsilon(1e-14));
  CHECK(slice == doctest::Approx(0.0493827160493827).epsilon(1e-10));
  CHECK(area_term(unit, r, AreaInterpretation::literal) < slice);

  CHECK(area_term(FamilySpec::extremal_scaled(0.6, 2), RadiusSpec::diagonal(2, 0.5), AreaInterpretation::literal) ==
        doctest::Approx(0.058980421582595843).epsilon(1e-12));

  const auto b = FamilySpec::parse("blaschke:0.5,-0.3i");
  const auto r1 = RadiusSpec::diagonal(1, 0.4);
  CHECK(area_term(b, r1, AreaInterpretation::literal) == doctest::Approx(0.06782221483895378).epsilon(1e-12));
  CHECK(area_term(b, r1, AreaInterpretation::slice) == doctest::Approx(0.06782221483895378).epsilon(1e-12));

  // for n = 1 the two readings coincide
  const auto psi = FamilySpec::moebius(0.3);
  CHECK(area_term(psi, r1, AreaInterpretation::literal) == area_term(psi, r1, AreaInterpretation::slice));
  CHECK(area_term(FamilySpec::constant(0.5, 2), RadiusSpec::diagonal(2, 0.3), AreaInterpretation::literal) == 0.0);
}

TEST_CASE("evaluate assembles the terms") {
  const auto k = sharp();
  const auto psi = FamilySpec::moebius(0.5);
  const auto r = RadiusSpec::diagonal(1, 1.0 / 3.0);

  const auto classic = evaluate(presets::classic(), psi, r);
  CHECK(classic.head_value == 0.5);
  CHECK(classic.majorant_tail == doctest::Approx(0.75 / 3.0 / (1 - 0.5 / 3.0)));
  CHECK(classic.area_term == 0.0);
  CHECK(classic.closed_form);
  CHECK(classic.margin == doctest::Approx(1 - classic.total));

  const auto c = evaluate(presets::thm_c(k), psi, r);
  CHECK(c.area_contribution == doctest::Approx(16.0 / 9.0 * c.area_term));
  CHECK(c.area_squared_contribution == doctest::Approx(k.lambda1 * c.area_term * c.area_term));
  CHECK(c.total == doctest::Approx(c.head_value + c.majorant_tail + c.area_contribution +
                                   c.area_squared_contribution));

  // |f| head at the default point (-R): (a + R) / (1 + a R)
  const auto e = evaluate(presets::thm_e(k), psi, RadiusSpec::diagonal(1, radius_e()));
  CHECK(e.head_value == doctest::Approx(schwarz_pick(0.5, radius_e())));
  const auto d = evaluate(presets::thm_d(k), psi, r);
  CHECK(d.head_value == doctest::Approx(std::pow(schwarz_pick(0.5, 1.0 / 3.0), 2)));

  const std::vector<Complex> z{Complex(1.0 / 3.0)};
  CHECK(evaluate(presets::thm_b1(), psi, r, z).head_value == doctest::Approx((0.5 - 1.0 / 3) / (1 - 0.5 / 3)));
  const std::vector<Complex> outside{Complex(1.0)};
  CHECK_THROWS_AS(evaluate(presets::thm_b1(), psi, r, outside), DomainError);

  const auto b = evaluate(presets::thm_a(), FamilySpec::parse("blaschke:0.5,-0.3i"), RadiusSpec::diagonal(1, 0.2));
  CHECK_FALSE(b.closed_form);
  CHECK(b.certified);
}

TEST_CASE("T21 total equals the closed-form identity along the slice") {
  const auto k = sharp();
  for (double a : {0.1, 0.4, 0.7}) {
    const auto spec = [&] {
      auto s = presets::thm_2_1(k);
      s.interpretation = AreaInterpretation::slice;
      return s;
    }();
    for (std::size_t n : {2u, 3u}) {
      const auto total = evaluate(spec, FamilySpec::extremal_unit(a, n), RadiusSpec::diagonal(n, 1.0 / (3.0 * n)));
      const auto one = evaluate(presets::thm_c(k), FamilySpec::moebius(a), RadiusSpec::diagonal(1, 1.0 / 3.0));
      CHECK(total.total == doctest::Approx(one.total).epsilon(1e-13));
    }
  }
}

TEST_CASE("schwarz_pick") {
  CHECK(schwarz_pick(0.0, 0.3) == doctest::Approx(0.3));
  CHECK(schwarz_pick(0.5, 0.0) == 0.5);
  CHECK_THROWS_AS(schwarz_pick(1.2, 0.3), DomainError);
  CHECK_THROWS_AS(schwarz_pick(0.2, 1.0), DomainError);
}

TEST_CASE("literal area on the diagonal matches the expanded series") {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (double a : {0.0, 0.35, 0.9}) {
      for (const auto& f : {FamilySpec::extremal_unit(a, n), FamilySpec::extremal_scaled(a, n)}) {
        const auto r = RadiusSpec::diagonal(n, 0.7 * f.domain_radius_cap());
        const auto series = expand(f, 60);
        CHECK(area_term(f, r, AreaInterpretation::literal) == doctest::Approx(area_term(series, r)).epsilon(1e-12));
      }
    }
  }
  // off the diagonal the expansion path is used
  const auto f = FamilySpec::extremal_scaled(0.5, 3);
  const auto v = RadiusSpec::vector({0.1, 0.2, 0.3});
  CHECK(area_term(f, v, AreaInterpretation::literal) == doctest::Approx(area_term(expand(f, 80), v)).epsilon(1e-12));
}
