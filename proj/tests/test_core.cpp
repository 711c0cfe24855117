#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "slopekit/ext_real.hpp"
#include "slopekit/limits.hpp"

using namespace slopekit;

static const double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("ExtReal accepts finite values and +inf only") {
  ExtReal zero;
  CHECK(zero.finite());
  CHECK(zero.raw() == 0.0);

  ExtReal v(2.5);
  CHECK(v.finite());
  CHECK(v.value() == 2.5);

  ExtReal inf = ExtReal::infinity();
  CHECK(inf.is_inf());
  CHECK(inf.raw() == kInf);
  CHECK_THROWS_AS(inf.value(), std::logic_error);

  CHECK_THROWS_AS(ExtReal(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(-kInf), std::invalid_argument);
}

TEST_CASE("ExtReal order treats +inf as the top element") {
  ExtReal a(1.0), b(2.0), inf = ExtReal::infinity();
  CHECK(a < b);
  CHECK(b < inf);
  CHECK(inf <= inf);
  CHECK(inf == ExtReal::infinity());
  CHECK(ext_min(a, inf) == a);
  CHECK(ext_max(a, inf).is_inf());
  CHECK((a + inf).is_inf());
  CHECK((a + b) == ExtReal(3.0));
}

TEST_CASE("ExtReal str is shortest round-trip") {
  CHECK(ExtReal(0.5).str() == "0.5");
  CHECK(ExtReal(1e-6).str() == "1e-06");
  CHECK(ExtReal(0.99951171875).str() == "0.99951171875");
  CHECK(ExtReal::infinity().str() == "inf");
}

TEST_CASE("positive_part clips below zero") {
  CHECK(positive_part(ExtReal(-3.0)) == ExtReal(0.0));
  CHECK(positive_part(ExtReal(3.0)) == ExtReal(3.0));
  CHECK(positive_part(ExtReal::infinity()).is_inf());
}

TEST_CASE("diff_pos clips and absorbs infinities one-sidedly") {
  CHECK(diff_pos(ExtReal(2.0), ExtReal(0.5)) == ExtReal(1.5));
  CHECK(diff_pos(ExtReal(0.5), ExtReal(2.0)) == ExtReal(0.0));
  CHECK(diff_pos(ExtReal(1.0), ExtReal::infinity()) == ExtReal(0.0));
  CHECK(diff_pos(ExtReal::infinity(), ExtReal(1.0)).is_inf());
  CHECK_THROWS_AS(diff_pos(ExtReal::infinity(), ExtReal::infinity()), std::logic_error);
}

TEST_CASE("extreal_div follows the stated quotient conventions") {
  ExtReal zz(7.0);  // sentinel so the 0/0 branch is visible
  CHECK(extreal_div(ExtReal(1.0), ExtReal(4.0), zz) == ExtReal(0.25));
  CHECK(extreal_div(ExtReal(1.0), ExtReal(0.0), zz).is_inf());
  CHECK(extreal_div(ExtReal(0.0), ExtReal(0.0), zz) == zz);
  CHECK(extreal_div(ExtReal(1.0), ExtReal::infinity(), zz) == ExtReal(0.0));
  CHECK(extreal_div(ExtReal::infinity(), ExtReal(2.0), zz).is_inf());
  CHECK_THROWS_AS(extreal_div(ExtReal::infinity(), ExtReal::infinity(), zz), std::logic_error);
}

TEST_CASE("RadiusSchedule produces the geometric ladder") {
  RadiusSchedule s{1.0, 0.5, 4};
  auto r = s.radii();
  REQUIRE(r.size() == 4);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == 0.5);
  CHECK(r[2] == 0.25);
  CHECK(r[3] == 0.125);

  RadiusSchedule d;  // defaults drive every fixture in the suite
  auto rd = d.radii();
  REQUIRE(rd.size() == 12);
  CHECK(rd.back() == 0.00048828125);
}

TEST_CASE("RadiusSchedule rejects degenerate parameters") {
  CHECK_THROWS_AS((RadiusSchedule{0.0, 0.5, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSchedule{kInf, 0.5, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSchedule{1.0, 0.0, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSchedule{1.0, 1.0, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((RadiusSchedule{1.0, 0.5, 0}.validate()), std::invalid_argument);
}

TEST_CASE("estimate_limit reads the last rung and tracks the trend") {
  RadiusSchedule s{1.0, 0.5, 4};

  auto increasing = [](double rho) { return ExtReal(2.0 - rho); };
  LimitEstimate a = estimate_limit(increasing, s, 1e-6);
  REQUIRE(a.per_radius.size() == 4);
  CHECK(a.per_radius[0].second == ExtReal(1.0));
  CHECK(a.reported == ExtReal(1.875));
  CHECK(a.monotone);
  CHECK_FALSE(a.saturated);  // last two rungs still differ by 0.125

  auto constant = [](double) { return ExtReal(3.0); };
  LimitEstimate b = estimate_limit(constant, s, 1e-6);
  CHECK(b.reported == ExtReal(3.0));
  CHECK(b.monotone);
  CHECK(b.saturated);

  auto decreasing = [](double rho) { return ExtReal(rho); };
  LimitEstimate c = estimate_limit(decreasing, s, 1e-6);
  CHECK_FALSE(c.monotone);

  auto empty = [](double) { return ExtReal::infinity(); };
  LimitEstimate e = estimate_limit(empty, s, 1e-6);
  CHECK(e.reported.is_inf());
  CHECK(e.all_infinite());
  CHECK(e.saturated);
  CHECK(e.has_note("all-bands-empty"));
}

TEST_CASE("estimate_limit rejects unusable inputs") {
  RadiusSchedule one{1.0, 0.5, 1};
  CHECK_THROWS_AS(estimate_limit([](double) { return ExtReal(0.0); }, one, 1e-6),
                  std::invalid_argument);
  RadiusSchedule s{1.0, 0.5, 4};
  CHECK_THROWS_AS(estimate_limit([](double) { return ExtReal(0.0); }, s, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_over_radii([](const BandRadius&) { return ExtReal(0.0); }, {}, 1e-6,
                                      LimitTrend::NondecreasingInf),
                  std::invalid_argument);
}

TEST_CASE("estimate_over_radii honors the supremum trend") {
  std::vector<BandRadius> rs{{1.0, false}, {0.5, false}, {0.25, false}};
  auto shrink = [](const BandRadius& r) { return ExtReal(r.rho); };
  LimitEstimate sup = estimate_over_radii(shrink, rs, 1e-6, LimitTrend::NonincreasingSup);
  CHECK(sup.monotone);
  LimitEstimate inf = estimate_over_radii(shrink, rs, 1e-6, LimitTrend::NondecreasingInf);
  CHECK_FALSE(inf.monotone);
}

TEST_CASE("radii_with_snap appends the closed threshold rung") {
  RadiusSchedule s{1.0, 0.5, 4};

  auto rs = radii_with_snap(s, 0.3);
  REQUIRE(rs.size() == 3);  // 1 and 0.5 stay open; 0.25 <= 0.3 is dropped
  CHECK(rs[0].rho == 1.0);
  CHECK_FALSE(rs[0].closed);
  CHECK(rs[1].rho == 0.5);
  CHECK(rs[2].rho == 0.3);
  CHECK(rs[2].closed);

  auto full = radii_with_snap(s, kInf);
  REQUIRE(full.size() == 4);
  CHECK_FALSE(full.back().closed);

  // Threshold at or above the whole ladder: only the closed rung remains.
  auto high = radii_with_snap(s, 2.0);
  REQUIRE(high.size() == 1);
  CHECK(high[0].rho == 2.0);
  CHECK(high[0].closed);
}

TEST_CASE("LimitEstimate note helpers deduplicate") {
  LimitEstimate e;
  e.add_note("n");
  e.add_note("n");
  CHECK(e.notes.size() == 1);
  CHECK(e.has_note("n"));
  CHECK_FALSE(e.has_note("m"));
}
