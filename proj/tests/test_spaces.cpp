#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "slopekit/dual_set.hpp"
#include "slopekit/probe_function.hpp"
#include "slopekit/product.hpp"
#include "slopekit/space.hpp"

using namespace slopekit;

TEST_CASE("FiniteMetricSpace validates the metric axioms at construction") {
  // A path metric on three points.
  FiniteMetricSpace ok({"a", "b", "c"}, {0, 1, 2, 1, 0, 1, 2, 1, 0});
  CHECK(ok.size() == 3);
  CHECK(ok.dist(0, 2) == 2.0);
  CHECK(ok.label(1) == "b");

  // Asymmetry.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 1, 2, 0}), std::invalid_argument);
  // Nonzero diagonal.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {1, 1, 1, 0}), std::invalid_argument);
  // Negative distance.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, -1, -1, 0}), std::invalid_argument);
  // Triangle violation: d(a,c) = 5 > d(a,b) + d(b,c) = 2.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b", "c"}, {0, 1, 5, 1, 0, 1, 5, 1, 0}),
                  std::invalid_argument);
  // Matrix size mismatch.
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("FiniteMetricSpace enforces the point cap") {
  std::size_t n = FiniteMetricSpace::kMaxPoints + 1;
  std::vector<std::string> labels(n, "p");
  // Discrete metric: all off-diagonal distances one.
  std::vector<double> d(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  CHECK_THROWS_AS(FiniteMetricSpace(std::move(labels), std::move(d)), std::invalid_argument);
}

TEST_CASE("Euclidean distances follow the chosen norm") {
  Point a = Point::of(1.0, 2.0);
  Point b = Point::of(4.0, -2.0);
  CHECK(EuclideanSpace(2, NormKind::L2).dist(a, b) == doctest::Approx(5.0));
  CHECK(EuclideanSpace(2, NormKind::L1).dist(a, b) == doctest::Approx(7.0));
  CHECK(EuclideanSpace(2, NormKind::LInf).dist(a, b) == doctest::Approx(4.0));

  Point u = Point::of(1.0, -2.0, 2.0);
  CHECK(norm_of(u, NormKind::L2) == doctest::Approx(3.0));
  CHECK(norm_of(u, NormKind::L1) == doctest::Approx(5.0));
  CHECK(norm_of(u, NormKind::LInf) == doctest::Approx(2.0));
}

TEST_CASE("dual norms pair as expected") {
  CHECK(dual_norm_kind(NormKind::L2) == NormKind::L2);
  CHECK(dual_norm_kind(NormKind::L1) == NormKind::LInf);
  CHECK(dual_norm_kind(NormKind::LInf) == NormKind::L1);
}

TEST_CASE("Space dispatches by kind and guards accessors") {
  Space fin{FiniteMetricSpace({"a", "b"}, {0, 2, 2, 0})};
  CHECK(fin.is_finite());
  CHECK(fin.all_points().size() == 2);
  CHECK(fin.dist(Point::finite(0), Point::finite(1)) == 2.0);
  CHECK_THROWS_AS(fin.euclidean(), std::logic_error);

  Space euc{EuclideanSpace(1, NormKind::L2)};
  CHECK(euc.is_euclidean());
  CHECK(euc.dist(Point::of(-1.0), Point::of(2.0)) == doctest::Approx(3.0));
  CHECK_THROWS_AS(euc.finite(), std::logic_error);
}

TEST_CASE("grid_ball anchors at the center and never exceeds the spacing") {
  EuclideanSpace line(1, NormKind::L2);
  auto pts = grid_ball(line, Point::of(0.25), 1.0, 0.25);
  REQUIRE(pts.size() == 9);  // steps = 4, offsets -4..4
  CHECK(pts.front()[0] == doctest::Approx(-0.75));
  CHECK(pts[4][0] == doctest::Approx(0.25));  // the center itself
  CHECK(pts.back()[0] == doctest::Approx(1.25));

  // A radius that is not a multiple of the spacing divides evenly, so the
  // realized step shrinks below the request rather than losing coverage.
  auto tight = grid_ball(line, Point::of(0.0), 1.5, 1.0);
  REQUIRE(tight.size() == 5);
  CHECK(tight[1][0] - tight[0][0] == doctest::Approx(0.75));

  // The lattice cap coarsens wide scans instead of allocating unboundedly.
  auto wide = grid_ball(line, Point::of(0.0), 100.0, 1e-6);
  CHECK(wide.size() == 2 * 4096 + 1);
  CHECK(wide.back()[0] == doctest::Approx(100.0));

  EuclideanSpace plane(2, NormKind::L2);
  auto plane_pts = grid_ball(plane, Point::of(0.0, 0.0), 10.0, 1e-6);
  CHECK(plane_pts.size() == (2 * 96 + 1) * (2 * 96 + 1));

  CHECK_THROWS_AS(grid_ball(line, Point::of(0.0), 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(grid_ball(line, Point::of(0.0), 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("rho combiners scale the range coordinate") {
  CHECK(rho_dist(3.0, 4.0, 0.5, RhoCombiner::Max) == doctest::Approx(3.0));
  CHECK(rho_dist(1.0, 4.0, 0.5, RhoCombiner::Max) == doctest::Approx(2.0));
  CHECK(rho_dist(3.0, 4.0, 0.5, RhoCombiner::Sum) == doctest::Approx(5.0));

  ProductSpace prod{Space(EuclideanSpace(1, NormKind::L2)), Space(EuclideanSpace(1, NormKind::L2)),
                    1.0, RhoCombiner::Max};
  CHECK(prod.dist(Point::of(0.0), Point::of(0.0), Point::of(1.0), Point::of(3.0), 0.25) ==
        doctest::Approx(1.0));
}

TEST_CASE("dual_rho_norm inflates the range dual part") {
  double v = dual_rho_norm(Point::of(3.0, 4.0), NormKind::L2, Point::of(2.0), NormKind::L2, 0.5);
  CHECK(v == doctest::Approx(5.0 + 4.0));
}

TEST_CASE("duality_map returns the norming face extreme points") {
  auto l2 = duality_map(Point::of(3.0, 4.0), NormKind::L2);
  REQUIRE(l2.size() == 1);
  CHECK(l2[0][0] == doctest::Approx(0.6));
  CHECK(l2[0][1] == doctest::Approx(0.8));

  // L1: signs on the support; the zero coordinate is free at both signs.
  auto l1 = duality_map(Point::of(2.0, 0.0), NormKind::L1);
  REQUIRE(l1.size() == 2);
  for (const Point& p : l1) {
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(std::abs(p[1]) == doctest::Approx(1.0));
  }

  // LInf: one dual basis vector per maximal coordinate.
  auto li = duality_map(Point::of(2.0, -2.0), NormKind::LInf);
  REQUIRE(li.size() == 2);
  CHECK(norm_of(li[0], NormKind::L1) == doctest::Approx(1.0));
}

TEST_CASE("unit sphere samples are deterministic unit vectors") {
  auto a = unit_sphere_points(2, NormKind::L2);
  auto b = unit_sphere_points(2, NormKind::L2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(norm_of(a[i], NormKind::L2) == doctest::Approx(1.0));
  }

  auto l1 = unit_sphere_points(2, NormKind::L1);
  CHECK(l1.size() == 4);  // +-e1, +-e2

  auto ball = ball_points(1, NormKind::L2, 0.5, true);
  bool has_center = false;
  for (const Point& p : ball) {
    CHECK(norm_of(p, NormKind::L2) <= 0.5 + 1e-12);
    has_center = has_center || p[0] == 0.0;
  }
  CHECK(has_center);
}

TEST_CASE("dual set minimization handles lists and hull slices") {
  // Plain list: minimum over the stated vectors in the requested norm.
  DualSet list = DualSet::list({DualVec::xonly(Point::of(3.0, 4.0)),
                                DualVec::xonly(Point::of(0.0, 2.0))});
  CHECK(min_xnorm(list, NormKind::L2).raw() == doctest::Approx(2.0));
  CHECK(min_xnorm(DualSet::empty_set(), NormKind::L2).is_inf());

  // The identity graph's normal cone: the line spanned by (1, -1).
  DualSet cone = DualSet::cone(1, 1, {}, {DualVec::pair(Point::of(1.0), Point::of(-1.0))});
  SliceSolution at1 = min_xnorm_at_ystar(cone, Point::of(-1.0));
  CHECK(at1.feasible);
  CHECK(at1.min_norm == doctest::Approx(1.0));
  SliceSolution at0 = min_xnorm_at_ystar(cone, Point::of(0.0));
  CHECK(at0.feasible);
  CHECK(at0.min_norm == doctest::Approx(0.0));

  // Range-dual bound: strict filtering drops the large-y* vector.
  DualSet pairs = DualSet::list({DualVec::pair(Point::of(2.0), Point::of(0.3)),
                                 DualVec::pair(Point::of(0.5), Point::of(0.9))});
  CHECK(min_xnorm_with_ynorm_bound(pairs, NormKind::L2, NormKind::L2, 0.5, true).raw() ==
        doctest::Approx(2.0));
  CHECK(min_xnorm_with_ynorm_bound(pairs, NormKind::L2, NormKind::L2, 1.0, true).raw() ==
        doctest::Approx(0.5));

  // Mixed rho-norm objective: exact on lists, absent on hull form.
  auto mixed = min_dual_rho_norm(pairs, NormKind::L2, NormKind::L2, 0.5);
  REQUIRE(mixed.has_value());
  CHECK(mixed->raw() == doctest::Approx(0.5 + 0.9 / 0.5));
  CHECK_FALSE(min_dual_rho_norm(cone, NormKind::L2, NormKind::L2, 0.5).has_value());
}
