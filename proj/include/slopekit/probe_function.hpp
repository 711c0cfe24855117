#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slopekit/dual_set.hpp"
#include "slopekit/ext_real.hpp"
#include "slopekit/space.hpp"

namespace slopekit {

// Extended-real function on a probe space. Functions are evaluation oracles:
// nothing is differentiated symbolically, and subdifferential data (when a
// fixture has it) arrives through the optional `subdiff` callback.
struct ProbeFunction {
  std::string name;
  Space space;
  Point xbar;  // reference point for modulus/band work; fixtures keep f(xbar) = 0

  std::function<ExtReal(const Point&)> eval;
  std::function<DualSet(const Point&)> subdiff;  // null: no oracle
  bool subdiff_exact = false;  // oracle returns the full set (convex fixtures)

  bool convex = false;
  bool lsc = true;
  bool complete = true;  // ambient-space completeness metadata for criteria work

  // Euclidean fixtures: coarse coverage of the region of interest plus its
  // extent; finite-space fixtures leave these empty.
  std::vector<Point> base_grid;
  double domain_radius = 2.0;

  bool has_subdiff() const { return static_cast<bool>(subdiff); }
  ExtReal fplus(const Point& p) const { return positive_part(eval(p)); }
};

// Zero sublevel set {x : f(x) <= 0} as a membership view.
struct LevelSet {
  const ProbeFunction* parent = nullptr;
  bool contains(const Point& p) const;
};

LevelSet level_set(const ProbeFunction& f);

// Lattice covering the ball of the given radius around center, step <=
// spacing, lattice anchored at the center so refinements around the same
// center nest. Dimension comes from the space.
std::vector<Point> grid_ball(const EuclideanSpace& space, const Point& center, double radius,
                             double spacing);

// Candidate samples for scanning a region around `center`: finite spaces
// enumerate everything (radius and spacing ignored); Euclidean fixtures
// return base_grid plus grid_ball(center, radius, spacing).
std::vector<Point> sample_region(const ProbeFunction& f, const Point& center, double radius,
                                 double spacing);

struct DistResult {
  ExtReal value = ExtReal::infinity();
  bool truncated = false;  // the search region may have clipped the set
};

// Distance from x to {f <= 0}. Exact enumeration on finite spaces; on
// Euclidean fixtures scans base_grid plus a lattice around x of the given
// search radius (xbar is always included when it belongs to the set).
DistResult dist_to_level_set(const ProbeFunction& f, const Point& x, double search_radius,
                             double spacing);

}  // namespace slopekit
