#include "slopekit/probe_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slopekit {

bool LevelSet::contains(const Point& p) const {
  ExtReal v = parent->eval(p);
  return v.finite() && v.raw() <= 0.0;
}

LevelSet level_set(const ProbeFunction& f) { return LevelSet{&f}; }

std::vector<Point> grid_ball(const EuclideanSpace& space, const Point& center, double radius,
                             double spacing) {
  if (radius <= 0.0 || spacing <= 0.0) throw std::invalid_argument("grid_ball: bad extent");
  int steps = static_cast<int>(std::ceil(radius / spacing));
  // Cap the lattice so a deep schedule cannot allocate unboundedly; the cap
  // coarsens spacing, never shrinks coverage.
  const int cap = space.dim() == 1 ? 4096 : (space.dim() == 2 ? 96 : 24);
  if (steps > cap) steps = cap;
  double step = radius / steps;

  std::vector<Point> out;
  auto coord = [&](int i, int axis) { return center[axis] + i * step; };
  if (space.dim() == 1) {
    out.reserve(static_cast<size_t>(2 * steps + 1));
    for (int i = -steps; i <= steps; ++i) out.push_back(Point::of(coord(i, 0)));
  } else if (space.dim() == 2) {
    out.reserve(static_cast<size_t>(2 * steps + 1) * (2 * steps + 1));
    for (int i = -steps; i <= steps; ++i)
      for (int j = -steps; j <= steps; ++j) out.push_back(Point::of(coord(i, 0), coord(j, 1)));
  } else {
    for (int i = -steps; i <= steps; ++i)
      for (int j = -steps; j <= steps; ++j)
        for (int k = -steps; k <= steps; ++k)
          out.push_back(Point::of(coord(i, 0), coord(j, 1), coord(k, 2)));
  }
  return out;
}

std::vector<Point> sample_region(const ProbeFunction& f, const Point& center, double radius,
                                 double spacing) {
  if (f.space.is_finite()) return f.space.all_points();
  std::vector<Point> out = f.base_grid;
  std::vector<Point> ball = grid_ball(f.space.euclidean(), center, radius, spacing);
  out.insert(out.end(), ball.begin(), ball.end());
  return out;
}

DistResult dist_to_level_set(const ProbeFunction& f, const Point& x, double search_radius,
                             double spacing) {
  DistResult res;
  auto consider = [&](const Point& u) {
    ExtReal v = f.eval(u);
    if (!v.finite() || v.raw() > 0.0) return;
    double d = f.space.dist(x, u);
    if (res.value.is_inf() || d < res.value.raw()) res.value = ExtReal(d);
  };

  if (f.space.is_finite()) {
    for (const Point& u : f.space.all_points()) consider(u);
    return res;  // exhaustive: never truncated
  }

  for (const Point& u : f.base_grid) consider(u);
  consider(f.xbar);
  if (search_radius > 0.0 && spacing > 0.0) {
    for (const Point& u : grid_ball(f.space.euclidean(), x, search_radius, spacing)) consider(u);
  }
  res.truncated = res.value.is_inf();
  return res;
}

}  // namespace slopekit
