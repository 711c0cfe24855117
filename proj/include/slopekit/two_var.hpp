#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slopekit/dual_set.hpp"
#include "slopekit/ext_real.hpp"
#include "slopekit/limits.hpp"
#include "slopekit/probe_function.hpp"
#include "slopekit/product.hpp"
#include "slopekit/space.hpp"

namespace slopekit {

struct PairPt {
  Point x;
  Point y;

  friend bool operator==(const PairPt& a, const PairPt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const PairPt& a, const PairPt& b) { return !(a == b); }
};

// Extended-real function on a product space X x Y with a base pair where it
// vanishes. Fixtures provide the evaluation oracle, a pair sampler covering
// the effective domain, and (for Euclidean X) the zero sublevel slice
// S = {u : f(u, ybar) <= 0} used in distance computations.
struct TwoVarFunction {
  std::string name;
  Space X;
  Space Y;
  Point xbar;
  Point ybar;

  std::function<ExtReal(const Point&, const Point&)> eval;
  std::function<DualSet(const Point&, const Point&)> subdiff;  // product subgradients; optional
  bool subdiff_exact = false;

  bool convex = false;
  bool lsc = true;
  bool complete = true;
  double domain_radius = 2.0;

  // Candidate pairs near `center`: base coverage plus refinement around the
  // center at the given spacing. Finite products enumerate everything.
  std::function<std::vector<PairPt>(const PairPt& center, double radius, double spacing)> samples;
  // Points of S near xcenter; optional on finite products (enumerated).
  std::function<std::vector<Point>(const Point& xcenter, double radius, double spacing)> sublevel;

  bool has_subdiff() const { return static_cast<bool>(subdiff); }
  ExtReal fplus(const Point& x, const Point& y) const { return positive_part(eval(x, y)); }
  double dx(const Point& a, const Point& b) const { return X.dist(a, b); }
  double dy(const Point& a, const Point& b) const { return Y.dist(a, b); }
  // rho-metric between pairs.
  double pdist(const PairPt& a, const PairPt& b, double rho, RhoCombiner c) const {
    return rho_dist(dx(a.x, b.x), dy(a.y, b.y), rho, c);
  }
};

// Extension of a one-variable function to X x Y: equal to f on the slice
// y = ybar, +infinity elsewhere. Every slope-type quantity of the extension
// collapses to the corresponding quantity of f.
TwoVarFunction embed_slice(const ProbeFunction& f, const Space& Y, const Point& ybar);

struct PairValidation {
  bool p1_ok = true;           // f > 0 at every sampled pair with y != ybar
  int p1_violations = 0;
  LimitEstimate p2_lower;      // band infima of f / d(y, ybar) over {0 < f < rho}
};

// Samples the domain for the positivity condition and estimates the ratio
// lower bound that makes y -> ybar automatic when f tends to zero.
PairValidation validate_pair_conditions(const TwoVarFunction& g, const RadiusSchedule& schedule,
                                        double tol, int band_resolution);

// Distance from x to S = {u : f(u, ybar) <= 0}. Exhaustive on finite X;
// Euclidean fixtures answer through their sublevel sampler (xbar always
// considered when it belongs to S).
DistResult dist_to_sublevel_slice(const TwoVarFunction& g, const Point& x, double search_radius,
                                  double spacing);

}  // namespace slopekit
