#pragma once

#include <vector>

#include "slopekit/space.hpp"

namespace slopekit {

// How a product metric scales the second factor: either
//   max(d_X, rho * d_Y)   or   d_X + rho * d_Y.
// The max form is the canonical one; the sum form exists to exercise the
// invariance of the limit results under any metric sandwiched between them.
enum class RhoCombiner { Max, Sum };

const char* combiner_name(RhoCombiner c);

double rho_dist(double dx, double dy, double rho, RhoCombiner c);

// Product of two spaces with a scaling parameter. rho is a default for
// reporting; the slope machinery varies it per radius and always passes it
// explicitly.
struct ProductSpace {
  Space X;
  Space Y;
  double rho = 1.0;
  RhoCombiner combiner = RhoCombiner::Max;

  double dist(const Point& x1, const Point& y1, const Point& x2, const Point& y2,
              double rho_override) const {
    return rho_dist(X.dist(x1, x2), Y.dist(y1, y2), rho_override, combiner);
  }
};

// Norm on the product dual paired with the max-type product metric:
//   ||(x*, y*)|| = ||x*||_* + (1/rho) ||y*||_*.
// Factor duals follow dual_norm_kind (L2<->L2, L1<->LInf, LInf<->L1).
double dual_rho_norm(const Point& xstar, NormKind x_primal, const Point& ystar,
                     NormKind y_primal, double rho);

// Duality map J(y): the norming functionals of y, i.e. dual vectors of unit
// dual norm pairing to ||y||. Returned as the extreme points of that face:
//   L2: the single vector y/||y||;
//   L1: sign pattern on the support, free coordinates at +-1;
//   LInf: one dual basis vector per maximal coordinate.
// Requires y != 0 (at zero the set is the whole dual ball, which callers
// handle separately).
std::vector<Point> duality_map(const Point& y, NormKind y_primal);

// Deterministic sample of the unit sphere of R^dim under the given norm:
// the extreme points for polyhedral norms, a fixed direction fan for L2.
std::vector<Point> unit_sphere_points(int dim, NormKind k);

// unit_sphere_points scaled by radius, optionally with the origin included.
// Used to discretize dual-ball perturbations.
std::vector<Point> ball_points(int dim, NormKind k, double radius, bool include_center);

}  // namespace slopekit
