#pragma once

#include <optional>
#include <vector>

#include "slopekit/ext_real.hpp"
#include "slopekit/product.hpp"
#include "slopekit/space.hpp"

namespace slopekit {

// A dual vector over a product space: the X* part and the Y* part. For
// single-variable functions the Y* part has dimension zero.
struct DualVec {
  Point x;
  Point y;

  static DualVec xonly(const Point& xs) {
    DualVec v;
    v.x = xs;
    v.y.dim = 0;
    return v;
  }
  static DualVec pair(const Point& xs, const Point& ys) {
    DualVec v;
    v.x = xs;
    v.y = ys;
    return v;
  }
};

// Polyhedral description of a set of dual vectors.
//
// hull = false: the set is exactly the listed `vertices` (a finite family of
// representative dual vectors, the desk-scale model of a subdifferential).
//
// hull = true: conv(vertices) + cone(rays) + span(lines). Normal cones and
// indicator-sum subdifferentials use this form; minimization over it runs
// through a small active-set least-squares enumeration.
//
// An empty vertex list means the empty set in both modes.
struct DualSet {
  bool hull = false;
  std::vector<DualVec> vertices;
  std::vector<DualVec> rays;
  std::vector<DualVec> lines;

  bool empty() const { return vertices.empty(); }

  static DualSet list(std::vector<DualVec> vs) {
    DualSet s;
    s.vertices = std::move(vs);
    return s;
  }
  static DualSet empty_set() { return DualSet{}; }
  // Cone through the origin: used for normal cones.
  static DualSet cone(int dx, int dy, std::vector<DualVec> rays, std::vector<DualVec> lines);
};

// Result of minimizing over a fixed Y* slice of a hull-form set.
struct SliceSolution {
  bool feasible = false;
  double min_norm = 0.0;  // Euclidean norm of the X* part
  Point xstar;            // attaining vector
};

// min ||x*|| over { (x*, y*) in set : y* = target }. Hull form only; the
// X*-norm is Euclidean (identical to every norm in dimension one, which is
// where non-L2 fixtures live).
SliceSolution min_xnorm_at_ystar(const DualSet& set, const Point& target);

// min ||x*|| over the whole set. Lists use the requested dual norm; hull
// form uses the Euclidean enumerator.
ExtReal min_xnorm(const DualSet& set, NormKind x_primal);

// min ||x*|| over { (x*, y*) in set : ||y*|| < rho } (or <= when strict is
// false). Lists filter exactly; hull form scans a deterministic slice grid
// of the Y*-ball (extreme points, half-radius ring and center), which is
// exact for the polyhedral data used by the fixtures.
ExtReal min_xnorm_with_ynorm_bound(const DualSet& set, NormKind x_primal, NormKind y_primal,
                                   double rho, bool strict);

// min over the set of ||x*|| + (1/rho)||y*||. Exact on lists; hull-form
// sets are not supported (reported as absent) because the mixed objective
// has no slice structure.
std::optional<ExtReal> min_dual_rho_norm(const DualSet& set, NormKind x_primal,
                                         NormKind y_primal, double rho);

}  // namespace slopekit
