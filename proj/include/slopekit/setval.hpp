#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/dual_set.hpp"
#include "slopekit/limits.hpp"
#include "slopekit/slopes1.hpp"
#include "slopekit/slopes2.hpp"
#include "slopekit/space.hpp"
#include "slopekit/two_var.hpp"

namespace slopekit {

// Set-valued mapping between two probe spaces with a distinguished graph
// point (xbar, ybar). The graph is described by a membership oracle plus
// samplers; finite-space mappings need only the oracle (everything is
// enumerated), Euclidean fixtures supply the samplers below.
//
//   contains(x, y)            whether y belongs to F(x)
//   graph_samples(c, r, s)    graph pairs near the pair c at spacing s
//   image_samples(x, r, s)    points of F(x) within r of ybar (empty when
//                             F(x) misses that window)
//   preimage_samples(x, r, s) points of F^{-1}(ybar) near x
//   normal_cone(x, y)         generator description of the normal cone to
//                             the graph at (x, y); optional, polyhedral or
//                             smooth fixtures only
struct SetValuedMapping {
  std::string name;
  Space X;
  Space Y;
  Point xbar;
  Point ybar;

  std::function<bool(const Point&, const Point&)> contains;
  std::function<std::vector<PairPt>(const PairPt& center, double radius, double spacing)>
      graph_samples;
  std::function<std::vector<Point>(const Point& x, double radius, double spacing)> image_samples;
  std::function<std::vector<Point>(const Point& xcenter, double radius, double spacing)>
      preimage_samples;
  std::function<DualSet(const Point&, const Point&)> normal_cone;

  bool convex = false;
  bool closed = true;
  bool complete = true;
  double domain_radius = 2.0;

  bool has_normal_cone() const { return static_cast<bool>(normal_cone); }
  bool normed() const { return X.is_euclidean() && Y.is_euclidean(); }
  // Range norm differentiable away from the origin at desk scale: the
  // Euclidean norm, or any norm in dimension one.
  bool y_norm_smooth() const {
    return Y.is_euclidean() && (Y.euclidean().norm() == NormKind::L2 || Y.euclidean().dim() == 1);
  }
  bool in_preimage_of_base(const Point& x) const { return contains(x, ybar); }
};

// Swapped-graph mapping: y belongs to F(x) exactly when x belongs to the
// inverse image. Distance helpers on the inverse need finite spaces (the
// directional samplers are not transported); the normal cone transports by
// swapping dual components.
SetValuedMapping inverse_mapping(const SetValuedMapping& F);

// d(ybar, F(x)): smallest range distance from the base value to the image.
// Finite ranges enumerate; Euclidean ranges query image_samples on doubling
// windows. An empty image yields +infinity with the truncation flag set.
DistResult dist_to_image(const SetValuedMapping& F, const Point& x, double search_radius,
                         double spacing);

// d(x, F^{-1}(ybar)): distance to the solution set. Always finite (xbar is
// a member); Euclidean domains combine preimage_samples with xbar.
DistResult dist_to_preimage(const SetValuedMapping& F, const Point& x, double search_radius,
                            double spacing);

// The scalar reduction: f(x, y) = d(y, ybar) on the graph, +infinity off
// it. Its zero sublevel slice at ybar is exactly F^{-1}(ybar), and the pair
// validity conditions hold by construction. When a normal-cone oracle is
// present on a Euclidean one-dimensional range, the product subdifferential
// is the cone translated by the norming functional of y - ybar.
TwoVarFunction induced_function(const SetValuedMapping& F);

// Band infima over {d(x, xbar) < rho, x outside F^{-1}(ybar)} of
// d(ybar, F(x)) / d(x, F^{-1}(ybar)). A positive limit certifies metric
// subregularity at desk scale: tau d(x, F^{-1}(ybar)) <= d(ybar, F(x))
// near xbar with tau equal to the reported value.
LimitEstimate subregularity_constant(const SetValuedMapping& F, const TwoVarConfig& cfg);

// Slope readings of the scalar reduction at a graph pair: identical to the
// two-variable operations applied to induced_function(F).
PointwiseValue F_nonlocal_rho_slope(const SetValuedMapping& F, const Point& x, const Point& y,
                                    double rho, const TwoVarConfig& cfg);
PointwiseValue F_local_rho_slope(const SetValuedMapping& F, const Point& x, const Point& y,
                                 double rho, const TwoVarConfig& cfg);

// Band limits of the readings above over graph pairs with x outside
// F^{-1}(ybar), both coordinates inside the rung, and the metric parameter
// tied to the rung.
LimitEstimate F_uniform_strict_slope(const SetValuedMapping& F, const TwoVarConfig& cfg);
LimitEstimate F_strict_slope(const SetValuedMapping& F, const TwoVarConfig& cfg);

// liminf of d(y, ybar) / d(x, xbar) over the same bands.
LimitEstimate F_ratio_liminf(const SetValuedMapping& F, const TwoVarConfig& cfg);

// Minimum-norm description of {x* : (x*, -y*) normal to the graph at
// (x, y)}. evaluable reflects the oracle; feasible reflects a nonempty
// slice. The set scales positively in y*, so the representative is enough
// for every slope built from it.
struct CoderivativeResult {
  bool evaluable = false;
  bool feasible = false;
  double min_norm = 0.0;
  Point min_point;
};
CoderivativeResult coderivative(const SetValuedMapping& F, const Point& x, const Point& y,
                                const Point& ystar);

// inf ||x*|| over the coderivative evaluated on the norming face of
// y - ybar fattened by the closed dual ball of radius rho (extreme points
// plus center). Empty admissible set reports +infinity; absent oracle, a
// non-normed space, or y = ybar reports no value.
std::optional<ExtReal> F_subdiff_rho_slope(const SetValuedMapping& F, const Point& x,
                                           const Point& y, double rho);

// Same quantity with an inner pass over range perturbations v near
// y - ybar: the reading at the finest vgrid radius, center always
// included, so the approximate value never exceeds the plain one.
std::optional<ExtReal> F_approx_subdiff_rho_slope(const SetValuedMapping& F, const Point& x,
                                                  const Point& y, double rho,
                                                  const std::vector<double>& vgrid);

// Band limits of the two subdifferential readings over the graph bands,
// rho tied to the rung (the approximate version also shrinks its v-grid
// with the rung).
LimitEstimate F_strict_subdiff_slope(const SetValuedMapping& F, const TwoVarConfig& cfg);
LimitEstimate F_approx_strict_subdiff_slope(const SetValuedMapping& F, const TwoVarConfig& cfg);

// Sampled probe of the directional limit set: scales t from the schedule,
// directions u on the domain unit sphere, graph points over the image
// sampler give v = (y - ybar)/t, and unit dual directions drive the
// coderivative slices. Each admissible sample scores
// max{||v||, min ||x*||}; a rung keeps its smallest score.
struct GfrererWitness {
  double t = 0.0;
  Point u;
  PairPt at;
  Point v;
  Point ystar;
  Point xstar;
  double score = 0.0;
};

// excludes_origin is one-sided evidence: true when the finest rung's score
// stays above the threshold derived from the coarsest rung. A rung with no
// admissible samples sets exhausted and contributes nothing.
struct GfrererResult {
  bool evaluable = false;
  bool excludes_origin = false;
  double threshold = 0.0;
  bool exhausted = false;
  std::vector<double> rung_scale;
  std::vector<double> rung_min;
  std::vector<GfrererWitness> witnesses;
};
GfrererResult gfrerer_limit_test(const SetValuedMapping& F, const RadiusSchedule& schedule,
                                 int unit_samples);

// Criteria chain for metric subregularity at gamma: conditions (a)..(h)
// (subregularity constant, nonlocal and local strict slopes, ratio, mixed
// bands, and the three coderivative-based readings), implication audits
// over the evaluated verdicts, and the qualitative chain at a positivity
// floor. Oracle-dependent conditions are marked not evaluable when the
// normal cone or the norm structure is missing.
CriteriaVerdict subregularity_verdict(const SetValuedMapping& F, double gamma,
                                      const TwoVarConfig& cfg);

// Exhaustive finite-relation check that the subregularity inequality with
// constant tau and the inverse-calmness inequality with constant 1/tau
// accept exactly the same data.
struct CalmnessCheck {
  bool evaluable = false;
  double tau = 0.0;
  bool subregularity_holds = false;
  bool calmness_holds = false;
  bool equivalent = false;
  int graph_pairs = 0;
};
CalmnessCheck calmness_duality_check(const SetValuedMapping& F, double tau);

}  // namespace slopekit
