#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopekit/limits.hpp"
#include "slopekit/slopes1.hpp"
#include "slopekit/two_var.hpp"

namespace slopekit {

// Knobs for the two-variable machinery. The metric parameter rho and the
// band radius shrink together: each schedule rung rho_k is used both as the
// band threshold and as the rho in the pair metric.
struct TwoVarConfig {
  RadiusSchedule schedule{};
  double tol = 1e-6;
  int band_resolution = 16;
  RhoCombiner combiner = RhoCombiner::Max;
  double strict_slack = 1e-9;
  double nonlocal_start_radius = 0.0;  // 0: use the fixture's domain radius

  double finest_radius() const { return schedule.radii().back(); }
  double finest_spacing() const { return finest_radius() / band_resolution; }
};

// sup over pairs (u,v) != (x,y) of [f(x,y) - f_+(u,v)]+ / d_rho, with the
// same doubling search as the single-variable nonlocal slope.
PointwiseValue nonlocal_rho_slope(const TwoVarFunction& g, const PairPt& at, double rho,
                                  const TwoVarConfig& cfg);

// limsup of [f(x,y) - f(u,v)]+ / d_rho over shrinking rho-metric balls.
PointwiseValue local_rho_slope(const TwoVarFunction& g, const PairPt& at, double rho,
                               const TwoVarConfig& cfg);

// inf ||x*|| over product subgradients (x*,y*) at (x,y) with ||y*|| < rho;
// the primed variant scores each subgradient by ||x*|| + rho^{-1}||y*||.
// Absent oracle -> no value; primed on a hull-form oracle -> no value.
std::optional<ExtReal> subdiff_rho_slope(const TwoVarFunction& g, const PairPt& at, double rho);
std::optional<ExtReal> subdiff_rho_slope_primed(const TwoVarFunction& g, const PairPt& at,
                                                double rho);

// Error bound modulus of the slice level set S = {x : f(x,ybar) <= 0}:
// band infima of f(x,y)/d(x,S) with both d(x,xbar) and f inside the rung.
LimitEstimate er2_modulus(const TwoVarFunction& g, const TwoVarConfig& cfg);

// The three band shapes whose limits agree for valid pair functions:
// x-band only; x- and y-bands; x-band plus value band (the modulus above).
struct Er2Forms {
  LimitEstimate x_only;
  LimitEstimate x_and_y;
  LimitEstimate x_and_value;
};
Er2Forms er2_equivalent_forms(const TwoVarFunction& g, const TwoVarConfig& cfg);

LimitEstimate uniform_strict_slope2(const TwoVarFunction& g, const TwoVarConfig& cfg);
LimitEstimate strict_outer_slope2(const TwoVarFunction& g, const TwoVarConfig& cfg);
LimitEstimate strict_outer_subdiff_slope2(const TwoVarFunction& g, const TwoVarConfig& cfg);
LimitEstimate ratio_liminf2(const TwoVarFunction& g, const TwoVarConfig& cfg);
LimitEstimate local_slope_ratio_band2(const TwoVarFunction& g, const TwoVarConfig& cfg);
LimitEstimate subdiff_slope_ratio_band2(const TwoVarFunction& g, const TwoVarConfig& cfg);

struct TwoVarPointRow {
  PairPt at;
  double rho = 0.0;
  ExtReal fval{0.0};
  PointwiseValue local;
  PointwiseValue nonlocal;
  std::optional<ExtReal> subdiff;
  std::optional<ExtReal> subdiff_primed;
};

struct TwoVarSlopeReport {
  std::string fixture;
  RhoCombiner metric_variant = RhoCombiner::Max;
  std::vector<TwoVarPointRow> points;
  LimitEstimate er2;
  LimitEstimate uniform_strict;
  LimitEstimate strict_outer;
  LimitEstimate subdiff_strict_outer;
  bool subdiff_available = false;
};

TwoVarSlopeReport make_two_var_report(const TwoVarFunction& g, const std::vector<PairPt>& probes,
                                      double probe_rho, const TwoVarConfig& cfg);

// Criteria chain at gamma for pair functions, same report shape as the
// single-variable engine (conditions a..g, implication audits, positivity
// chain).
CriteriaVerdict criteria_verdict2(const TwoVarFunction& g, double gamma, const TwoVarConfig& cfg);

// Generic pair-band driver, shared with the set-valued module. key(w, f(w))
// is the smallest rung whose open band admits w (infinite: never a member);
// inner(w, f(w), rho, spacing) is the banded quantity (spacing 0 in exact
// mode). Finite products append the closed snap rung; Euclidean products
// rescan each rung at spacing rho/band_resolution.
using PairKeyFn = std::function<ExtReal(const PairPt&, const ExtReal&)>;
using PairInnerFn = std::function<ExtReal(const PairPt&, const ExtReal&, double, double)>;

LimitEstimate band_estimate_pairs(const TwoVarFunction& g, const TwoVarConfig& cfg,
                                  const PairKeyFn& key, const PairInnerFn& inner);

// Inner quantities for band sweeps. The returned closures keep a reference
// to g; the caller owns g for their lifetime.
PairInnerFn pair_inner_nonlocal(const TwoVarFunction& g, const TwoVarConfig& cfg);
PairInnerFn pair_inner_local(const TwoVarFunction& g, const TwoVarConfig& cfg);
PairInnerFn pair_inner_ratio(const TwoVarFunction& g);
PairInnerFn pair_inner_max(PairInnerFn a, PairInnerFn b);

}  // namespace slopekit
