#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopekit/ext_real.hpp"
#include "slopekit/limits.hpp"
#include "slopekit/probe_function.hpp"

namespace slopekit {

// Shared knobs for slope computations. Band sweeps shrink along the
// schedule; on Euclidean fixtures each rung rho is scanned on a lattice of
// spacing rho / band_resolution around the reference point. Finite spaces
// ignore resolution (full enumeration) and append one closed snap rung at
// the smallest realized band threshold so limits read exact step functions.
struct SlopeConfig {
  RadiusSchedule schedule{};
  double tol = 1e-6;
  int band_resolution = 16;
  bool full_band = false;  // two-sided band |f| < rho instead of 0 < f < rho
  double strict_slack = 1e-9;        // slack for open comparisons against gamma
  double nonlocal_start_radius = 0.0;  // 0: use the fixture's domain radius

  double finest_radius() const {
    auto rs = schedule.radii();
    return rs.back();
  }
  double finest_spacing() const { return finest_radius() / band_resolution; }
};

// Pointwise slope value with desk-scale diagnostics.
struct PointwiseValue {
  ExtReal value{0.0};
  bool isolated = false;   // no other point to probe (finite spaces)
  bool truncated = false;  // search stopped while far points could still matter
  double search_radius = 0.0;
};

enum class RegionKind { SublevelDist, LevelSet };

// limsup of [f(x)-f(u)]+ / d(u,x) over shrinking punctured balls; zero at
// local minima. Finite spaces read the supremum over the smallest nonempty
// punctured ball; Euclidean fixtures ladder down the schedule radii.
PointwiseValue local_slope(const ProbeFunction& f, const Point& x,
                           const std::vector<double>& probe_radii, int band_resolution);
PointwiseValue local_slope(const ProbeFunction& f, const Point& x, const SlopeConfig& cfg);

// sup over u != x of [f(x) - f_+(u)]+ / d(u,x). The search region starts at
// the fixture extent and doubles until far points can no longer beat the
// running supremum (their ratio is capped by f(x)/distance).
PointwiseValue nonlocal_slope(const ProbeFunction& f, const Point& x, const SlopeConfig& cfg);

// Same supremum restricted to a region tied to the zero sublevel set:
// SublevelDist keeps u with d(u,S) <= d(x,S); LevelSet keeps u in S, which
// collapses to f_+(x) / d(x,S) with the 0/0 = 0 convention.
PointwiseValue restricted_nonlocal_slope(const ProbeFunction& f, const Point& x, RegionKind region,
                                         const SlopeConfig& cfg);

// inf of ||x*|| over the subdifferential oracle at x; absent oracle -> no value.
std::optional<ExtReal> subdiff_slope(const ProbeFunction& f, const Point& x);

// Band limits at f.xbar. All use the band {d(x,xbar) < rho, 0 < f(x) < rho}
// (or |f| < rho with full_band) except the ratio-coupled variants, whose
// band couples d(x,xbar) with f(x)/d(x,xbar).
LimitEstimate er_modulus(const ProbeFunction& f, const SlopeConfig& cfg);
LimitEstimate strict_outer_slope(const ProbeFunction& f, const SlopeConfig& cfg);
LimitEstimate uniform_strict_slope(const ProbeFunction& f, const SlopeConfig& cfg);
LimitEstimate ratio_liminf(const ProbeFunction& f, const SlopeConfig& cfg);
LimitEstimate strict_outer_subdiff_slope(const ProbeFunction& f, const SlopeConfig& cfg);
LimitEstimate local_slope_ratio_band(const ProbeFunction& f, const SlopeConfig& cfg);
LimitEstimate subdiff_slope_ratio_band(const ProbeFunction& f, const SlopeConfig& cfg);

struct PointRow {
  Point at;
  ExtReal fval{0.0};
  PointwiseValue local;
  PointwiseValue nonlocal;
  PointwiseValue restricted_sublevel;
  PointwiseValue restricted_levelset;
  std::optional<ExtReal> subdiff;
};

struct SlopeReport {
  std::string fixture;
  std::vector<PointRow> points;
  LimitEstimate er;
  LimitEstimate strict_outer;
  LimitEstimate uniform_strict;
  LimitEstimate ratio;
  LimitEstimate subdiff_strict_outer;
  bool subdiff_available = false;
};

SlopeReport make_slope_report(const ProbeFunction& f, const std::vector<Point>& probe_points,
                              const SlopeConfig& cfg);

// Criteria engine: each condition compares a limit estimate against gamma
// with an open-comparison slack; conditions needing structure the fixture
// lacks (a norm, a subdifferential oracle) are reported as not evaluable.
enum class Tri { True, False, NotEvaluable };
const char* tri_name(Tri t);

struct Condition {
  std::string key;   // letter in the criteria chain
  std::string what;  // which quantity is compared
  Tri verdict = Tri::NotEvaluable;
  ExtReal value{0.0};
  bool marginal = false;  // too close to the threshold to audit implications
};

struct ImplicationAudit {
  std::string name;  // e.g. "(c)=>(e)"
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

struct CriteriaVerdict {
  double gamma = 0.0;
  std::vector<Condition> conditions;        // quantitative chain at gamma
  std::vector<ImplicationAudit> audits;
  std::vector<Condition> qualitative;       // positivity chain
  std::vector<ImplicationAudit> qualitative_audits;

  bool audits_ok() const;
  const Condition* find(const std::string& key) const;
};

CriteriaVerdict criteria_verdict(const ProbeFunction& f, double gamma, const SlopeConfig& cfg);

// Building blocks shared by the criteria engines of the other modules.
namespace criteria {

Condition compare(std::string key, std::string what, const ExtReal& value, double threshold,
                  double slack, double margin);
Condition skipped(std::string key, std::string what);

// Records implication / equivalence audits between named conditions. An
// audit is applicable only when its guard holds, both sides are evaluable,
// and neither side sits within its margin of the threshold.
struct Audits {
  const std::vector<Condition>* conditions;
  std::vector<ImplicationAudit>* out;

  const Condition* get(const std::string& key) const;
  void implies(const std::string& name, const std::string& lhs, const std::string& rhs, bool guard,
               const std::string& guard_note);
  void equiv(const std::string& name, const std::string& lhs, const std::string& rhs, bool guard,
             const std::string& guard_note);
};

}  // namespace criteria

}  // namespace slopekit
