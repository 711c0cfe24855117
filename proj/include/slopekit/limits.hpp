#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/ext_real.hpp"

namespace slopekit {

// Geometric ladder of band radii rho_k = rho0 * gamma^k, k = 0..steps-1.
// Deliberately non-adaptive: a fixed ladder keeps runs reproducible and
// makes saturation diagnostics meaningful across fixtures.
struct RadiusSchedule {
  double rho0 = 1.0;
  double gamma = 0.5;
  int steps = 12;

  void validate() const;
  std::vector<double> radii() const;
};

// One radius at which a band quantity is evaluated. `closed` marks the final
// snapped radius on exact (finite) probe sets: membership thresholds compare
// with <= there instead of <, which reads the limit off the smallest
// nonempty band exactly.
struct BandRadius {
  double rho = 0.0;
  bool closed = false;
};

// Whether the per-radius values of a band limit should trend upward
// (infimum over shrinking bands) or downward (supremum over shrinking balls).
enum class LimitTrend { NondecreasingInf, NonincreasingSup };

// Result of estimating a limit along a radius ladder.
//
// reported is always the value at the last (smallest) radius: on exact probe
// sets that radius is snapped to the smallest nonempty band, and on sampled
// fixtures the last rung is the best available read. The flags qualify how
// much to trust it; they are diagnostics, not part of the value.
struct LimitEstimate {
  std::vector<std::pair<double, ExtReal>> per_radius;
  ExtReal reported = ExtReal::infinity();
  bool monotone = false;   // per-radius values follow the expected trend (slack tol)
  bool saturated = false;  // last two values agree within tol (or are both +inf)
  std::vector<std::string> notes;

  bool all_infinite() const;
  bool has_note(const std::string& n) const;
  void add_note(const std::string& n);
};

// Evaluate band_inf at every rung of the schedule and package the sequence.
// band_inf(rho) must return the infimum of the quantity over the band of
// radius rho (+inf for an empty band). Values are expected to be
// nondecreasing as rho shrinks; the monotone flag records whether they were.
// Schedules with fewer than two steps are rejected: a single point cannot
// witness a trend.
LimitEstimate estimate_limit(const std::function<ExtReal(double)>& band_inf,
                             const RadiusSchedule& schedule, double tol);

// Shared engine: evaluate over an explicit radius list (possibly ending in a
// snapped closed radius) with a chosen trend. estimate_limit delegates here.
LimitEstimate estimate_over_radii(const std::function<ExtReal(const BandRadius&)>& band_value,
                                  const std::vector<BandRadius>& radii, double tol,
                                  LimitTrend trend);

// Build the radius list for a band limit on an exact probe set whose
// smallest admissible band threshold is t_min: schedule rungs strictly above
// t_min, then t_min as a closed final rung. Pass t_min = +inf when no point
// is ever admissible; that keeps the whole ladder with no closed rung.
std::vector<BandRadius> radii_with_snap(const RadiusSchedule& schedule, double t_min);

}  // namespace slopekit
