#pragma once

#include <string>
#include <vector>

#include "slopekit/ext_real.hpp"
#include "slopekit/probe_function.hpp"
#include "slopekit/slopes1.hpp"

namespace slopekit {

// Reference computations on finite metric spaces. Everything here walks the
// whole space with plain loops and reads each definition off directly: no
// radius ladder, no shared band driver, no sampling. The estimation paths
// are expected to agree exactly on finite inputs, and the consistency tests
// assert that, so this file must not call into them.

// Exact slope report: pointwise rows for every point of the space, band
// limits centered at xbar. Band estimates are exact step functions of the
// band radius: per_radius holds one entry per distinct realized threshold in
// decreasing order and the reported value is read off the smallest one.
// Pointwise diagnostic fields (search radii, truncation flags) follow this
// module's own conventions; only values are meant for comparison.
SlopeReport brute_force_all(const ProbeFunction& f, const Point& xbar, bool full_band = false);

// Outcome of the variational-principle search. The witness is only usable
// when valid is set: the search never vouches for itself, every conclusion
// is re-checked by enumeration after the walk stops.
struct EkelandResult {
  Point x;
  double fx = 0.0;
  double distance = 0.0;         // d(x, v)
  bool valid = false;            // preconditions held and (a)-(c) verified
  bool strict_distance = false;  // d(x, v) < lambda held strictly
  int steps = 0;                 // improvement moves taken
  std::string note;              // failure reason when !valid
};

// Ekeland point search on a finite space: starting from v with
// f(v) < inf f + eps, repeatedly move to the best point strictly improving
// f(u) + (eps / lambda) * d(u, x). On a finite space the walk terminates,
// and the returned point satisfies
//   (a) d(x, v) <= lambda, with strictness reported separately,
//   (b) f(x) <= f(v),
//   (c) f(u) + (eps / lambda) * d(u, x) >= f(x) for every u,
// all three verified exhaustively before returning. A violated
// precondition (detected by enumeration) yields valid = false.
EkelandResult ekeland_point(const ProbeFunction& f, const Point& v, double eps, double lambda);

// One hand-derived expectation for cross_check. quantity selects what to
// read from the discretized report: "er", "strict_outer", "uniform_strict",
// "ratio", "subdiff_strict_outer", or the pointwise "local" / "nonlocal"
// read at the grid point nearest `at`. Comparison is absolute:
// |actual - expected| <= tolerance.
struct AnalyticEntry {
  std::string quantity;
  double expected = 0.0;
  double tolerance = 0.0;
  Point at;  // pointwise quantities only
};

struct CrossCheckReport {
  std::string fixture;
  double spacing = 0.0;
  std::size_t grid_points = 0;
  double module_vs_oracle = 0.0;    // max |estimation path - brute force| on the grid
  double analytic_max_error = 0.0;  // max |actual - expected| over the entries
  bool ok = true;
  std::vector<std::string> details;  // one line per comparison that failed
};

// Discretize a 1-d Euclidean fixture onto the uniform grid of spacing h over
// [-radius, radius], then (1) run the estimation paths and brute_force_all
// on the resulting finite space and compare them field by field, and
// (2) compare the discretized report against the hand-derived entries.
// ok clears when (1) disagrees beyond 1e-12 or any entry misses its
// tolerance.
CrossCheckReport cross_check(const ProbeFunction& fixture, double h, double radius,
                             const std::vector<AnalyticEntry>& analytic, const SlopeConfig& cfg);

// The discretization itself, exposed for tests: grid point i sits at
// coordinate -radius + i*h, values are copied from the fixture, xbar snaps
// to the nearest grid point. Throws when the grid would exceed the finite
// space cap or the fixture is not 1-d Euclidean.
ProbeFunction discretize_line(const ProbeFunction& fixture, double h, double radius);

}  // namespace slopekit
