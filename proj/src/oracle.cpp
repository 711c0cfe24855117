#include "slopekit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/dual_set.hpp"
#include "slopekit/limits.hpp"
#include "slopekit/space.hpp"

namespace slopekit {
namespace {

constexpr double kTieSlack = 1e-12;

struct Entry {
  Point p;
  ExtReal f{0.0};
};

std::vector<Entry> evaluate_all(const ProbeFunction& f) {
  std::vector<Entry> out;
  for (const Point& p : f.space.all_points()) out.push_back({p, f.eval(p)});
  return out;
}

// Distance from p to {f <= 0} by scanning every point.
ExtReal sublevel_distance(const ProbeFunction& f, const std::vector<Entry>& pts, const Point& p) {
  ExtReal best = ExtReal::infinity();
  for (const Entry& e : pts) {
    if (!e.f.finite() || e.f.value() > 0.0) continue;
    double d = f.space.dist(p, e.p);
    if (best.is_inf() || d < best.raw()) best = ExtReal(d);
  }
  return best;
}

// Steepest one-step descent ratio over the smallest punctured ball around x.
PointwiseValue local_by_definition(const ProbeFunction& f, const std::vector<Entry>& pts,
                                   const Point& x, double fx) {
  PointwiseValue out;
  double rmin = std::numeric_limits<double>::infinity();
  for (const Entry& e : pts) {
    if (e.p == x) continue;
    rmin = std::min(rmin, f.space.dist(e.p, x));
  }
  if (!std::isfinite(rmin)) {
    out.isolated = true;
    return out;
  }
  ExtReal best{0.0};
  for (const Entry& e : pts) {
    if (e.p == x) continue;
    double d = f.space.dist(e.p, x);
    if (d > rmin + kTieSlack) continue;
    best = ext_max(best, extreal_div(diff_pos(ExtReal(fx), e.f), ExtReal(d), ExtReal(0.0)));
  }
  out.value = best;
  out.search_radius = rmin;
  return out;
}

// Supremum of [f(x) - f_+(u)]+ / d(u, x) over every other point.
PointwiseValue nonlocal_by_definition(const ProbeFunction& f, const std::vector<Entry>& pts,
                                      const Point& x, double fx) {
  PointwiseValue out;
  bool any = false;
  ExtReal best{0.0};
  for (const Entry& e : pts) {
    if (e.p == x) continue;
    any = true;
    best = ext_max(best, extreal_div(diff_pos(ExtReal(fx), positive_part(e.f)),
                                     ExtReal(f.space.dist(e.p, x)), ExtReal(0.0)));
  }
  out.isolated = !any;
  out.value = best;
  return out;
}

// Same supremum restricted to points no farther from the sublevel set than x.
PointwiseValue restricted_sublevel_by_definition(const ProbeFunction& f,
                                                 const std::vector<Entry>& pts, const Point& x,
                                                 double fx) {
  ExtReal dx = sublevel_distance(f, pts, x);
  ExtReal best{0.0};
  for (const Entry& e : pts) {
    if (e.p == x) continue;
    if (!(sublevel_distance(f, pts, e.p) <= dx)) continue;
    best = ext_max(best, extreal_div(diff_pos(ExtReal(fx), positive_part(e.f)),
                                     ExtReal(f.space.dist(e.p, x)), ExtReal(0.0)));
  }
  PointwiseValue out;
  out.value = best;
  return out;
}

PointwiseValue levelset_by_definition(const ProbeFunction& f, const std::vector<Entry>& pts,
                                      const Point& x, double fx) {
  PointwiseValue out;
  out.value = extreal_div(positive_part(ExtReal(fx)), sublevel_distance(f, pts, x), ExtReal(0.0));
  out.search_radius = f.space.dist(x, f.xbar);
  return out;
}

ExtReal subdiff_min_norm(const ProbeFunction& f, const Point& p) {
  DualSet s = f.subdiff(p);
  if (s.hull) return min_xnorm(s, NormKind::L2);  // shared exact geometry, not an estimate
  ExtReal best = ExtReal::infinity();
  for (const DualVec& v : s.vertices) {
    double n = v.x.dim == 0 ? 0.0 : norm_of(v.x, dual_norm_kind(NormKind::L2));
    best = ext_min(best, ExtReal(n));
  }
  return best;
}

// Band threshold of a point for the limits at xbar: points with positive
// (or, two-sided, nonzero) value enter once the band radius passes both
// their distance to xbar and their value.
ExtReal band_threshold(const ProbeFunction& f, const Point& xbar, const Entry& e, bool full_band) {
  if (!e.f.finite()) return ExtReal::infinity();
  double d = f.space.dist(e.p, xbar);
  if (full_band) {
    if (e.p == xbar) return ExtReal::infinity();
    return ExtReal(std::max(d, std::fabs(e.f.value())));
  }
  if (e.f.value() <= 0.0) return ExtReal::infinity();
  return ExtReal(std::max(d, e.f.value()));
}

// Exact step function of the band radius: one rung per distinct realized
// threshold, decreasing, each holding the infimum of `inner` over the
// closed band at that rung. The limit is the value at the smallest rung.
template <typename Inner>
LimitEstimate step_limit(const std::vector<Entry>& pts, const std::vector<ExtReal>& thresholds,
                         Inner inner) {
  std::vector<double> rungs;
  for (const ExtReal& t : thresholds) {
    if (t.finite()) rungs.push_back(t.value());
  }
  std::sort(rungs.begin(), rungs.end(), std::greater<double>());
  rungs.erase(std::unique(rungs.begin(), rungs.end()), rungs.end());

  LimitEstimate est;
  for (double r : rungs) {
    ExtReal inf = ExtReal::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const ExtReal& t = thresholds[i];
      if (!t.finite() || t.value() > r + kTieSlack) continue;
      inf = ext_min(inf, inner(pts[i]));
    }
    est.per_radius.emplace_back(r, inf);
  }
  if (est.per_radius.empty()) {
    est.reported = ExtReal::infinity();
    est.add_note("all-bands-empty");
  } else {
    est.reported = est.per_radius.back().second;
  }
  est.monotone = true;
  for (std::size_t i = 1; i < est.per_radius.size(); ++i) {
    if (est.per_radius[i].second < est.per_radius[i - 1].second) est.monotone = false;
  }
  est.saturated = est.per_radius.size() >= 2 &&
                  ((est.per_radius.back().second.is_inf() &&
                    est.per_radius[est.per_radius.size() - 2].second.is_inf()) ||
                   est.per_radius.back().second == est.per_radius[est.per_radius.size() - 2].second);
  est.add_note("exact-enumeration");
  return est;
}

LimitEstimate absent_oracle_limit() {
  LimitEstimate e;
  e.reported = ExtReal::infinity();
  e.add_note("subdiff-oracle-absent");
  return e;
}

double rel_or_abs_gap(const ExtReal& a, const ExtReal& b) {
  if (a.is_inf() && b.is_inf()) return 0.0;
  if (a.is_inf() || b.is_inf()) return std::numeric_limits<double>::infinity();
  return std::fabs(a.value() - b.value());
}

}  // namespace

SlopeReport brute_force_all(const ProbeFunction& f, const Point& xbar, bool full_band) {
  if (!f.space.is_finite()) {
    throw std::invalid_argument("brute_force_all: finite spaces only");
  }
  std::vector<Entry> pts = evaluate_all(f);

  SlopeReport rep;
  rep.fixture = f.name;
  rep.subdiff_available = f.has_subdiff();
  for (const Entry& e : pts) {
    PointRow row;
    row.at = e.p;
    row.fval = e.f;
    if (e.f.finite()) {
      double fx = e.f.value();
      row.local = local_by_definition(f, pts, e.p, fx);
      row.nonlocal = nonlocal_by_definition(f, pts, e.p, fx);
      row.restricted_sublevel = restricted_sublevel_by_definition(f, pts, e.p, fx);
      row.restricted_levelset = levelset_by_definition(f, pts, e.p, fx);
    }
    if (f.has_subdiff()) row.subdiff = subdiff_min_norm(f, e.p);
    rep.points.push_back(std::move(row));
  }

  std::vector<ExtReal> thresholds;
  for (const Entry& e : pts) thresholds.push_back(band_threshold(f, xbar, e, full_band));

  rep.er = step_limit(pts, thresholds, [&](const Entry& e) {
    return extreal_div(positive_part(e.f), sublevel_distance(f, pts, e.p), ExtReal(0.0));
  });
  rep.strict_outer = step_limit(pts, thresholds, [&](const Entry& e) {
    return local_by_definition(f, pts, e.p, e.f.value()).value;
  });
  rep.uniform_strict = step_limit(pts, thresholds, [&](const Entry& e) {
    return nonlocal_by_definition(f, pts, e.p, e.f.value()).value;
  });
  rep.ratio = step_limit(pts, thresholds, [&](const Entry& e) {
    return extreal_div(positive_part(e.f), ExtReal(f.space.dist(e.p, xbar)), ExtReal::infinity());
  });
  rep.subdiff_strict_outer =
      f.has_subdiff()
          ? step_limit(pts, thresholds, [&](const Entry& e) { return subdiff_min_norm(f, e.p); })
          : absent_oracle_limit();
  return rep;
}

EkelandResult ekeland_point(const ProbeFunction& f, const Point& v, double eps, double lambda) {
  EkelandResult res;
  res.x = v;
  if (!f.space.is_finite()) {
    res.note = "finite spaces only";
    return res;
  }
  if (!(eps > 0.0) || !(lambda > 0.0)) {
    res.note = "eps and lambda must be positive";
    return res;
  }
  ExtReal fv = f.eval(v);
  if (!fv.finite()) {
    res.note = "start point lies outside the domain";
    return res;
  }
  std::vector<Entry> pts = evaluate_all(f);
  ExtReal inf_f = ExtReal::infinity();
  for (const Entry& e : pts) inf_f = ext_min(inf_f, e.f);
  if (!(fv < inf_f + ExtReal(eps))) {
    res.note = "start value is not within eps of the infimum";
    return res;
  }

  // Walk: move to the point minimizing f(u) + rate * d(u, x) while that
  // beats f(x). Each accepted move strictly decreases f, so the walk stops
  // after at most one move per point.
  double rate = eps / lambda;
  Point x = v;
  double fx = fv.value();
  for (std::size_t guard = 0; guard <= pts.size(); ++guard) {
    ExtReal best = ExtReal::infinity();
    const Entry* pick = nullptr;
    for (const Entry& e : pts) {
      ExtReal g = e.f + ExtReal(rate * f.space.dist(e.p, x));
      if (g < best) {
        best = g;
        pick = &e;
      }
    }
    if (pick == nullptr || !(best < ExtReal(fx))) break;
    x = pick->p;
    fx = pick->f.value();
    ++res.steps;
  }

  res.x = x;
  res.fx = fx;
  res.distance = f.space.dist(x, v);
  res.strict_distance = res.distance < lambda;
  bool ok_a = res.distance <= lambda + kTieSlack;
  bool ok_b = fx <= fv.value();
  bool ok_c = true;
  for (const Entry& e : pts) {
    if (e.f + ExtReal(rate * f.space.dist(e.p, x)) < ExtReal(fx)) ok_c = false;
  }
  if (!ok_a) res.note = "distance conclusion failed";
  if (!ok_b) res.note = "descent conclusion failed";
  if (!ok_c) res.note = "support conclusion failed";
  res.valid = ok_a && ok_b && ok_c;
  return res;
}

ProbeFunction discretize_line(const ProbeFunction& fixture, double h, double radius) {
  if (!fixture.space.is_euclidean() || fixture.space.euclidean().dim() != 1) {
    throw std::invalid_argument("discretize_line: 1-d Euclidean fixtures only");
  }
  if (!(h > 0.0) || !(radius > 0.0)) {
    throw std::invalid_argument("discretize_line: spacing and radius must be positive");
  }
  std::size_t n = static_cast<std::size_t>(std::floor(2.0 * radius / h + 0.5)) + 1;
  if (n > FiniteMetricSpace::kMaxPoints) {
    throw std::invalid_argument("discretize_line: grid exceeds the finite space cap");
  }
  std::vector<double> coords(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    coords[i] = -radius + static_cast<double>(i) * h;
    labels[i] = "g" + std::to_string(i);
  }
  std::vector<double> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) matrix[i * n + j] = std::fabs(coords[i] - coords[j]);
  }

  std::size_t ibar = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::fabs(coords[i] - fixture.xbar[0]) < std::fabs(coords[ibar] - fixture.xbar[0])) {
      ibar = i;
    }
  }

  ProbeFunction g;
  g.name = fixture.name + "-grid";
  g.space = Space(FiniteMetricSpace(std::move(labels), std::move(matrix)));
  g.xbar = Point::finite(static_cast<int>(ibar));
  g.eval = [coords, eval = fixture.eval](const Point& p) {
    return eval(Point::of(coords[static_cast<std::size_t>(p.id)]));
  };
  if (fixture.has_subdiff()) {
    g.subdiff = [coords, sub = fixture.subdiff](const Point& p) {
      return sub(Point::of(coords[static_cast<std::size_t>(p.id)]));
    };
    g.subdiff_exact = fixture.subdiff_exact;
  }
  g.convex = fixture.convex;
  g.lsc = fixture.lsc;
  g.complete = fixture.complete;
  g.domain_radius = radius;
  return g;
}

CrossCheckReport cross_check(const ProbeFunction& fixture, double h, double radius,
                             const std::vector<AnalyticEntry>& analytic, const SlopeConfig& cfg) {
  ProbeFunction grid = discretize_line(fixture, h, radius);
  CrossCheckReport out;
  out.fixture = fixture.name;
  out.spacing = h;
  out.grid_points = grid.space.finite().size();

  SlopeReport est = make_slope_report(grid, grid.space.all_points(), cfg);
  SlopeReport ref = brute_force_all(grid, grid.xbar, cfg.full_band);

  auto check = [&](const std::string& what, const ExtReal& a, const ExtReal& b) {
    double gap = rel_or_abs_gap(a, b);
    out.module_vs_oracle = std::max(out.module_vs_oracle, gap);
    if (gap > 1e-12) {
      out.ok = false;
      out.details.push_back(what + ": estimate " + a.str() + " vs brute force " + b.str());
    }
  };
  for (std::size_t i = 0; i < ref.points.size(); ++i) {
    const PointRow& m = est.points[i];
    const PointRow& r = ref.points[i];
    std::string tag = grid.space.finite().label(i);
    check(tag + " local", m.local.value, r.local.value);
    check(tag + " nonlocal", m.nonlocal.value, r.nonlocal.value);
    check(tag + " restricted-sublevel", m.restricted_sublevel.value, r.restricted_sublevel.value);
    check(tag + " restricted-levelset", m.restricted_levelset.value, r.restricted_levelset.value);
    if (m.subdiff.has_value() != r.subdiff.has_value()) {
      out.ok = false;
      out.details.push_back(tag + " subdiff: availability mismatch");
    } else if (m.subdiff.has_value()) {
      check(tag + " subdiff", *m.subdiff, *r.subdiff);
    }
  }
  check("er", est.er.reported, ref.er.reported);
  check("strict_outer", est.strict_outer.reported, ref.strict_outer.reported);
  check("uniform_strict", est.uniform_strict.reported, ref.uniform_strict.reported);
  check("ratio", est.ratio.reported, ref.ratio.reported);
  check("subdiff_strict_outer", est.subdiff_strict_outer.reported,
        ref.subdiff_strict_outer.reported);

  auto nearest_row = [&](const Point& at) -> const PointRow& {
    std::size_t best = 0;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < est.points.size(); ++i) {
      double coord_gap = std::fabs((-radius + static_cast<double>(i) * h) - at[0]);
      if (coord_gap < gap) {
        gap = coord_gap;
        best = i;
      }
    }
    return est.points[best];
  };
  for (const AnalyticEntry& entry : analytic) {
    ExtReal actual{0.0};
    if (entry.quantity == "er") {
      actual = est.er.reported;
    } else if (entry.quantity == "strict_outer") {
      actual = est.strict_outer.reported;
    } else if (entry.quantity == "uniform_strict") {
      actual = est.uniform_strict.reported;
    } else if (entry.quantity == "ratio") {
      actual = est.ratio.reported;
    } else if (entry.quantity == "subdiff_strict_outer") {
      actual = est.subdiff_strict_outer.reported;
    } else if (entry.quantity == "local") {
      actual = nearest_row(entry.at).local.value;
    } else if (entry.quantity == "nonlocal") {
      actual = nearest_row(entry.at).nonlocal.value;
    } else {
      throw std::invalid_argument("cross_check: unknown quantity " + entry.quantity);
    }
    double gap = actual.is_inf() ? std::numeric_limits<double>::infinity()
                                 : std::fabs(actual.value() - entry.expected);
    out.analytic_max_error = std::max(out.analytic_max_error, gap);
    if (gap > entry.tolerance) {
      out.ok = false;
      out.details.push_back(entry.quantity + ": got " + actual.str() + ", expected about " +
                            std::to_string(entry.expected));
    }
  }
  return out;
}

}  // namespace slopekit
