#include "slopekit/slopes1.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace slopekit {

namespace {

constexpr double kMemberSlack = 1e-12;

ExtReal eval_at(const ProbeFunction& f, const Point& u) { return f.eval(u); }

double require_finite_value(const ProbeFunction& f, const Point& x, const char* op) {
  ExtReal fx = eval_at(f, x);
  if (!fx.finite()) throw std::invalid_argument(std::string(op) + ": point lies outside the domain of " + f.name);
  return fx.value();
}

// One-step ratio of the slope numerators. `plus` selects the nonlocal
// numerator [f(x) - f_+(u)]+ over the local one [f(x) - f(u)]+.
ExtReal step_ratio(double fx, const ExtReal& fu, double d, bool plus) {
  ExtReal top = plus ? diff_pos(ExtReal(fx), positive_part(fu)) : diff_pos(ExtReal(fx), fu);
  return extreal_div(top, ExtReal(d), ExtReal(0.0));
}

// ---- finite-space pointwise reads ------------------------------------------

PointwiseValue finite_local_slope(const ProbeFunction& f, const Point& x) {
  double fx = require_finite_value(f, x, "local_slope");
  PointwiseValue out;
  auto pts = f.space.all_points();
  double rmin = std::numeric_limits<double>::infinity();
  for (const Point& u : pts) {
    if (u == x) continue;
    rmin = std::min(rmin, f.space.dist(u, x));
  }
  if (!std::isfinite(rmin)) {
    out.isolated = true;
    return out;
  }
  ExtReal best{0.0};
  for (const Point& u : pts) {
    if (u == x) continue;
    double d = f.space.dist(u, x);
    if (d <= rmin + kMemberSlack) best = ext_max(best, step_ratio(fx, eval_at(f, u), d, false));
  }
  out.value = best;
  out.search_radius = rmin;
  return out;
}

PointwiseValue finite_nonlocal_slope(const ProbeFunction& f, const Point& x) {
  double fx = require_finite_value(f, x, "nonlocal_slope");
  PointwiseValue out;
  bool any = false;
  ExtReal best{0.0};
  for (const Point& u : f.space.all_points()) {
    if (u == x) continue;
    any = true;
    best = ext_max(best, step_ratio(fx, eval_at(f, u), f.space.dist(u, x), true));
  }
  out.isolated = !any;
  out.value = best;
  return out;
}

// ---- Euclidean pointwise reads ---------------------------------------------

std::vector<Point> window_candidates(const ProbeFunction& f, const Point& x, double window,
                                     double delta) {
  std::vector<Point> cands = f.base_grid;
  cands.push_back(f.xbar);
  auto ball = grid_ball(f.space.euclidean(), x, window, delta);
  cands.insert(cands.end(), ball.begin(), ball.end());
  return cands;
}

ExtReal euclid_window_sup(const ProbeFunction& f, const Point& x, double fx, double window,
                          double delta, bool plus) {
  ExtReal best{0.0};
  for (const Point& u : window_candidates(f, x, window, delta)) {
    double d = f.space.dist(u, x);
    if (d <= 0.0 || d > window + kMemberSlack) continue;
    best = ext_max(best, step_ratio(fx, eval_at(f, u), d, plus));
  }
  return best;
}

// Supremum scan for the nonlocal slope: a fine lattice near x plus a
// (possibly coarsened) lattice out to `outer`, the base grid, and xbar. The
// fine window keeps these candidates a superset of any local window scan at
// the same spacing, so subset-based comparisons stay exact on the desk.
struct NonlocalScan {
  ExtReal best{0.0};
  std::vector<Point> candidates;
};

NonlocalScan nonlocal_scan(const ProbeFunction& f, const Point& x, double fx, double window,
                           double delta, double outer) {
  NonlocalScan scan;
  scan.candidates = window_candidates(f, x, window, delta);
  auto far = grid_ball(f.space.euclidean(), x, outer, delta);
  scan.candidates.insert(scan.candidates.end(), far.begin(), far.end());
  for (const Point& u : scan.candidates) {
    double d = f.space.dist(u, x);
    if (d <= 0.0) continue;
    scan.best = ext_max(scan.best, step_ratio(fx, eval_at(f, u), d, true));
  }
  return scan;
}

PointwiseValue euclid_nonlocal_slope(const ProbeFunction& f, const Point& x, double window,
                                     double delta, double start_radius) {
  double fx = require_finite_value(f, x, "nonlocal_slope");
  double r0 = std::max({start_radius, window, delta});
  double cap = 64.0 * std::max(f.domain_radius, 1.0);
  PointwiseValue out;
  double radius = r0;
  NonlocalScan scan = nonlocal_scan(f, x, fx, window, delta, radius);
  while (fx > 0.0 && radius < cap && ExtReal(fx / radius) > scan.best) {
    radius *= 2.0;
    scan = nonlocal_scan(f, x, fx, window, delta, radius);
  }
  out.value = scan.best;
  out.search_radius = radius;
  out.truncated = fx > 0.0 && ExtReal(fx / radius) > scan.best;
  return out;
}

// ---- band estimation driver -------------------------------------------------

// key(u, f(u)) returns the smallest rho whose open band admits u (infinite
// when u is never a member). inner(u, f(u), rho, spacing) is the quantity
// whose band infimum is wanted; spacing is 0 in exact mode.
using KeyFn = std::function<ExtReal(const Point&, const ExtReal&)>;
using InnerFn = std::function<ExtReal(const Point&, const ExtReal&, double, double)>;

LimitEstimate band_estimate(const ProbeFunction& f, const SlopeConfig& cfg, const KeyFn& key,
                            const InnerFn& inner) {
  cfg.schedule.validate();
  if (f.space.is_finite()) {
    auto pts = f.space.all_points();
    std::vector<std::pair<Point, ExtReal>> keyed;
    double tmin = std::numeric_limits<double>::infinity();
    for (const Point& u : pts) {
      ExtReal k = key(u, eval_at(f, u));
      keyed.emplace_back(u, k);
      if (k.finite()) tmin = std::min(tmin, k.value());
    }
    auto bands = radii_with_snap(cfg.schedule, tmin);
    auto value_at = [&](const BandRadius& band) {
      ExtReal inf = ExtReal::infinity();
      for (const auto& [u, k] : keyed) {
        if (!k.finite()) continue;
        bool member = band.closed ? (k.value() <= band.rho + kMemberSlack) : (k.value() < band.rho);
        if (member) inf = ext_min(inf, inner(u, eval_at(f, u), band.rho, 0.0));
      }
      return inf;
    };
    return estimate_over_radii(value_at, bands, cfg.tol, LimitTrend::NondecreasingInf);
  }

  std::vector<BandRadius> bands;
  for (double r : cfg.schedule.radii()) bands.push_back({r, false});
  auto value_at = [&](const BandRadius& band) {
    double delta = band.rho / cfg.band_resolution;
    ExtReal inf = ExtReal::infinity();
    for (const Point& u : sample_region(f, f.xbar, band.rho, delta)) {
      ExtReal k = key(u, eval_at(f, u));
      if (!k.finite() || k.value() >= band.rho) continue;
      inf = ext_min(inf, inner(u, eval_at(f, u), band.rho, delta));
    }
    return inf;
  };
  return estimate_over_radii(value_at, bands, cfg.tol, LimitTrend::NondecreasingInf);
}

// Band key for {d(x,xbar) < rho, 0 < f < rho} (or |f| < rho with full_band).
KeyFn strict_band_key(const ProbeFunction& f, const SlopeConfig& cfg) {
  return [&f, full = cfg.full_band](const Point& u, const ExtReal& fu) -> ExtReal {
    if (!fu.finite()) return ExtReal::infinity();
    double d = f.space.dist(u, f.xbar);
    if (full) {
      if (u == f.xbar) return ExtReal::infinity();
      return ExtReal(std::max(d, std::fabs(fu.value())));
    }
    if (fu.value() <= 0.0) return ExtReal::infinity();
    return ExtReal(std::max(d, fu.value()));
  };
}

// Band key for {d(x,xbar) < rho, 0 < f/d(x,xbar) < rho}.
KeyFn ratio_band_key(const ProbeFunction& f) {
  return [&f](const Point& u, const ExtReal& fu) -> ExtReal {
    if (!fu.finite() || fu.value() <= 0.0 || u == f.xbar) return ExtReal::infinity();
    double d = f.space.dist(u, f.xbar);
    if (d <= 0.0) return ExtReal::infinity();
    return ExtReal(std::max(d, fu.value() / d));
  };
}

InnerFn inner_ratio(const ProbeFunction& f) {
  return [&f](const Point& u, const ExtReal& fu, double, double) {
    return extreal_div(positive_part(fu), ExtReal(f.space.dist(u, f.xbar)), ExtReal::infinity());
  };
}

InnerFn inner_er(const ProbeFunction& f) {
  return [&f](const Point& u, const ExtReal& fu, double, double spacing) {
    double reach = f.space.dist(u, f.xbar) + spacing;
    DistResult dr = dist_to_level_set(f, u, reach, spacing);
    return extreal_div(positive_part(fu), dr.value, ExtReal(0.0));
  };
}

InnerFn inner_local(const ProbeFunction& f) {
  return [&f](const Point& u, const ExtReal& fu, double, double spacing) -> ExtReal {
    if (f.space.is_finite()) return finite_local_slope(f, u).value;
    return euclid_window_sup(f, u, fu.value(), 1.5 * spacing, spacing, false);
  };
}

InnerFn inner_nonlocal(const ProbeFunction& f, const SlopeConfig& cfg) {
  double start = cfg.nonlocal_start_radius > 0 ? cfg.nonlocal_start_radius : f.domain_radius;
  return [&f, start](const Point& u, const ExtReal&, double rho, double spacing) -> ExtReal {
    if (f.space.is_finite()) return finite_nonlocal_slope(f, u).value;
    return euclid_nonlocal_slope(f, u, rho, spacing, std::max(start, rho)).value;
  };
}

InnerFn inner_subdiff(const ProbeFunction& f) {
  return [&f](const Point& u, const ExtReal&, double, double) -> ExtReal {
    NormKind nk = f.space.is_euclidean() ? f.space.euclidean().norm() : NormKind::L2;
    return min_xnorm(f.subdiff(u), nk);
  };
}

InnerFn inner_max(InnerFn a, InnerFn b) {
  return [a = std::move(a), b = std::move(b)](const Point& u, const ExtReal& fu, double rho,
                                              double spacing) {
    return ext_max(a(u, fu, rho, spacing), b(u, fu, rho, spacing));
  };
}

LimitEstimate no_oracle_estimate() {
  LimitEstimate e;
  e.reported = ExtReal::infinity();
  e.add_note("subdiff-oracle-absent");
  return e;
}

}  // namespace

// ---- pointwise ops ----------------------------------------------------------

PointwiseValue local_slope(const ProbeFunction& f, const Point& x,
                           const std::vector<double>& probe_radii, int band_resolution) {
  if (f.space.is_finite()) return finite_local_slope(f, x);
  double fx = require_finite_value(f, x, "local_slope");
  if (probe_radii.empty()) throw std::invalid_argument("local_slope: empty probe radius list");
  PointwiseValue out;
  for (double r : probe_radii) {
    out.value = euclid_window_sup(f, x, fx, r, r / band_resolution, false);
    out.search_radius = r;
  }
  return out;
}

PointwiseValue local_slope(const ProbeFunction& f, const Point& x, const SlopeConfig& cfg) {
  return local_slope(f, x, cfg.schedule.radii(), cfg.band_resolution);
}

PointwiseValue nonlocal_slope(const ProbeFunction& f, const Point& x, const SlopeConfig& cfg) {
  if (f.space.is_finite()) return finite_nonlocal_slope(f, x);
  double start = cfg.nonlocal_start_radius > 0 ? cfg.nonlocal_start_radius : f.domain_radius;
  return euclid_nonlocal_slope(f, x, cfg.finest_radius(), cfg.finest_spacing(), start);
}

PointwiseValue restricted_nonlocal_slope(const ProbeFunction& f, const Point& x, RegionKind region,
                                         const SlopeConfig& cfg) {
  double fx = require_finite_value(f, x, "restricted_nonlocal_slope");
  double spacing = cfg.finest_spacing();
  if (region == RegionKind::LevelSet) {
    double reach = f.space.dist(x, f.xbar) + spacing;
    DistResult dr = dist_to_level_set(f, x, reach, spacing);
    PointwiseValue out;
    out.value = extreal_div(positive_part(ExtReal(fx)), dr.value, ExtReal(0.0));
    out.truncated = dr.truncated;
    out.search_radius = reach;
    return out;
  }

  // SublevelDist: same candidates as the nonlocal scan, filtered by
  // d(u,S) <= d(x,S). A supremum over fewer points never exceeds the
  // nonlocal value, and the expansion bound f(x)/radius caps what any
  // unseen candidate could contribute.
  auto dist_of = [&](const Point& u) {
    double reach = f.space.dist(u, f.xbar) + spacing;
    return dist_to_level_set(f, u, reach, spacing);
  };
  DistResult dx = dist_of(x);
  PointwiseValue out;
  if (f.space.is_finite()) {
    ExtReal best{0.0};
    for (const Point& u : f.space.all_points()) {
      if (u == x) continue;
      DistResult du = dist_of(u);
      if (!(du.value <= dx.value)) continue;
      best = ext_max(best, step_ratio(fx, eval_at(f, u), f.space.dist(u, x), true));
    }
    out.value = best;
    return out;
  }
  double window = cfg.finest_radius();
  double radius = std::max({cfg.nonlocal_start_radius > 0 ? cfg.nonlocal_start_radius : f.domain_radius,
                            window, spacing});
  double cap = 64.0 * std::max(f.domain_radius, 1.0);
  ExtReal best{0.0};
  auto scan = [&](double outer) {
    best = ExtReal(0.0);
    std::vector<Point> cands = window_candidates(f, x, window, spacing);
    auto far = grid_ball(f.space.euclidean(), x, outer, spacing);
    cands.insert(cands.end(), far.begin(), far.end());
    for (const Point& u : cands) {
      double d = f.space.dist(u, x);
      if (d <= 0.0) continue;
      ExtReal r = step_ratio(fx, eval_at(f, u), d, true);
      if (!(r > best)) continue;  // cannot raise the supremum, skip the distance gate
      if (!dx.value.is_inf()) {
        DistResult du = dist_of(u);
        if (!(du.value <= dx.value)) continue;
      }
      best = r;
    }
  };
  scan(radius);
  while (fx > 0.0 && radius < cap && ExtReal(fx / radius) > best) {
    radius *= 2.0;
    scan(radius);
  }
  out.value = best;
  out.search_radius = radius;
  out.truncated = (fx > 0.0 && ExtReal(fx / radius) > best) || dx.truncated;
  return out;
}

std::optional<ExtReal> subdiff_slope(const ProbeFunction& f, const Point& x) {
  if (!f.has_subdiff()) return std::nullopt;
  NormKind nk = f.space.is_euclidean() ? f.space.euclidean().norm() : NormKind::L2;
  return min_xnorm(f.subdiff(x), nk);
}

// ---- band ops ---------------------------------------------------------------

LimitEstimate er_modulus(const ProbeFunction& f, const SlopeConfig& cfg) {
  return band_estimate(f, cfg, strict_band_key(f, cfg), inner_er(f));
}

LimitEstimate strict_outer_slope(const ProbeFunction& f, const SlopeConfig& cfg) {
  return band_estimate(f, cfg, strict_band_key(f, cfg), inner_local(f));
}

LimitEstimate uniform_strict_slope(const ProbeFunction& f, const SlopeConfig& cfg) {
  return band_estimate(f, cfg, strict_band_key(f, cfg), inner_nonlocal(f, cfg));
}

LimitEstimate ratio_liminf(const ProbeFunction& f, const SlopeConfig& cfg) {
  return band_estimate(f, cfg, strict_band_key(f, cfg), inner_ratio(f));
}

LimitEstimate strict_outer_subdiff_slope(const ProbeFunction& f, const SlopeConfig& cfg) {
  if (!f.has_subdiff()) return no_oracle_estimate();
  return band_estimate(f, cfg, strict_band_key(f, cfg), inner_subdiff(f));
}

LimitEstimate local_slope_ratio_band(const ProbeFunction& f, const SlopeConfig& cfg) {
  return band_estimate(f, cfg, ratio_band_key(f), inner_local(f));
}

LimitEstimate subdiff_slope_ratio_band(const ProbeFunction& f, const SlopeConfig& cfg) {
  if (!f.has_subdiff()) return no_oracle_estimate();
  return band_estimate(f, cfg, ratio_band_key(f), inner_subdiff(f));
}

SlopeReport make_slope_report(const ProbeFunction& f, const std::vector<Point>& probe_points,
                              const SlopeConfig& cfg) {
  SlopeReport rep;
  rep.fixture = f.name;
  rep.subdiff_available = f.has_subdiff();
  for (const Point& x : probe_points) {
    PointRow row;
    row.at = x;
    row.fval = eval_at(f, x);
    if (row.fval.finite()) {
      row.local = local_slope(f, x, cfg);
      row.nonlocal = nonlocal_slope(f, x, cfg);
      row.restricted_sublevel = restricted_nonlocal_slope(f, x, RegionKind::SublevelDist, cfg);
      row.restricted_levelset = restricted_nonlocal_slope(f, x, RegionKind::LevelSet, cfg);
    }
    row.subdiff = subdiff_slope(f, x);
    rep.points.push_back(std::move(row));
  }
  rep.er = er_modulus(f, cfg);
  rep.strict_outer = strict_outer_slope(f, cfg);
  rep.uniform_strict = uniform_strict_slope(f, cfg);
  rep.ratio = ratio_liminf(f, cfg);
  rep.subdiff_strict_outer = strict_outer_subdiff_slope(f, cfg);
  return rep;
}

// ---- criteria engine --------------------------------------------------------

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "not-evaluable";
  }
}

bool CriteriaVerdict::audits_ok() const {
  for (const auto& a : audits)
    if (a.applicable && !a.passed) return false;
  for (const auto& a : qualitative_audits)
    if (a.applicable && !a.passed) return false;
  return true;
}

const Condition* CriteriaVerdict::find(const std::string& key) const {
  for (const auto& c : conditions)
    if (c.key == key) return &c;
  for (const auto& c : qualitative)
    if (c.key == key) return &c;
  return nullptr;
}

namespace criteria {

Condition compare(std::string key, std::string what, const ExtReal& value, double threshold,
                  double slack, double margin) {
  Condition c;
  c.key = std::move(key);
  c.what = std::move(what);
  c.value = value;
  c.verdict = value > ExtReal(threshold + slack) ? Tri::True : Tri::False;
  c.marginal = value.finite() && std::fabs(value.value() - threshold) <= margin;
  return c;
}

Condition skipped(std::string key, std::string what) {
  Condition c;
  c.key = std::move(key);
  c.what = std::move(what);
  c.verdict = Tri::NotEvaluable;
  c.value = ExtReal::infinity();
  return c;
}

const Condition* Audits::get(const std::string& key) const {
  for (const auto& c : *conditions)
    if (c.key == key) return &c;
  return nullptr;
}

void Audits::implies(const std::string& name, const std::string& lhs, const std::string& rhs,
                     bool guard, const std::string& guard_note) {
  ImplicationAudit a;
  a.name = name;
  const Condition* l = get(lhs);
  const Condition* r = get(rhs);
  if (!guard) {
    a.applicable = false;
    a.detail = guard_note;
  } else if (!l || !r || l->verdict == Tri::NotEvaluable || r->verdict == Tri::NotEvaluable) {
    a.applicable = false;
    a.detail = "side not evaluable";
  } else if (l->marginal || r->marginal) {
    a.applicable = false;
    a.detail = "value too close to the threshold";
  } else {
    a.applicable = true;
    a.passed = !(l->verdict == Tri::True && r->verdict == Tri::False);
    a.detail = std::string(tri_name(l->verdict)) + " => " + tri_name(r->verdict);
  }
  out->push_back(std::move(a));
}

void Audits::equiv(const std::string& name, const std::string& lhs, const std::string& rhs,
                   bool guard, const std::string& guard_note) {
  ImplicationAudit a;
  a.name = name;
  const Condition* l = get(lhs);
  const Condition* r = get(rhs);
  if (!guard) {
    a.applicable = false;
    a.detail = guard_note;
  } else if (!l || !r || l->verdict == Tri::NotEvaluable || r->verdict == Tri::NotEvaluable) {
    a.applicable = false;
    a.detail = "side not evaluable";
  } else if (l->marginal || r->marginal) {
    a.applicable = false;
    a.detail = "value too close to the threshold";
  } else {
    a.applicable = true;
    a.passed = l->verdict == r->verdict;
    a.detail = std::string(tri_name(l->verdict)) + " vs " + tri_name(r->verdict);
  }
  out->push_back(std::move(a));
}

}  // namespace criteria

CriteriaVerdict criteria_verdict(const ProbeFunction& f, double gamma, const SlopeConfig& cfg) {
  CriteriaVerdict v;
  v.gamma = gamma;
  bool normed = f.space.is_euclidean();
  bool oracle = f.has_subdiff();
  bool exact = f.space.is_finite();

  LimitEstimate er = er_modulus(f, cfg);
  LimitEstimate uss = uniform_strict_slope(f, cfg);
  LimitEstimate ratio = ratio_liminf(f, cfg);
  LimitEstimate sos = strict_outer_slope(f, cfg);
  LimitEstimate mix_local =
      band_estimate(f, cfg, strict_band_key(f, cfg), inner_max(inner_local(f), inner_ratio(f)));
  LimitEstimate sosub = (normed && oracle) ? strict_outer_subdiff_slope(f, cfg) : LimitEstimate{};
  LimitEstimate mix_sub = (normed && oracle)
                              ? band_estimate(f, cfg, strict_band_key(f, cfg),
                                              inner_max(inner_subdiff(f), inner_ratio(f)))
                              : LimitEstimate{};

  double margin = std::max(10.0 * cfg.tol, 0.02 * std::max(1.0, gamma));
  auto cond = [&](const char* key, const char* what, const LimitEstimate& e) {
    return criteria::compare(key, what, e.reported, gamma, cfg.strict_slack, margin);
  };

  v.conditions.push_back(cond("a", "error bound modulus", er));
  v.conditions.push_back(cond("b", "uniform strict slope", uss));
  v.conditions.push_back(cond("c", "ratio liminf", ratio));
  v.conditions.push_back(cond("d", "strict outer slope", sos));
  v.conditions.push_back(cond("e", "band max(local slope, ratio)", mix_local));
  if (normed && oracle) {
    v.conditions.push_back(cond("f", "strict outer subdifferential slope", sosub));
    v.conditions.push_back(cond("g", "band max(subdiff slope, ratio)", mix_sub));
  } else {
    v.conditions.push_back(criteria::skipped("f", "strict outer subdifferential slope"));
    v.conditions.push_back(criteria::skipped("g", "band max(subdiff slope, ratio)"));
  }

  criteria::Audits ac{&v.conditions, &v.audits};
  ac.implies("(c)=>(e)", "c", "e", true, "");
  ac.implies("(d)=>(e)", "d", "e", true, "");
  ac.implies("(e)=>(b)", "e", "b", true, "");
  ac.implies("(a)=>(b)", "a", "b", true, "");
  ac.implies("(d)=>(f)", "d", "f", normed, "needs a norm");
  ac.implies("(e)=>(g)", "e", "g", normed, "needs a norm");
  ac.implies("(b)=>(a)", "b", "a", f.complete && f.lsc, "needs completeness and lsc");
  ac.equiv("(d)<=>(f)", "d", "f", normed && f.complete && f.lsc, "needs a complete normed setting");
  ac.equiv("(e)<=>(g)", "e", "g", normed && f.complete && f.lsc, "needs a complete normed setting");
  ac.equiv("(b)<=>(d)", "b", "d", normed && f.convex, "needs convexity in a normed space");
  ac.equiv("(b)<=>(f)", "b", "f", normed && f.convex, "needs convexity in a normed space");

  // Positivity chain: on sampled fixtures the smallest trustworthy scale is
  // the last schedule radius, so "positive" means clearing that floor.
  double floor = exact ? cfg.strict_slack : std::max(cfg.strict_slack, cfg.finest_radius());
  double qmargin = 2.0 * floor;
  LimitEstimate qd_est = local_slope_ratio_band(f, cfg);
  LimitEstimate qf_est = (normed && oracle) ? subdiff_slope_ratio_band(f, cfg) : LimitEstimate{};
  auto qcond = [&](const char* key, const char* what, const LimitEstimate& e) {
    return criteria::compare(key, what, e.reported, 0.0, floor, qmargin);
  };
  v.qualitative.push_back(qcond("q-eb", "error bound modulus positive", er));
  v.qualitative.push_back(qcond("q-a", "uniform strict slope positive", uss));
  v.qualitative.push_back(qcond("q-b", "ratio liminf positive", ratio));
  v.qualitative.push_back(qcond("q-c", "strict outer slope positive", sos));
  v.qualitative.push_back(qcond("q-d", "local slope over the ratio band positive", qd_est));
  if (normed && oracle) {
    v.qualitative.push_back(qcond("q-e", "strict outer subdiff slope positive", sosub));
    v.qualitative.push_back(qcond("q-f", "subdiff slope over the ratio band positive", qf_est));
  } else {
    v.qualitative.push_back(criteria::skipped("q-e", "strict outer subdiff slope positive"));
    v.qualitative.push_back(criteria::skipped("q-f", "subdiff slope over the ratio band positive"));
  }

  bool complete_lsc = f.complete && f.lsc;
  criteria::Audits qc{&v.qualitative, &v.qualitative_audits};
  qc.implies("(eb)=>(a)", "q-eb", "q-a", complete_lsc, "needs completeness and lsc");
  qc.implies("(b)=>(d)", "q-b", "q-d", complete_lsc, "needs completeness and lsc");
  qc.implies("(c)=>(d)", "q-c", "q-d", complete_lsc, "needs completeness and lsc");
  qc.implies("(d)=>(a)", "q-d", "q-a", complete_lsc, "needs completeness and lsc");
  qc.implies("(e)=>(f)", "q-e", "q-f", complete_lsc && normed, "needs a complete normed setting");
  qc.equiv("(e)<=>(c)", "q-e", "q-c", complete_lsc && normed, "needs a complete normed setting");
  qc.equiv("(f)<=>(d)", "q-f", "q-d", complete_lsc && normed, "needs a complete normed setting");
  return v;
}

}  // namespace slopekit
