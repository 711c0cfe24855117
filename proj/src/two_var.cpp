#include "slopekit/two_var.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace slopekit {
namespace {

DualSet lift_to_product(const DualSet& base, int dy) {
  DualSet out;
  out.hull = base.hull;
  auto lift = [&](const DualVec& v) {
    DualVec w = v;
    w.y.id = -1;
    w.y.dim = dy;
    w.y.x = {0.0, 0.0, 0.0};
    return w;
  };
  for (const auto& v : base.vertices) out.vertices.push_back(lift(v));
  for (const auto& v : base.rays) out.rays.push_back(lift(v));
  for (const auto& v : base.lines) out.lines.push_back(lift(v));
  if (out.hull) {
    // The off-slice indicator contributes the whole Y* axis.
    for (int j = 0; j < dy; ++j) {
      DualVec axis;
      axis.x.dim = 0;
      axis.y.dim = dy;
      axis.y.x = {0.0, 0.0, 0.0};
      axis.y.x[static_cast<size_t>(j)] = 1.0;
      out.lines.push_back(axis);
    }
  }
  return out;
}

}  // namespace

TwoVarFunction embed_slice(const ProbeFunction& f, const Space& Y, const Point& ybar) {
  auto base = std::make_shared<ProbeFunction>(f);
  TwoVarFunction g;
  g.name = "embed(" + f.name + ")";
  g.X = f.space;
  g.Y = Y;
  g.xbar = f.xbar;
  g.ybar = ybar;
  g.convex = f.convex;
  g.lsc = f.lsc;
  g.complete = f.complete;
  g.domain_radius = f.domain_radius;

  g.eval = [base, ybar](const Point& x, const Point& y) -> ExtReal {
    if (y != ybar) return ExtReal::infinity();
    return base->eval(x);
  };

  if (f.has_subdiff() && f.space.is_euclidean() && Y.is_euclidean()) {
    int dy = Y.euclidean().dim();
    g.subdiff_exact = f.subdiff_exact;
    g.subdiff = [base, ybar, dy](const Point& x, const Point& y) -> DualSet {
      if (y != ybar) return DualSet::empty_set();
      return lift_to_product(base->subdiff(x), dy);
    };
  }

  Space Ycopy = Y;
  g.samples = [base, Ycopy, ybar](const PairPt& center, double radius,
                                  double spacing) -> std::vector<PairPt> {
    std::vector<PairPt> out;
    if (Ycopy.is_finite()) {
      for (const Point& x : sample_region(*base, center.x, radius, spacing))
        for (const Point& y : Ycopy.all_points()) out.push_back({x, y});
      return out;
    }
    for (const Point& x : sample_region(*base, center.x, radius, spacing))
      out.push_back({x, ybar});
    // A few off-slice pairs so the positivity validator has something to bite.
    double h = spacing > 0.0 ? spacing : 0.1;
    for (int k = 1; k <= 3; ++k) {
      Point up = ybar, dn = ybar;
      up.x[0] += k * h;
      dn.x[0] -= k * h;
      out.push_back({base->xbar, up});
      out.push_back({base->xbar, dn});
    }
    return out;
  };

  g.sublevel = [base](const Point& xcenter, double radius, double spacing) -> std::vector<Point> {
    std::vector<Point> out;
    for (const Point& u : sample_region(*base, xcenter, radius, spacing)) {
      ExtReal v = base->eval(u);
      if (v.finite() && v.raw() <= 0.0) out.push_back(u);
    }
    return out;
  };

  return g;
}

PairValidation validate_pair_conditions(const TwoVarFunction& g, const RadiusSchedule& schedule,
                                        double tol, int band_resolution) {
  schedule.validate();
  PairValidation rep;

  double coarse = schedule.rho0 / band_resolution;
  std::vector<PairPt> pan = g.samples({g.xbar, g.ybar}, g.domain_radius, coarse);
  for (const PairPt& p : pan) {
    if (p.y == g.ybar) continue;
    ExtReal v = g.eval(p.x, p.y);
    if (v.finite() && v.raw() <= 0.0) {
      rep.p1_ok = false;
      ++rep.p1_violations;
    }
  }

  bool exact = g.X.is_finite() && g.Y.is_finite();
  std::vector<BandRadius> rungs;
  if (exact) {
    double tmin = std::numeric_limits<double>::infinity();
    for (const PairPt& p : pan) {
      ExtReal v = g.eval(p.x, p.y);
      if (v.finite() && v.raw() > 0.0) tmin = std::min(tmin, v.raw());
    }
    rungs = radii_with_snap(schedule, tmin);
  } else {
    for (double r : schedule.radii()) rungs.push_back({r, false});
  }

  auto band_value = [&](const BandRadius& band) -> ExtReal {
    double delta = band.rho / band_resolution;
    std::vector<PairPt> cands = exact ? pan : g.samples({g.xbar, g.ybar}, band.rho, delta);
    ExtReal best = ExtReal::infinity();
    for (const PairPt& p : cands) {
      ExtReal v = g.eval(p.x, p.y);
      if (!v.finite() || v.raw() <= 0.0) continue;
      bool in = band.closed ? (v.raw() <= band.rho) : (v.raw() < band.rho);
      if (!in) continue;
      ExtReal ratio = extreal_div(v, ExtReal(g.dy(p.y, g.ybar)), ExtReal::infinity());
      best = ext_min(best, ratio);
    }
    return best;
  };
  rep.p2_lower = estimate_over_radii(band_value, rungs, tol, LimitTrend::NondecreasingInf);
  return rep;
}

DistResult dist_to_sublevel_slice(const TwoVarFunction& g, const Point& x, double search_radius,
                                  double spacing) {
  DistResult res;
  auto consider = [&](const Point& u) {
    ExtReal v = g.eval(u, g.ybar);
    if (!v.finite() || v.raw() > 0.0) return;
    double d = g.dx(x, u);
    if (res.value.is_inf() || d < res.value.raw()) res.value = ExtReal(d);
  };

  if (g.X.is_finite()) {
    for (const Point& u : g.X.all_points()) consider(u);
    return res;
  }
  if (!g.sublevel) throw std::logic_error("fixture lacks a sublevel sampler");
  for (const Point& u : g.sublevel(x, search_radius, spacing)) {
    double d = g.dx(x, u);
    if (res.value.is_inf() || d < res.value.raw()) res.value = ExtReal(d);
  }
  consider(g.xbar);
  res.truncated = res.value.is_inf();
  return res;
}

}  // namespace slopekit
