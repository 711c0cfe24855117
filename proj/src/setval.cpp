#include "slopekit/setval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "slopekit/probe_function.hpp"
#include "slopekit/product.hpp"

namespace slopekit {

namespace {

constexpr double kMemberSlack = 1e-12;

Point coords_sub(const Point& a, const Point& b, int dim) {
  double v[3] = {0, 0, 0};
  for (int i = 0; i < dim; ++i) v[i] = a[i] - b[i];
  return dim == 1   ? Point::of(v[0])
         : dim == 2 ? Point::of(v[0], v[1])
                    : Point::of(v[0], v[1], v[2]);
}

Point coords_add(const Point& a, const Point& b, int dim) {
  double v[3] = {0, 0, 0};
  for (int i = 0; i < dim; ++i) v[i] = a[i] + b[i];
  return dim == 1   ? Point::of(v[0])
         : dim == 2 ? Point::of(v[0], v[1])
                    : Point::of(v[0], v[1], v[2]);
}

Point coords_scale(const Point& a, double s, int dim) {
  double v[3] = {0, 0, 0};
  for (int i = 0; i < dim; ++i) v[i] = s * a[i];
  return dim == 1   ? Point::of(v[0])
         : dim == 2 ? Point::of(v[0], v[1])
                    : Point::of(v[0], v[1], v[2]);
}

Point negate(const Point& a) { return coords_scale(a, -1.0, a.dim); }

bool coords_match(const Point& a, const Point& b, double tol) {
  int dim = std::max(a.dim, b.dim);
  for (int i = 0; i < dim; ++i) {
    double av = i < a.dim ? a[i] : 0.0;
    double bv = i < b.dim ? b[i] : 0.0;
    if (std::abs(av - bv) > tol) return false;
  }
  return true;
}

bool exact_relation(const SetValuedMapping& F) { return F.X.is_finite() && F.Y.is_finite(); }

void require_base_on_graph(const SetValuedMapping& F) {
  if (!F.contains) throw std::invalid_argument(F.name + ": membership oracle missing");
  if (!F.contains(F.xbar, F.ybar))
    throw std::invalid_argument(F.name + ": base pair must lie on the graph");
}

LimitEstimate oracle_absent_estimate() {
  LimitEstimate e;
  e.reported = ExtReal::infinity();
  e.add_note("normal-cone-oracle-absent");
  return e;
}

// Band membership key for graph pairs: both coordinates inside the rung and
// x outside the solution set F^{-1}(ybar). On the graph the induced value
// d(y, ybar) doubles as the y-coordinate distance, so the key is
// max{d(x, xbar), f}. The exclusion is stronger than f > 0 when several
// range values solve for the same x, which is exactly the multivalued case.
PairKeyFn graph_band_key(const TwoVarFunction& g, const SetValuedMapping& F) {
  auto contains = F.contains;
  Point ybar = F.ybar;
  return [&g, contains, ybar](const PairPt& w, const ExtReal& fw) -> ExtReal {
    if (!fw.finite()) return ExtReal::infinity();
    if (contains(w.x, ybar)) return ExtReal::infinity();
    return ext_max(ExtReal(g.dx(w.x, g.xbar)), fw);
  };
}

// Deterministic unit directions in the domain norm. Dimension one has only
// the two signs; higher dimensions fan the sphere (uniform angles in the
// plane, a golden-angle spiral in space) and renormalize per the norm.
std::vector<Point> unit_directions(int dim, NormKind kind, int count) {
  std::vector<Point> out;
  if (count < 1) count = 1;
  if (dim == 1) {
    out.push_back(Point::of(1.0));
    out.push_back(Point::of(-1.0));
    return out;
  }
  if (dim == 2) {
    for (int i = 0; i < count; ++i) {
      double th = 2.0 * 3.14159265358979323846 * i / count;
      Point p = Point::of(std::cos(th), std::sin(th));
      double n = norm_of(p, kind);
      out.push_back(coords_scale(p, 1.0 / n, 2));
    }
    return out;
  }
  for (int i = 0; i < count; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / count;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = 2.399963229728653 * i;
    Point p = Point::of(r * std::cos(phi), r * std::sin(phi), z);
    double n = norm_of(p, kind);
    out.push_back(coords_scale(p, 1.0 / n, 3));
  }
  return out;
}

}  // namespace

SetValuedMapping inverse_mapping(const SetValuedMapping& F) {
  SetValuedMapping G;
  G.name = F.name + "-inverse";
  G.X = F.Y;
  G.Y = F.X;
  G.xbar = F.ybar;
  G.ybar = F.xbar;
  auto contains = F.contains;
  G.contains = [contains](const Point& y, const Point& x) { return contains(x, y); };
  if (F.graph_samples) {
    auto gs = F.graph_samples;
    G.graph_samples = [gs](const PairPt& center, double radius, double spacing) {
      std::vector<PairPt> out;
      for (const PairPt& p : gs(PairPt{center.y, center.x}, radius, spacing)) {
        out.push_back(PairPt{p.y, p.x});
      }
      return out;
    };
  }
  if (F.normal_cone) {
    auto nc = F.normal_cone;
    G.normal_cone = [nc](const Point& y, const Point& x) {
      DualSet N = nc(x, y);
      auto swap_parts = [](std::vector<DualVec>& vs) {
        for (DualVec& v : vs) std::swap(v.x, v.y);
      };
      swap_parts(N.vertices);
      swap_parts(N.rays);
      swap_parts(N.lines);
      return N;
    };
  }
  G.convex = F.convex;
  G.closed = F.closed;
  G.complete = F.complete;
  G.domain_radius = F.domain_radius;
  return G;
}

DistResult dist_to_image(const SetValuedMapping& F, const Point& x, double search_radius,
                         double spacing) {
  DistResult out;
  if (F.Y.is_finite()) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& y : F.Y.all_points()) {
      if (!F.contains(x, y)) continue;
      best = std::min(best, F.Y.dist(F.ybar, y));
    }
    if (std::isfinite(best)) out.value = ExtReal(best);
    return out;
  }
  if (!F.image_samples)
    throw std::invalid_argument(F.name + ": Euclidean range needs image_samples");
  double cap = 64.0 * std::max(F.domain_radius, 1.0);
  double radius = std::max({search_radius, spacing, 1e-12});
  while (true) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& y : F.image_samples(x, radius, std::max(spacing, radius / 64.0))) {
      if (!F.contains(x, y)) continue;
      best = std::min(best, F.Y.dist(F.ybar, y));
    }
    if (std::isfinite(best)) {
      out.value = ExtReal(best);
      return out;
    }
    if (radius >= cap) {
      out.truncated = true;
      return out;
    }
    radius *= 2.0;
  }
}

DistResult dist_to_preimage(const SetValuedMapping& F, const Point& x, double search_radius,
                            double spacing) {
  DistResult out;
  if (F.X.is_finite()) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& u : F.X.all_points()) {
      if (!F.contains(u, F.ybar)) continue;
      best = std::min(best, F.X.dist(x, u));
    }
    out.value = ExtReal(best);
    return out;
  }
  double best = F.X.dist(x, F.xbar);
  if (F.preimage_samples) {
    for (const Point& u :
         F.preimage_samples(x, std::max(search_radius, spacing), std::max(spacing, 1e-12))) {
      if (!F.contains(u, F.ybar)) continue;
      best = std::min(best, F.X.dist(x, u));
    }
  }
  out.value = ExtReal(best);
  return out;
}

TwoVarFunction induced_function(const SetValuedMapping& F) {
  require_base_on_graph(F);
  TwoVarFunction g;
  g.name = F.name + "-reduction";
  g.X = F.X;
  g.Y = F.Y;
  g.xbar = F.xbar;
  g.ybar = F.ybar;
  g.convex = F.convex;
  g.lsc = F.closed;
  g.complete = F.complete;
  g.domain_radius = F.domain_radius;

  // Captures are copies so the reduction outlives the mapping object.
  auto contains = F.contains;
  Space Y = F.Y;
  Point ybar = F.ybar;
  g.eval = [contains, Y, ybar](const Point& x, const Point& y) -> ExtReal {
    if (!contains(x, y)) return ExtReal::infinity();
    return ExtReal(Y.dist(ybar, y));
  };

  if (exact_relation(F)) {
    // Full product enumeration keeps the local-slope snap reading the same
    // candidate universe as hand-built pair functions on the same spaces.
    Space X = F.X;
    g.samples = [X, Y](const PairPt&, double, double) {
      std::vector<PairPt> out;
      for (const Point& x : X.all_points()) {
        for (const Point& y : Y.all_points()) out.push_back(PairPt{x, y});
      }
      return out;
    };
  } else {
    if (!F.graph_samples)
      throw std::invalid_argument(F.name + ": Euclidean mapping needs graph_samples");
    auto gs = F.graph_samples;
    PairPt base{F.xbar, F.ybar};
    g.samples = [gs, base, contains](const PairPt& center, double radius, double spacing) {
      std::vector<PairPt> out = gs(center, radius, spacing);
      if (contains(center.x, center.y)) out.push_back(center);
      out.push_back(base);
      return out;
    };
  }

  if (F.X.is_euclidean() && F.preimage_samples) {
    auto ps = F.preimage_samples;
    Point xbar = F.xbar;
    g.sublevel = [ps, xbar](const Point& xcenter, double radius, double spacing) {
      std::vector<Point> out = ps(xcenter, radius, spacing);
      out.push_back(xbar);
      return out;
    };
  }

  // Product subdifferential of d(y, ybar) + graph indicator on a
  // one-dimensional range: the normal cone translated in the Y* slot by the
  // norming functional sign(y - ybar), or by the whole dual interval at the
  // base value. Exact for polyhedral cones, which is all the oracle form
  // carries.
  if (F.has_normal_cone() && F.normed() && F.Y.euclidean().dim() == 1) {
    auto nc = F.normal_cone;
    Point yb = F.ybar;
    g.subdiff = [nc, contains, yb](const Point& x, const Point& y) -> DualSet {
      if (!contains(x, y)) return DualSet::empty_set();
      DualSet N = nc(x, y);
      if (N.empty()) return N;
      double v = y[0] - yb[0];
      std::vector<double> shifts;
      if (v > 0.0) {
        shifts = {1.0};
      } else if (v < 0.0) {
        shifts = {-1.0};
      } else {
        shifts = {-1.0, 0.0, 1.0};
      }
      DualSet out;
      out.hull = true;
      out.rays = N.rays;
      out.lines = N.lines;
      for (double s : shifts) {
        for (const DualVec& vert : N.vertices) {
          DualVec w = vert;
          if (w.y.dim == 0) w.y = Point::of(0.0);
          w.y = Point::of(w.y[0] + s);
          out.vertices.push_back(w);
        }
      }
      return out;
    };
    g.subdiff_exact = true;
  }
  return g;
}

LimitEstimate subregularity_constant(const SetValuedMapping& F, const TwoVarConfig& cfg) {
  require_base_on_graph(F);
  auto ratio_at = [&F](const Point& u, double search_radius, double spacing) -> ExtReal {
    DistResult numer = dist_to_image(F, u, search_radius, spacing);
    DistResult denom = dist_to_preimage(F, u, F.X.dist(u, F.xbar) + spacing, spacing);
    return extreal_div(numer.value, denom.value, ExtReal::infinity());
  };

  if (F.X.is_finite()) {
    std::vector<std::pair<Point, double>> members;
    double tmin = std::numeric_limits<double>::infinity();
    for (const Point& u : F.X.all_points()) {
      if (F.contains(u, F.ybar)) continue;
      double k = F.X.dist(u, F.xbar);
      members.emplace_back(u, k);
      tmin = std::min(tmin, k);
    }
    auto band_value = [&](const BandRadius& band) -> ExtReal {
      ExtReal inf = ExtReal::infinity();
      for (const auto& [u, k] : members) {
        bool member = band.closed ? k <= band.rho + kMemberSlack : k < band.rho;
        if (member) inf = ext_min(inf, ratio_at(u, 0.0, 0.0));
      }
      return inf;
    };
    return estimate_over_radii(band_value, radii_with_snap(cfg.schedule, tmin), cfg.tol,
                               LimitTrend::NondecreasingInf);
  }

  std::vector<BandRadius> radii;
  for (double rho : cfg.schedule.radii()) radii.push_back(BandRadius{rho, false});
  auto band_value = [&](const BandRadius& band) -> ExtReal {
    double delta = band.rho / cfg.band_resolution;
    ExtReal inf = ExtReal::infinity();
    for (const Point& u : grid_ball(F.X.euclidean(), F.xbar, band.rho, delta)) {
      if (F.X.dist(u, F.xbar) >= band.rho) continue;
      if (F.contains(u, F.ybar)) continue;
      inf = ext_min(inf, ratio_at(u, std::max(1.0, band.rho), delta));
    }
    return inf;
  };
  return estimate_over_radii(band_value, radii, cfg.tol, LimitTrend::NondecreasingInf);
}

PointwiseValue F_nonlocal_rho_slope(const SetValuedMapping& F, const Point& x, const Point& y,
                                    double rho, const TwoVarConfig& cfg) {
  TwoVarFunction g = induced_function(F);
  return nonlocal_rho_slope(g, PairPt{x, y}, rho, cfg);
}

PointwiseValue F_local_rho_slope(const SetValuedMapping& F, const Point& x, const Point& y,
                                 double rho, const TwoVarConfig& cfg) {
  TwoVarFunction g = induced_function(F);
  return local_rho_slope(g, PairPt{x, y}, rho, cfg);
}

LimitEstimate F_uniform_strict_slope(const SetValuedMapping& F, const TwoVarConfig& cfg) {
  TwoVarFunction g = induced_function(F);
  return band_estimate_pairs(g, cfg, graph_band_key(g, F), pair_inner_nonlocal(g, cfg));
}

LimitEstimate F_strict_slope(const SetValuedMapping& F, const TwoVarConfig& cfg) {
  TwoVarFunction g = induced_function(F);
  return band_estimate_pairs(g, cfg, graph_band_key(g, F), pair_inner_local(g, cfg));
}

LimitEstimate F_ratio_liminf(const SetValuedMapping& F, const TwoVarConfig& cfg) {
  TwoVarFunction g = induced_function(F);
  return band_estimate_pairs(g, cfg, graph_band_key(g, F), pair_inner_ratio(g));
}

CoderivativeResult coderivative(const SetValuedMapping& F, const Point& x, const Point& y,
                                const Point& ystar) {
  CoderivativeResult out;
  if (!F.has_normal_cone()) return out;
  out.evaluable = true;
  DualSet N = F.normal_cone(x, y);
  if (N.empty()) return out;
  Point target = negate(ystar);
  if (N.hull) {
    SliceSolution s = min_xnorm_at_ystar(N, target);
    out.feasible = s.feasible;
    out.min_norm = s.min_norm;
    out.min_point = s.xstar;
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const DualVec& v : N.vertices) {
    if (!coords_match(v.y, target, kMemberSlack)) continue;
    double n = norm_of(v.x, NormKind::L2);
    if (n < best) {
      best = n;
      out.min_point = v.x;
    }
  }
  out.feasible = std::isfinite(best);
  if (out.feasible) out.min_norm = best;
  return out;
}

std::optional<ExtReal> F_subdiff_rho_slope(const SetValuedMapping& F, const Point& x,
                                           const Point& y, double rho) {
  if (!F.has_normal_cone() || !F.normed()) return std::nullopt;
  int dy = F.Y.euclidean().dim();
  NormKind yk = F.Y.euclidean().norm();
  Point v = coords_sub(y, F.ybar, dy);
  if (norm_of(v, yk) <= 0.0) return std::nullopt;
  ExtReal best = ExtReal::infinity();
  for (const Point& j : duality_map(v, yk)) {
    for (const Point& b : ball_points(dy, dual_norm_kind(yk), rho, true)) {
      CoderivativeResult c = coderivative(F, x, y, coords_add(j, b, dy));
      if (c.feasible) best = ext_min(best, ExtReal(c.min_norm));
    }
  }
  return best;
}

std::optional<ExtReal> F_approx_subdiff_rho_slope(const SetValuedMapping& F, const Point& x,
                                                  const Point& y, double rho,
                                                  const std::vector<double>& vgrid) {
  if (!F.has_normal_cone() || !F.normed()) return std::nullopt;
  int dy = F.Y.euclidean().dim();
  NormKind yk = F.Y.euclidean().norm();
  Point v0 = coords_sub(y, F.ybar, dy);
  if (norm_of(v0, yk) <= 0.0) return std::nullopt;

  // The limit over range perturbations reads off the finest grid radius;
  // the unperturbed direction always participates, so the result never
  // exceeds the plain slope at the same rho.
  double radius = 0.0;
  if (!vgrid.empty()) radius = *std::min_element(vgrid.begin(), vgrid.end());
  std::vector<Point> vs{v0};
  if (radius > 0.0) {
    for (const Point& b : ball_points(dy, yk, radius, false)) vs.push_back(coords_add(v0, b, dy));
  }

  ExtReal best = ExtReal::infinity();
  for (const Point& v : vs) {
    if (norm_of(v, yk) <= 1e-15) continue;
    for (const Point& j : duality_map(v, yk)) {
      for (const Point& b : ball_points(dy, dual_norm_kind(yk), rho, true)) {
        CoderivativeResult c = coderivative(F, x, y, coords_add(j, b, dy));
        if (c.feasible) best = ext_min(best, ExtReal(c.min_norm));
      }
    }
  }
  return best;
}

LimitEstimate F_strict_subdiff_slope(const SetValuedMapping& F, const TwoVarConfig& cfg) {
  if (!F.has_normal_cone() || !F.normed()) return oracle_absent_estimate();
  TwoVarFunction g = induced_function(F);
  PairInnerFn inner = [&F](const PairPt& w, const ExtReal&, double rho, double) -> ExtReal {
    std::optional<ExtReal> s = F_subdiff_rho_slope(F, w.x, w.y, rho);
    return s ? *s : ExtReal::infinity();
  };
  return band_estimate_pairs(g, cfg, graph_band_key(g, F), inner);
}

LimitEstimate F_approx_strict_subdiff_slope(const SetValuedMapping& F, const TwoVarConfig& cfg) {
  if (!F.has_normal_cone() || !F.normed()) return oracle_absent_estimate();
  TwoVarFunction g = induced_function(F);
  PairInnerFn inner = [&F](const PairPt& w, const ExtReal&, double rho, double) -> ExtReal {
    std::optional<ExtReal> s = F_approx_subdiff_rho_slope(F, w.x, w.y, rho, {rho});
    return s ? *s : ExtReal::infinity();
  };
  return band_estimate_pairs(g, cfg, graph_band_key(g, F), inner);
}

GfrererResult gfrerer_limit_test(const SetValuedMapping& F, const RadiusSchedule& schedule,
                                 int unit_samples) {
  GfrererResult out;
  if (!F.has_normal_cone() || !F.normed() || !F.image_samples) return out;
  out.evaluable = true;
  int dx = F.X.euclidean().dim();
  int dy = F.Y.euclidean().dim();
  NormKind xk = F.X.euclidean().norm();
  NormKind yk = F.Y.euclidean().norm();
  std::vector<Point> dirs = unit_directions(dx, xk, unit_samples);
  std::vector<Point> duals = unit_sphere_points(dy, dual_norm_kind(yk));

  bool missing = false;
  for (double t : schedule.radii()) {
    double best = std::numeric_limits<double>::infinity();
    GfrererWitness w;
    for (const Point& u : dirs) {
      Point xt = coords_add(F.xbar, coords_scale(u, t, dx), dx);
      for (const Point& y : F.image_samples(xt, 2.0 * t, t / 8.0)) {
        if (!F.contains(xt, y)) continue;
        Point v = coords_scale(coords_sub(y, F.ybar, dy), 1.0 / t, dy);
        double nv = norm_of(v, yk);
        if (nv > 2.0 + 1e-9) continue;
        for (const Point& ystar : duals) {
          CoderivativeResult c = coderivative(F, xt, y, ystar);
          if (!c.feasible) continue;
          double score = std::max(nv, c.min_norm);
          if (score < best) {
            best = score;
            w = GfrererWitness{t, u, PairPt{xt, y}, v, ystar, c.min_point, score};
          }
        }
      }
    }
    if (!std::isfinite(best)) {
      missing = true;
      continue;
    }
    out.rung_scale.push_back(t);
    out.rung_min.push_back(best);
    out.witnesses.push_back(w);
  }

  out.exhausted = missing || out.rung_min.empty();
  if (!out.rung_min.empty()) {
    out.threshold = std::max(1e-9, 0.25 * out.rung_min.front());
    out.excludes_origin = out.rung_min.back() > out.threshold;
  }
  return out;
}

CriteriaVerdict subregularity_verdict(const SetValuedMapping& F, double gamma,
                                      const TwoVarConfig& cfg) {
  CriteriaVerdict v;
  v.gamma = gamma;
  bool normed = F.normed();
  bool oracle = F.has_normal_cone();
  bool dual_ready = normed && oracle;
  bool exact = exact_relation(F);

  TwoVarFunction g = induced_function(F);
  PairKeyFn key = graph_band_key(g, F);
  PairInnerFn approx_inner = [&F](const PairPt& w, const ExtReal&, double rho, double) -> ExtReal {
    std::optional<ExtReal> s = F_approx_subdiff_rho_slope(F, w.x, w.y, rho, {rho});
    return s ? *s : ExtReal::infinity();
  };

  LimitEstimate sr = subregularity_constant(F, cfg);
  LimitEstimate uss = band_estimate_pairs(g, cfg, key, pair_inner_nonlocal(g, cfg));
  LimitEstimate ratio = band_estimate_pairs(g, cfg, key, pair_inner_ratio(g));
  LimitEstimate sos = band_estimate_pairs(g, cfg, key, pair_inner_local(g, cfg));
  LimitEstimate mix_local = band_estimate_pairs(
      g, cfg, key, pair_inner_max(pair_inner_local(g, cfg), pair_inner_ratio(g)));
  LimitEstimate approx = dual_ready ? F_approx_strict_subdiff_slope(F, cfg) : LimitEstimate{};
  LimitEstimate mix_sub =
      dual_ready ? band_estimate_pairs(g, cfg, key, pair_inner_max(approx_inner, pair_inner_ratio(g)))
                 : LimitEstimate{};
  LimitEstimate subd = dual_ready ? F_strict_subdiff_slope(F, cfg) : LimitEstimate{};

  double margin = std::max(10.0 * cfg.tol, 0.02 * std::max(1.0, gamma));
  auto cond = [&](const char* key_name, const char* what, const LimitEstimate& e) {
    return criteria::compare(key_name, what, e.reported, gamma, cfg.strict_slack, margin);
  };

  v.conditions.push_back(cond("a", "subregularity constant", sr));
  v.conditions.push_back(cond("b", "uniform strict slope of the mapping", uss));
  v.conditions.push_back(cond("c", "range-to-domain ratio liminf", ratio));
  v.conditions.push_back(cond("d", "strict slope of the mapping", sos));
  v.conditions.push_back(cond("e", "band max(rho-slope, ratio)", mix_local));
  if (dual_ready) {
    v.conditions.push_back(cond("f", "approximate strict subdifferential slope", approx));
    v.conditions.push_back(cond("g", "band max(approx subdiff rho-slope, ratio)", mix_sub));
    v.conditions.push_back(cond("h", "strict subdifferential slope of the mapping", subd));
  } else {
    v.conditions.push_back(criteria::skipped("f", "approximate strict subdifferential slope"));
    v.conditions.push_back(criteria::skipped("g", "band max(approx subdiff rho-slope, ratio)"));
    v.conditions.push_back(criteria::skipped("h", "strict subdifferential slope of the mapping"));
  }

  bool cc = F.complete && F.closed;
  criteria::Audits ac{&v.conditions, &v.audits};
  ac.implies("(i) (c)=>(e)", "c", "e", true, "");
  ac.implies("(ii) (d)=>(e)", "d", "e", true, "");
  ac.implies("(iii) (e)=>(b)", "e", "b", true, "");
  ac.implies("(iv) (f)=>(g)", "f", "g", dual_ready, "needs a norm and a normal cone");
  ac.implies("(v) (f)=>(h)", "f", "h", dual_ready, "needs a norm and a normal cone");
  ac.implies("(vi) (a)=>(b)", "a", "b", true, "");
  ac.implies("(vii) (b)=>(a)", "b", "a", cc, "needs completeness and a closed graph");
  ac.implies("(viii) (f)=>(d)", "f", "d", dual_ready && cc, "needs a complete normed setting");
  ac.implies("(viii) (g)=>(e)", "g", "e", dual_ready && cc, "needs a complete normed setting");
  ac.implies("(ix) (h)=>(b)", "h", "b",
             dual_ready && cc && (F.y_norm_smooth() || F.convex),
             "needs a smooth range norm or a convex graph");

  double floor = exact ? cfg.strict_slack : std::max(cfg.strict_slack, cfg.finest_radius());
  double qmargin = 2.0 * floor;
  auto qcond = [&](const char* key_name, const char* what, const LimitEstimate& e) {
    return criteria::compare(key_name, what, e.reported, 0.0, floor, qmargin);
  };
  v.qualitative.push_back(qcond("q-sr", "subregularity constant positive", sr));
  v.qualitative.push_back(qcond("q-a", "uniform strict slope positive", uss));
  v.qualitative.push_back(qcond("q-b", "ratio liminf positive", ratio));
  v.qualitative.push_back(qcond("q-c", "strict slope positive", sos));
  v.qualitative.push_back(qcond("q-d", "band max(rho-slope, ratio) positive", mix_local));
  if (dual_ready) {
    v.qualitative.push_back(qcond("q-e", "approximate strict subdiff slope positive", approx));
    v.qualitative.push_back(qcond("q-f", "band max(approx subdiff, ratio) positive", mix_sub));
  } else {
    v.qualitative.push_back(criteria::skipped("q-e", "approximate strict subdiff slope positive"));
    v.qualitative.push_back(criteria::skipped("q-f", "band max(approx subdiff, ratio) positive"));
  }
  if (dual_ready && (F.y_norm_smooth() || F.convex)) {
    v.qualitative.push_back(qcond("q-g", "strict subdiff slope positive", subd));
  } else {
    v.qualitative.push_back(criteria::skipped("q-g", "strict subdiff slope positive"));
  }

  criteria::Audits qc{&v.qualitative, &v.qualitative_audits};
  qc.implies("(i) subregular=>(a)", "q-sr", "q-a", true, "");
  qc.implies("(ii) (b)=>(d)", "q-b", "q-d", true, "");
  qc.implies("(iii) (c)=>(d)", "q-c", "q-d", true, "");
  qc.implies("(iv) (d)=>(a)", "q-d", "q-a", true, "");
  qc.implies("(v) (e)=>(c)", "q-e", "q-c", dual_ready, "needs a norm and a normal cone");
  qc.implies("(vi) (e)=>(f)", "q-e", "q-f", dual_ready, "needs a norm and a normal cone");
  qc.implies("(vii) (f)=>(d)", "q-f", "q-d", dual_ready, "needs a norm and a normal cone");
  qc.implies("(viii) (g)=>(c)", "q-g", "q-c", true, "");
  qc.implies("sufficiency (a)=>subregular", "q-a", "q-sr", cc,
             "needs completeness and a closed graph");
  return v;
}

CalmnessCheck calmness_duality_check(const SetValuedMapping& F, double tau) {
  CalmnessCheck out;
  out.tau = tau;
  if (!exact_relation(F) || !(tau > 0.0)) return out;
  out.evaluable = true;

  // Both inequalities are compared in the same scaled form
  // tau * d(x, F^{-1}(ybar)) <= d(y, ybar) + slack, the first against the
  // closest y in F(x), the second against every y in F(x), so the two
  // verdicts can only differ if infima and universal quantifiers disagree.
  bool sub_ok = true;
  bool calm_ok = true;
  for (const Point& x : F.X.all_points()) {
    double dpre = dist_to_preimage(F, x, 0.0, 0.0).value.value();
    ExtReal dimg = dist_to_image(F, x, 0.0, 0.0).value;
    if (dimg.finite() && tau * dpre > dimg.value() + kMemberSlack) sub_ok = false;
    for (const Point& y : F.Y.all_points()) {
      if (!F.contains(x, y)) continue;
      ++out.graph_pairs;
      if (tau * dpre > F.Y.dist(y, F.ybar) + kMemberSlack) calm_ok = false;
    }
  }
  out.subregularity_holds = sub_ok;
  out.calmness_holds = calm_ok;
  out.equivalent = sub_ok == calm_ok;
  return out;
}

}  // namespace slopekit
