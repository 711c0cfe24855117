#include "slopekit/slopes2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

namespace slopekit {

namespace {

constexpr double kMemberSlack = 1e-12;

bool exact_mode(const TwoVarFunction& g) { return g.X.is_finite() && g.Y.is_finite(); }

double require_finite_pair(const TwoVarFunction& g, const PairPt& at, const char* op) {
  ExtReal v = g.eval(at.x, at.y);
  if (!v.finite()) throw std::invalid_argument(std::string(op) + ": pair outside the domain of " + g.name);
  return v.value();
}

ExtReal pair_step_ratio(const TwoVarFunction& g, double fat, const PairPt& at, const PairPt& w,
                        double rho, RhoCombiner comb, bool plus) {
  ExtReal fw = g.eval(w.x, w.y);
  ExtReal top = plus ? diff_pos(ExtReal(fat), positive_part(fw)) : diff_pos(ExtReal(fat), fw);
  return extreal_div(top, ExtReal(g.pdist(at, w, rho, comb)), ExtReal(0.0));
}

std::vector<PairPt> pan_pairs(const TwoVarFunction& g) {
  return g.samples({g.xbar, g.ybar}, std::max(g.domain_radius, 1.0), 1.0);
}

ExtReal pair_sup(const TwoVarFunction& g, double fat, const PairPt& at,
                 const std::vector<PairPt>& cands, double rho, RhoCombiner comb, bool plus,
                 double max_pdist) {
  ExtReal best{0.0};
  for (const PairPt& w : cands) {
    if (w == at) continue;
    double d = g.pdist(at, w, rho, comb);
    if (d <= 0.0) continue;
    if (max_pdist > 0.0 && d > max_pdist + kMemberSlack) continue;
    best = ext_max(best, pair_step_ratio(g, fat, at, w, rho, comb, plus));
  }
  return best;
}

PointwiseValue exact_nonlocal2(const TwoVarFunction& g, const PairPt& at, double rho,
                               RhoCombiner comb) {
  double fat = require_finite_pair(g, at, "nonlocal_rho_slope");
  PointwiseValue out;
  out.value = pair_sup(g, fat, at, pan_pairs(g), rho, comb, true, 0.0);
  return out;
}

PointwiseValue euclid_nonlocal2(const TwoVarFunction& g, const PairPt& at, double rho,
                                RhoCombiner comb, double window, double delta,
                                double start_radius) {
  double fat = require_finite_pair(g, at, "nonlocal_rho_slope");
  double radius = std::max({start_radius, window, delta});
  double cap = 64.0 * std::max(g.domain_radius, 1.0);
  auto scan = [&](double outer) {
    std::vector<PairPt> cands = g.samples(at, outer, delta);
    auto fine = g.samples(at, window, delta);
    cands.insert(cands.end(), fine.begin(), fine.end());
    cands.push_back({g.xbar, g.ybar});
    return pair_sup(g, fat, at, cands, rho, comb, true, 0.0);
  };
  ExtReal best = scan(radius);
  while (fat > 0.0 && radius < cap && ExtReal(fat / radius) > best) {
    radius *= 2.0;
    best = scan(radius);
  }
  PointwiseValue out;
  out.value = best;
  out.search_radius = radius;
  out.truncated = fat > 0.0 && ExtReal(fat / radius) > best;
  return out;
}

// Window read for the local rho-slope: supremum over 0 < d_rho <= window.
// Exact mode reads the smallest realized punctured rho-ball instead.
ExtReal local2_window(const TwoVarFunction& g, const PairPt& at, double fat, double rho,
                      RhoCombiner comb, double window, double delta) {
  if (exact_mode(g)) {
    double rmin = std::numeric_limits<double>::infinity();
    auto pan = pan_pairs(g);
    for (const PairPt& w : pan) {
      if (w == at) continue;
      rmin = std::min(rmin, g.pdist(at, w, rho, comb));
    }
    if (!std::isfinite(rmin)) return ExtReal(0.0);
    return pair_sup(g, fat, at, pan, rho, comb, false, rmin);
  }
  std::vector<PairPt> cands = g.samples(at, window, delta);
  return pair_sup(g, fat, at, cands, rho, comb, false, window);
}

}  // namespace

// ---- band machinery ----------------------------------------------------------

LimitEstimate band_estimate_pairs(const TwoVarFunction& g, const TwoVarConfig& cfg,
                                  const PairKeyFn& key, const PairInnerFn& inner) {
  cfg.schedule.validate();
  if (exact_mode(g)) {
    auto pan = pan_pairs(g);
    std::vector<std::pair<PairPt, ExtReal>> keyed;
    double tmin = std::numeric_limits<double>::infinity();
    for (const PairPt& w : pan) {
      ExtReal k = key(w, g.eval(w.x, w.y));
      keyed.emplace_back(w, k);
      if (k.finite()) tmin = std::min(tmin, k.value());
    }
    auto bands = radii_with_snap(cfg.schedule, tmin);
    auto value_at = [&](const BandRadius& band) {
      ExtReal inf = ExtReal::infinity();
      for (const auto& [w, k] : keyed) {
        if (!k.finite()) continue;
        bool member = band.closed ? (k.value() <= band.rho + kMemberSlack) : (k.value() < band.rho);
        if (member) inf = ext_min(inf, inner(w, g.eval(w.x, w.y), band.rho, 0.0));
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
    for (const PairPt& w : g.samples({g.xbar, g.ybar}, band.rho, delta)) {
      ExtReal k = key(w, g.eval(w.x, w.y));
      if (!k.finite() || k.value() >= band.rho) continue;
      inf = ext_min(inf, inner(w, g.eval(w.x, w.y), band.rho, delta));
    }
    return inf;
  };
  return estimate_over_radii(value_at, bands, cfg.tol, LimitTrend::NondecreasingInf);
}

namespace {

// {d(x,xbar) < rho, 0 < f < rho}: the value band and the x-band shrink on
// the same schedule as the metric parameter.
PairKeyFn coupled_key(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal& fw) -> ExtReal {
    if (!fw.finite() || fw.value() <= 0.0) return ExtReal::infinity();
    return ExtReal(std::max(g.dx(w.x, g.xbar), fw.value()));
  };
}

// {d(x,xbar) < rho, f > 0}: y and the value of f unrestricted.
PairKeyFn x_only_key(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal& fw) -> ExtReal {
    if (!fw.finite() || fw.value() <= 0.0) return ExtReal::infinity();
    return ExtReal(g.dx(w.x, g.xbar));
  };
}

// {d(x,xbar) < rho, d(y,ybar) < rho, f > 0}.
PairKeyFn xy_key(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal& fw) -> ExtReal {
    if (!fw.finite() || fw.value() <= 0.0) return ExtReal::infinity();
    return ExtReal(std::max(g.dx(w.x, g.xbar), g.dy(w.y, g.ybar)));
  };
}

// {d(x,xbar) < rho, 0 < f/d(x,xbar) < rho}.
PairKeyFn ratio_coupled_key(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal& fw) -> ExtReal {
    if (!fw.finite() || fw.value() <= 0.0) return ExtReal::infinity();
    double d = g.dx(w.x, g.xbar);
    if (d <= 0.0) return ExtReal::infinity();
    return ExtReal(std::max(d, fw.value() / d));
  };
}

PairInnerFn inner_er2(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal& fw, double, double spacing) {
    double reach = g.dx(w.x, g.xbar) + spacing;
    DistResult dr = dist_to_sublevel_slice(g, w.x, reach, spacing);
    return extreal_div(positive_part(fw), dr.value, ExtReal(0.0));
  };
}

PairInnerFn inner_subdiff2(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal&, double rho, double) -> ExtReal {
    NormKind xk = g.X.is_euclidean() ? g.X.euclidean().norm() : NormKind::L2;
    NormKind yk = g.Y.is_euclidean() ? g.Y.euclidean().norm() : NormKind::L2;
    return min_xnorm_with_ynorm_bound(g.subdiff(w.x, w.y), xk, yk, rho, true);
  };
}

LimitEstimate no_oracle_estimate2() {
  LimitEstimate e;
  e.reported = ExtReal::infinity();
  e.add_note("subdiff-oracle-absent");
  return e;
}

}  // namespace

PairInnerFn pair_inner_ratio(const TwoVarFunction& g) {
  return [&g](const PairPt& w, const ExtReal& fw, double, double) {
    return extreal_div(positive_part(fw), ExtReal(g.dx(w.x, g.xbar)), ExtReal::infinity());
  };
}

PairInnerFn pair_inner_nonlocal(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  double start = cfg.nonlocal_start_radius > 0 ? cfg.nonlocal_start_radius : g.domain_radius;
  return [&g, comb = cfg.combiner, start](const PairPt& w, const ExtReal&, double rho,
                                          double spacing) -> ExtReal {
    if (exact_mode(g)) return exact_nonlocal2(g, w, rho, comb).value;
    return euclid_nonlocal2(g, w, rho, comb, rho, spacing, std::max(start, rho)).value;
  };
}

PairInnerFn pair_inner_local(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  return [&g, comb = cfg.combiner](const PairPt& w, const ExtReal& fw, double rho,
                                   double spacing) -> ExtReal {
    return local2_window(g, w, fw.value(), rho, comb, 1.5 * spacing, spacing);
  };
}

PairInnerFn pair_inner_max(PairInnerFn a, PairInnerFn b) {
  return [a = std::move(a), b = std::move(b)](const PairPt& w, const ExtReal& fw, double rho,
                                              double spacing) {
    return ext_max(a(w, fw, rho, spacing), b(w, fw, rho, spacing));
  };
}

// ---- pointwise ops ------------------------------------------------------------

PointwiseValue nonlocal_rho_slope(const TwoVarFunction& g, const PairPt& at, double rho,
                                  const TwoVarConfig& cfg) {
  if (rho <= 0.0) throw std::invalid_argument("nonlocal_rho_slope: rho must be positive");
  if (exact_mode(g)) return exact_nonlocal2(g, at, rho, cfg.combiner);
  double start = cfg.nonlocal_start_radius > 0 ? cfg.nonlocal_start_radius : g.domain_radius;
  return euclid_nonlocal2(g, at, rho, cfg.combiner, cfg.finest_radius(), cfg.finest_spacing(),
                          start);
}

PointwiseValue local_rho_slope(const TwoVarFunction& g, const PairPt& at, double rho,
                               const TwoVarConfig& cfg) {
  if (rho <= 0.0) throw std::invalid_argument("local_rho_slope: rho must be positive");
  double fat = require_finite_pair(g, at, "local_rho_slope");
  PointwiseValue out;
  if (exact_mode(g)) {
    out.value = local2_window(g, at, fat, rho, cfg.combiner, 0.0, 0.0);
    return out;
  }
  for (double r : cfg.schedule.radii()) {
    out.value = local2_window(g, at, fat, rho, cfg.combiner, r, r / cfg.band_resolution);
    out.search_radius = r;
  }
  return out;
}

std::optional<ExtReal> subdiff_rho_slope(const TwoVarFunction& g, const PairPt& at, double rho) {
  if (!g.has_subdiff()) return std::nullopt;
  NormKind xk = g.X.is_euclidean() ? g.X.euclidean().norm() : NormKind::L2;
  NormKind yk = g.Y.is_euclidean() ? g.Y.euclidean().norm() : NormKind::L2;
  return min_xnorm_with_ynorm_bound(g.subdiff(at.x, at.y), xk, yk, rho, true);
}

std::optional<ExtReal> subdiff_rho_slope_primed(const TwoVarFunction& g, const PairPt& at,
                                                double rho) {
  if (!g.has_subdiff()) return std::nullopt;
  NormKind xk = g.X.is_euclidean() ? g.X.euclidean().norm() : NormKind::L2;
  NormKind yk = g.Y.is_euclidean() ? g.Y.euclidean().norm() : NormKind::L2;
  return min_dual_rho_norm(g.subdiff(at.x, at.y), xk, yk, rho);
}

// ---- band ops ------------------------------------------------------------------

LimitEstimate er2_modulus(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  return band_estimate_pairs(g, cfg, coupled_key(g), inner_er2(g));
}

Er2Forms er2_equivalent_forms(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  Er2Forms forms;
  forms.x_only = band_estimate_pairs(g, cfg, x_only_key(g), inner_er2(g));
  forms.x_and_y = band_estimate_pairs(g, cfg, xy_key(g), inner_er2(g));
  forms.x_and_value = band_estimate_pairs(g, cfg, coupled_key(g), inner_er2(g));
  return forms;
}

LimitEstimate uniform_strict_slope2(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  return band_estimate_pairs(g, cfg, coupled_key(g), pair_inner_nonlocal(g, cfg));
}

LimitEstimate strict_outer_slope2(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  return band_estimate_pairs(g, cfg, coupled_key(g), pair_inner_local(g, cfg));
}

LimitEstimate strict_outer_subdiff_slope2(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  if (!g.has_subdiff()) return no_oracle_estimate2();
  return band_estimate_pairs(g, cfg, coupled_key(g), inner_subdiff2(g));
}

LimitEstimate ratio_liminf2(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  return band_estimate_pairs(g, cfg, coupled_key(g), pair_inner_ratio(g));
}

LimitEstimate local_slope_ratio_band2(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  return band_estimate_pairs(g, cfg, ratio_coupled_key(g), pair_inner_local(g, cfg));
}

LimitEstimate subdiff_slope_ratio_band2(const TwoVarFunction& g, const TwoVarConfig& cfg) {
  if (!g.has_subdiff()) return no_oracle_estimate2();
  return band_estimate_pairs(g, cfg, ratio_coupled_key(g), inner_subdiff2(g));
}

TwoVarSlopeReport make_two_var_report(const TwoVarFunction& g, const std::vector<PairPt>& probes,
                                      double probe_rho, const TwoVarConfig& cfg) {
  TwoVarSlopeReport rep;
  rep.fixture = g.name;
  rep.metric_variant = cfg.combiner;
  rep.subdiff_available = g.has_subdiff();
  for (const PairPt& at : probes) {
    TwoVarPointRow row;
    row.at = at;
    row.rho = probe_rho;
    row.fval = g.eval(at.x, at.y);
    if (row.fval.finite()) {
      row.local = local_rho_slope(g, at, probe_rho, cfg);
      row.nonlocal = nonlocal_rho_slope(g, at, probe_rho, cfg);
    }
    row.subdiff = subdiff_rho_slope(g, at, probe_rho);
    row.subdiff_primed = subdiff_rho_slope_primed(g, at, probe_rho);
    rep.points.push_back(std::move(row));
  }
  rep.er2 = er2_modulus(g, cfg);
  rep.uniform_strict = uniform_strict_slope2(g, cfg);
  rep.strict_outer = strict_outer_slope2(g, cfg);
  rep.subdiff_strict_outer = strict_outer_subdiff_slope2(g, cfg);
  return rep;
}

// ---- criteria -------------------------------------------------------------------

CriteriaVerdict criteria_verdict2(const TwoVarFunction& g, double gamma, const TwoVarConfig& cfg) {
  CriteriaVerdict v;
  v.gamma = gamma;
  bool normed = g.X.is_euclidean() && g.Y.is_euclidean();
  bool oracle = g.has_subdiff();
  bool exact = exact_mode(g);

  LimitEstimate er = er2_modulus(g, cfg);
  LimitEstimate uss = uniform_strict_slope2(g, cfg);
  LimitEstimate ratio = ratio_liminf2(g, cfg);
  LimitEstimate sos = strict_outer_slope2(g, cfg);
  LimitEstimate mix_local = band_estimate_pairs(
      g, cfg, coupled_key(g), pair_inner_max(pair_inner_local(g, cfg), pair_inner_ratio(g)));
  LimitEstimate sosub = (normed && oracle) ? strict_outer_subdiff_slope2(g, cfg) : LimitEstimate{};
  LimitEstimate mix_sub =
      (normed && oracle)
          ? band_estimate_pairs(g, cfg, coupled_key(g),
                                pair_inner_max(inner_subdiff2(g), pair_inner_ratio(g)))
          : LimitEstimate{};

  double margin = std::max(10.0 * cfg.tol, 0.02 * std::max(1.0, gamma));
  auto cond = [&](const char* key, const char* what, const LimitEstimate& e) {
    return criteria::compare(key, what, e.reported, gamma, cfg.strict_slack, margin);
  };

  v.conditions.push_back(cond("a", "pair error bound modulus", er));
  v.conditions.push_back(cond("b", "uniform strict slope", uss));
  v.conditions.push_back(cond("c", "ratio liminf", ratio));
  v.conditions.push_back(cond("d", "strict outer slope", sos));
  v.conditions.push_back(cond("e", "band max(rho-slope, ratio)", mix_local));
  if (normed && oracle) {
    v.conditions.push_back(cond("f", "strict outer subdifferential slope", sosub));
    v.conditions.push_back(cond("g", "band max(subdiff rho-slope, ratio)", mix_sub));
  } else {
    v.conditions.push_back(criteria::skipped("f", "strict outer subdifferential slope"));
    v.conditions.push_back(criteria::skipped("g", "band max(subdiff rho-slope, ratio)"));
  }

  criteria::Audits ac{&v.conditions, &v.audits};
  ac.implies("(c)=>(e)", "c", "e", true, "");
  ac.implies("(d)=>(e)", "d", "e", true, "");
  ac.implies("(e)=>(b)", "e", "b", true, "");
  ac.implies("(a)=>(b)", "a", "b", true, "");
  ac.implies("(d)=>(f)", "d", "f", normed, "needs a norm");
  ac.implies("(e)=>(g)", "e", "g", normed, "needs a norm");
  ac.implies("(b)=>(a)", "b", "a", g.complete && g.lsc, "needs completeness and lsc");
  ac.equiv("(d)<=>(f)", "d", "f", normed && g.complete && g.lsc, "needs a complete normed setting");
  ac.equiv("(e)<=>(g)", "e", "g", normed && g.complete && g.lsc, "needs a complete normed setting");

  double floor = exact ? cfg.strict_slack : std::max(cfg.strict_slack, cfg.finest_radius());
  double qmargin = 2.0 * floor;
  LimitEstimate qd_est = local_slope_ratio_band2(g, cfg);
  LimitEstimate qf_est = (normed && oracle) ? subdiff_slope_ratio_band2(g, cfg) : LimitEstimate{};
  auto qcond = [&](const char* key, const char* what, const LimitEstimate& e) {
    return criteria::compare(key, what, e.reported, 0.0, floor, qmargin);
  };
  v.qualitative.push_back(qcond("q-eb", "pair error bound modulus positive", er));
  v.qualitative.push_back(qcond("q-a", "uniform strict slope positive", uss));
  v.qualitative.push_back(qcond("q-b", "ratio liminf positive", ratio));
  v.qualitative.push_back(qcond("q-c", "strict outer slope positive", sos));
  v.qualitative.push_back(qcond("q-d", "rho-slope over the ratio band positive", qd_est));
  if (normed && oracle) {
    v.qualitative.push_back(qcond("q-e", "strict outer subdiff slope positive", sosub));
    v.qualitative.push_back(qcond("q-f", "subdiff rho-slope over the ratio band positive", qf_est));
  } else {
    v.qualitative.push_back(criteria::skipped("q-e", "strict outer subdiff slope positive"));
    v.qualitative.push_back(
        criteria::skipped("q-f", "subdiff rho-slope over the ratio band positive"));
  }

  bool complete_lsc = g.complete && g.lsc;
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
