#include "slopekit/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "slopekit/catalog.hpp"

namespace slopekit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_d(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ordered_json ext_json(const ExtReal& v) {
  if (v.is_inf()) return ordered_json("inf");
  return ordered_json(v.raw());
}

ordered_json opt_json(const std::optional<ExtReal>& v) {
  if (!v) return ordered_json(nullptr);
  return ext_json(*v);
}

ordered_json limit_json(const LimitEstimate& e) {
  ordered_json seq = ordered_json::array();
  for (const auto& [rho, val] : e.per_radius) {
    seq.push_back({{"radius", rho}, {"value", ext_json(val)}});
  }
  return {{"reported", ext_json(e.reported)},
          {"monotone", e.monotone},
          {"saturated", e.saturated},
          {"notes", e.notes},
          {"sequence", seq}};
}

ordered_json pointwise_json(const PointwiseValue& v) {
  return {{"value", ext_json(v.value)},
          {"isolated", v.isolated},
          {"truncated", v.truncated},
          {"search_radius", v.search_radius}};
}

ordered_json condition_json(const Condition& c) {
  return {{"key", c.key},
          {"what", c.what},
          {"verdict", tri_name(c.verdict)},
          {"value", ext_json(c.value)},
          {"marginal", c.marginal}};
}

ordered_json audit_json(const ImplicationAudit& a) {
  return {{"name", a.name},
          {"applicable", a.applicable},
          {"passed", a.passed},
          {"detail", a.detail}};
}

ordered_json verdict_json(const CriteriaVerdict& v) {
  ordered_json conditions = ordered_json::array();
  for (const Condition& c : v.conditions) conditions.push_back(condition_json(c));
  ordered_json audits = ordered_json::array();
  for (const ImplicationAudit& a : v.audits) audits.push_back(audit_json(a));
  ordered_json qual = ordered_json::array();
  for (const Condition& c : v.qualitative) qual.push_back(condition_json(c));
  ordered_json qaudits = ordered_json::array();
  for (const ImplicationAudit& a : v.qualitative_audits) qaudits.push_back(audit_json(a));
  return {{"gamma", v.gamma},
          {"conditions", conditions},
          {"audits", audits},
          {"qualitative", qual},
          {"qualitative_audits", qaudits},
          {"audits_ok", v.audits_ok()}};
}

ordered_json gfrerer_json(const GfrererResult& g) {
  ordered_json rungs = ordered_json::array();
  for (std::size_t i = 0; i < g.rung_scale.size(); ++i) {
    ordered_json row = {{"scale", g.rung_scale[i]}};
    row["min_score"] = i < g.rung_min.size() ? ordered_json(g.rung_min[i]) : ordered_json(nullptr);
    rungs.push_back(row);
  }
  ordered_json wits = ordered_json::array();
  for (const GfrererWitness& w : g.witnesses) {
    wits.push_back({{"t", w.t},
                    {"u", w.u.str()},
                    {"x", w.at.x.str()},
                    {"y", w.at.y.str()},
                    {"v", w.v.str()},
                    {"ystar", w.ystar.str()},
                    {"xstar", w.xstar.str()},
                    {"score", w.score}});
  }
  return {{"evaluable", g.evaluable},
          {"excludes_origin", g.excludes_origin},
          {"threshold", g.threshold},
          {"exhausted", g.exhausted},
          {"rungs", rungs},
          {"witnesses", wits}};
}

ordered_json function_report_json(const SlopeReport& r) {
  ordered_json bands = {{"er", limit_json(r.er)},
                        {"uniform_strict", limit_json(r.uniform_strict)},
                        {"strict_outer", limit_json(r.strict_outer)},
                        {"subdiff_strict_outer", limit_json(r.subdiff_strict_outer)},
                        {"ratio", limit_json(r.ratio)}};
  ordered_json points = ordered_json::array();
  for (const PointRow& p : r.points) {
    points.push_back({{"at", p.at.str()},
                      {"value", ext_json(p.fval)},
                      {"local", pointwise_json(p.local)},
                      {"nonlocal", pointwise_json(p.nonlocal)},
                      {"restricted_sublevel", pointwise_json(p.restricted_sublevel)},
                      {"restricted_levelset", pointwise_json(p.restricted_levelset)},
                      {"subdiff", opt_json(p.subdiff)}});
  }
  return {{"fixture", r.fixture},
          {"subdiff_available", r.subdiff_available},
          {"bands", bands},
          {"points", points}};
}

ordered_json pair_report_json(const TwoVarSlopeReport& r) {
  ordered_json bands = {{"er", limit_json(r.er2)},
                        {"uniform_strict", limit_json(r.uniform_strict)},
                        {"strict_outer", limit_json(r.strict_outer)},
                        {"subdiff_strict_outer", limit_json(r.subdiff_strict_outer)}};
  ordered_json points = ordered_json::array();
  for (const TwoVarPointRow& p : r.points) {
    points.push_back({{"x", p.at.x.str()},
                      {"y", p.at.y.str()},
                      {"rho", p.rho},
                      {"value", ext_json(p.fval)},
                      {"local", pointwise_json(p.local)},
                      {"nonlocal", pointwise_json(p.nonlocal)},
                      {"subdiff", opt_json(p.subdiff)},
                      {"subdiff_primed", opt_json(p.subdiff_primed)}});
  }
  return {{"fixture", r.fixture},
          {"metric_variant", r.metric_variant == RhoCombiner::Max ? "max" : "sum"},
          {"subdiff_available", r.subdiff_available},
          {"bands", bands},
          {"points", points}};
}

ordered_json mapping_report_json(const MappingReport& r) {
  ordered_json bands = {{"sr", limit_json(r.sr)},
                        {"uniform_strict", limit_json(r.uniform_strict)},
                        {"strict_outer", limit_json(r.strict_outer)},
                        {"ratio", limit_json(r.ratio)},
                        {"subdiff_strict_outer", limit_json(r.subdiff_strict_outer)},
                        {"approx_subdiff_strict_outer", limit_json(r.approx_subdiff_strict_outer)}};
  ordered_json points = ordered_json::array();
  for (const MappingPointRow& p : r.points) {
    points.push_back({{"x", p.at.x.str()},
                      {"y", p.at.y.str()},
                      {"rho", p.rho},
                      {"in_graph", p.in_graph},
                      {"range_distance", ext_json(p.range_distance)},
                      {"local", pointwise_json(p.local)},
                      {"nonlocal", pointwise_json(p.nonlocal)},
                      {"subdiff", opt_json(p.subdiff)},
                      {"approx_subdiff", opt_json(p.approx_subdiff)}});
  }
  return {{"fixture", r.fixture},
          {"subdiff_available", r.subdiff_available},
          {"bands", bands},
          {"points", points},
          {"gfrerer", gfrerer_json(r.gfrerer)}};
}

ordered_json expectation_json(const ExpectationCheck& e) {
  return {{"key", e.key},
          {"expected", e.expected},
          {"actual", ext_json(e.actual)},
          {"tolerance", e.tolerance},
          {"ok", e.ok}};
}

// ---- table helpers -------------------------------------------------------

struct Table {
  std::ostringstream os;

  void line() { os << "\n"; }
  void line(const std::string& s) { os << s << "\n"; }
  void kv(const std::string& k, const std::string& v) { os << "  " << k << " = " << v << "\n"; }
  std::string str() const { return os.str(); }
};

std::string seq_str(const LimitEstimate& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.per_radius.size(); ++i) {
    if (i) os << "  ";
    os << fmt_d(e.per_radius[i].first) << ":" << e.per_radius[i].second.str();
  }
  return os.str();
}

std::string flags_str(const LimitEstimate& e) {
  std::string out;
  out += e.monotone ? "monotone" : "non-monotone";
  out += e.saturated ? ", saturated" : ", unsaturated";
  for (const std::string& n : e.notes) out += ", " + n;
  return out;
}

void band_table(Table& t, const std::string& label, const LimitEstimate& e) {
  t.line("  " + label + " = " + e.reported.str() + "  [" + flags_str(e) + "]");
  t.line("    sequence: " + seq_str(e));
}

std::string pw_str(const PointwiseValue& v) {
  std::string out = v.value.str();
  if (v.isolated) out += " (isolated)";
  if (v.truncated) out += " (truncated)";
  return out;
}

std::string opt_str(const std::optional<ExtReal>& v) { return v ? v->str() : "-"; }

void verdict_table(Table& t, const CriteriaVerdict& v) {
  t.line("criteria at gamma = " + fmt_d(v.gamma));
  for (const Condition& c : v.conditions) {
    std::string row = "  (" + c.key + ") " + c.what + ": " + tri_name(c.verdict) +
                      "  value = " + c.value.str();
    if (c.marginal) row += "  (marginal)";
    t.line(row);
  }
  t.line("implication audits");
  for (const ImplicationAudit& a : v.audits) {
    std::string row = "  " + a.name + ": ";
    row += a.applicable ? (a.passed ? "holds" : "VIOLATED") : "not applicable";
    if (!a.detail.empty()) row += "  (" + a.detail + ")";
    t.line(row);
  }
  t.line("qualitative chain (positivity)");
  for (const Condition& c : v.qualitative) {
    std::string row = "  (" + c.key + ") " + c.what + ": " + tri_name(c.verdict) +
                      "  value = " + c.value.str();
    if (c.marginal) row += "  (marginal)";
    t.line(row);
  }
  for (const ImplicationAudit& a : v.qualitative_audits) {
    std::string row = "  " + a.name + ": ";
    row += a.applicable ? (a.passed ? "holds" : "VIOLATED") : "not applicable";
    if (!a.detail.empty()) row += "  (" + a.detail + ")";
    t.line(row);
  }
  t.line(std::string("audit summary: ") + (v.audits_ok() ? "all implications hold" : "VIOLATIONS"));
}

void gfrerer_table(Table& t, const GfrererResult& g) {
  t.line("origin exclusion test");
  if (!g.evaluable) {
    t.line("  not evaluable (needs a normal-cone oracle on normed spaces)");
    return;
  }
  t.kv("excludes_origin", g.excludes_origin ? "yes" : "no");
  t.kv("threshold", fmt_d(g.threshold));
  t.kv("exhausted", g.exhausted ? "yes" : "no");
  std::ostringstream rungs;
  for (std::size_t i = 0; i < g.rung_scale.size(); ++i) {
    if (i) rungs << "  ";
    rungs << fmt_d(g.rung_scale[i]) << ":" << (i < g.rung_min.size() ? fmt_d(g.rung_min[i]) : "-");
  }
  t.kv("rung minima", rungs.str());
  for (const GfrererWitness& w : g.witnesses) {
    t.line("  witness t=" + fmt_d(w.t) + " u=" + w.u.str() + " at (" + w.at.x.str() + ", " +
           w.at.y.str() + ") v=" + w.v.str() + " ystar=" + w.ystar.str() + " xstar=" +
           w.xstar.str() + " score=" + fmt_d(w.score));
  }
}

// ---- csv helpers ---------------------------------------------------------

std::string csv_escape(const std::string& s) {
  bool needs = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

struct Csv {
  std::ostringstream os;

  Csv() { os << "section,item,attribute,value\n"; }
  void row(const std::string& a, const std::string& b, const std::string& c,
           const std::string& d) {
    os << csv_escape(a) << "," << csv_escape(b) << "," << csv_escape(c) << "," << csv_escape(d)
       << "\n";
  }
  std::string str() const { return os.str(); }
};

void band_csv(Csv& c, const std::string& item, const LimitEstimate& e) {
  c.row("band", item, "reported", e.reported.str());
  c.row("band", item, "monotone", e.monotone ? "1" : "0");
  c.row("band", item, "saturated", e.saturated ? "1" : "0");
  for (const auto& [rho, val] : e.per_radius) c.row("band", item, fmt_d(rho), val.str());
  for (const std::string& n : e.notes) c.row("band", item, "note", n);
}

void verdict_csv(Csv& c, const CriteriaVerdict& v) {
  c.row("criteria", "gamma", "value", fmt_d(v.gamma));
  for (const Condition& cond : v.conditions) {
    c.row("criteria", cond.key, "verdict", tri_name(cond.verdict));
    c.row("criteria", cond.key, "value", cond.value.str());
  }
  for (const ImplicationAudit& a : v.audits) {
    c.row("audit", a.name, "status",
          a.applicable ? (a.passed ? "holds" : "violated") : "not-applicable");
  }
  for (const Condition& cond : v.qualitative) {
    c.row("qualitative", cond.key, "verdict", tri_name(cond.verdict));
    c.row("qualitative", cond.key, "value", cond.value.str());
  }
  for (const ImplicationAudit& a : v.qualitative_audits) {
    c.row("qualitative-audit", a.name, "status",
          a.applicable ? (a.passed ? "holds" : "violated") : "not-applicable");
  }
  c.row("criteria", "audits", "ok", v.audits_ok() ? "1" : "0");
}

std::string schedule_str(const RadiusSchedule& s) {
  return "rho0=" + fmt_d(s.rho0) + " gamma=" + fmt_d(s.gamma) + " steps=" + std::to_string(s.steps);
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, table or csv)");
}

bool Analysis::expectations_ok() const {
  for (const ExpectationCheck& e : expectations)
    if (!e.ok) return false;
  return true;
}

MappingReport make_mapping_report(const SetValuedMapping& F, const std::vector<PairPt>& probes,
                                  double probe_rho, const TwoVarConfig& cfg) {
  MappingReport rep;
  rep.fixture = F.name;
  rep.subdiff_available = F.normed() && F.has_normal_cone();
  for (const PairPt& w : probes) {
    MappingPointRow row;
    row.at = w;
    row.rho = probe_rho;
    row.in_graph = F.contains(w.x, w.y);
    row.range_distance = ExtReal(F.Y.dist(w.y, F.ybar));
    row.local = F_local_rho_slope(F, w.x, w.y, probe_rho, cfg);
    row.nonlocal = F_nonlocal_rho_slope(F, w.x, w.y, probe_rho, cfg);
    if (rep.subdiff_available) {
      row.subdiff = F_subdiff_rho_slope(F, w.x, w.y, probe_rho);
      row.approx_subdiff = F_approx_subdiff_rho_slope(F, w.x, w.y, probe_rho, {probe_rho});
    }
    rep.points.push_back(row);
  }
  rep.sr = subregularity_constant(F, cfg);
  rep.uniform_strict = F_uniform_strict_slope(F, cfg);
  rep.strict_outer = F_strict_slope(F, cfg);
  rep.ratio = F_ratio_liminf(F, cfg);
  rep.subdiff_strict_outer = F_strict_subdiff_slope(F, cfg);
  rep.approx_subdiff_strict_outer = F_approx_strict_subdiff_slope(F, cfg);
  rep.gfrerer = gfrerer_limit_test(F, cfg.schedule, 8);
  return rep;
}

std::string render_analysis(const Analysis& a, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    ordered_json doc = {{"source", a.source},
                        {"kind", a.kind},
                        {"schedule",
                         {{"rho0", a.schedule.rho0},
                          {"gamma", a.schedule.gamma},
                          {"steps", a.schedule.steps}}},
                        {"tol", a.tol},
                        {"criteria_gamma", a.gamma},
                        {"seed", a.seed}};
    if (a.fn) doc["report"] = function_report_json(*a.fn);
    if (a.pair) doc["report"] = pair_report_json(*a.pair);
    if (a.map) doc["report"] = mapping_report_json(*a.map);
    doc["criteria"] = verdict_json(a.verdict);
    if (a.expectations_checked) {
      ordered_json checks = ordered_json::array();
      for (const ExpectationCheck& e : a.expectations) checks.push_back(expectation_json(e));
      doc["expectations"] = {{"ok", a.expectations_ok()}, {"checks", checks}};
    }
    return doc.dump(2) + "\n";
  }

  if (fmt == ReportFormat::Table) {
    Table t;
    t.line("analysis " + a.source + "  kind=" + a.kind);
    t.line("schedule " + schedule_str(a.schedule) + "  tol=" + fmt_d(a.tol) +
           "  criteria-gamma=" + fmt_d(a.gamma) + "  seed=" + std::to_string(a.seed));
    t.line();
    t.line("band quantities");
    if (a.fn) {
      band_table(t, "error bound modulus (er)", a.fn->er);
      band_table(t, "uniform strict slope", a.fn->uniform_strict);
      band_table(t, "strict outer slope", a.fn->strict_outer);
      band_table(t, "strict outer subdiff slope", a.fn->subdiff_strict_outer);
      band_table(t, "value/distance ratio liminf", a.fn->ratio);
    } else if (a.pair) {
      band_table(t, "error bound modulus (er)", a.pair->er2);
      band_table(t, "uniform strict slope", a.pair->uniform_strict);
      band_table(t, "strict outer slope", a.pair->strict_outer);
      band_table(t, "strict outer subdiff slope", a.pair->subdiff_strict_outer);
    } else if (a.map) {
      band_table(t, "subregularity constant (sr)", a.map->sr);
      band_table(t, "uniform strict slope", a.map->uniform_strict);
      band_table(t, "strict outer slope", a.map->strict_outer);
      band_table(t, "value/distance ratio liminf", a.map->ratio);
      band_table(t, "strict subdiff slope", a.map->subdiff_strict_outer);
      band_table(t, "approximate strict subdiff slope", a.map->approx_subdiff_strict_outer);
    }
    t.line();
    t.line("pointwise rows");
    if (a.fn) {
      for (const PointRow& p : a.fn->points) {
        t.line("  at " + p.at.str() + "  f = " + p.fval.str());
        t.line("    local=" + pw_str(p.local) + "  nonlocal=" + pw_str(p.nonlocal) +
               "  sublevel-restricted=" + pw_str(p.restricted_sublevel) +
               "  levelset-restricted=" + pw_str(p.restricted_levelset) +
               "  subdiff=" + opt_str(p.subdiff));
      }
    } else if (a.pair) {
      for (const TwoVarPointRow& p : a.pair->points) {
        t.line("  at (" + p.at.x.str() + ", " + p.at.y.str() + ")  rho=" + fmt_d(p.rho) +
               "  f = " + p.fval.str());
        t.line("    local=" + pw_str(p.local) + "  nonlocal=" + pw_str(p.nonlocal) +
               "  subdiff=" + opt_str(p.subdiff) + "  subdiff'=" + opt_str(p.subdiff_primed));
      }
    } else if (a.map) {
      for (const MappingPointRow& p : a.map->points) {
        t.line("  at (" + p.at.x.str() + ", " + p.at.y.str() + ")  rho=" + fmt_d(p.rho) +
               (p.in_graph ? "  on graph" : "  off graph") +
               "  d(y,ybar) = " + p.range_distance.str());
        t.line("    local=" + pw_str(p.local) + "  nonlocal=" + pw_str(p.nonlocal) +
               "  subdiff=" + opt_str(p.subdiff) + "  approx-subdiff=" +
               opt_str(p.approx_subdiff));
      }
    }
    t.line();
    verdict_table(t, a.verdict);
    if (a.map) {
      t.line();
      gfrerer_table(t, a.map->gfrerer);
    }
    if (a.expectations_checked) {
      t.line();
      t.line("expected values");
      for (const ExpectationCheck& e : a.expectations) {
        t.line("  " + e.key + ": expected=" + fmt_d(e.expected) + " actual=" + e.actual.str() +
               " tol=" + fmt_d(e.tolerance) + (e.ok ? "  ok" : "  MISMATCH"));
      }
      t.line(std::string("expectation summary: ") + (a.expectations_ok() ? "all ok" : "MISMATCH"));
    }
    return t.str();
  }

  Csv c;
  c.row("analysis", "source", "value", a.source);
  c.row("analysis", "kind", "value", a.kind);
  c.row("analysis", "schedule", "rho0", fmt_d(a.schedule.rho0));
  c.row("analysis", "schedule", "gamma", fmt_d(a.schedule.gamma));
  c.row("analysis", "schedule", "steps", std::to_string(a.schedule.steps));
  c.row("analysis", "tol", "value", fmt_d(a.tol));
  c.row("analysis", "criteria_gamma", "value", fmt_d(a.gamma));
  c.row("analysis", "seed", "value", std::to_string(a.seed));
  if (a.fn) {
    band_csv(c, "er", a.fn->er);
    band_csv(c, "uniform_strict", a.fn->uniform_strict);
    band_csv(c, "strict_outer", a.fn->strict_outer);
    band_csv(c, "subdiff_strict_outer", a.fn->subdiff_strict_outer);
    band_csv(c, "ratio", a.fn->ratio);
    for (const PointRow& p : a.fn->points) {
      const std::string at = p.at.str();
      c.row("point", at, "value", p.fval.str());
      c.row("point", at, "local", p.local.value.str());
      c.row("point", at, "nonlocal", p.nonlocal.value.str());
      c.row("point", at, "restricted_sublevel", p.restricted_sublevel.value.str());
      c.row("point", at, "restricted_levelset", p.restricted_levelset.value.str());
      c.row("point", at, "subdiff", opt_str(p.subdiff));
    }
  } else if (a.pair) {
    band_csv(c, "er", a.pair->er2);
    band_csv(c, "uniform_strict", a.pair->uniform_strict);
    band_csv(c, "strict_outer", a.pair->strict_outer);
    band_csv(c, "subdiff_strict_outer", a.pair->subdiff_strict_outer);
    for (const TwoVarPointRow& p : a.pair->points) {
      const std::string at = "(" + p.at.x.str() + ", " + p.at.y.str() + ")";
      c.row("point", at, "value", p.fval.str());
      c.row("point", at, "rho", fmt_d(p.rho));
      c.row("point", at, "local", p.local.value.str());
      c.row("point", at, "nonlocal", p.nonlocal.value.str());
      c.row("point", at, "subdiff", opt_str(p.subdiff));
      c.row("point", at, "subdiff_primed", opt_str(p.subdiff_primed));
    }
  } else if (a.map) {
    band_csv(c, "sr", a.map->sr);
    band_csv(c, "uniform_strict", a.map->uniform_strict);
    band_csv(c, "strict_outer", a.map->strict_outer);
    band_csv(c, "ratio", a.map->ratio);
    band_csv(c, "subdiff_strict_outer", a.map->subdiff_strict_outer);
    band_csv(c, "approx_subdiff_strict_outer", a.map->approx_subdiff_strict_outer);
    for (const MappingPointRow& p : a.map->points) {
      const std::string at = "(" + p.at.x.str() + ", " + p.at.y.str() + ")";
      c.row("point", at, "in_graph", p.in_graph ? "1" : "0");
      c.row("point", at, "range_distance", p.range_distance.str());
      c.row("point", at, "rho", fmt_d(p.rho));
      c.row("point", at, "local", p.local.value.str());
      c.row("point", at, "nonlocal", p.nonlocal.value.str());
      c.row("point", at, "subdiff", opt_str(p.subdiff));
      c.row("point", at, "approx_subdiff", opt_str(p.approx_subdiff));
    }
    const GfrererResult& g = a.map->gfrerer;
    c.row("gfrerer", "test", "evaluable", g.evaluable ? "1" : "0");
    c.row("gfrerer", "test", "excludes_origin", g.excludes_origin ? "1" : "0");
    c.row("gfrerer", "test", "threshold", fmt_d(g.threshold));
    for (std::size_t i = 0; i < g.rung_scale.size(); ++i) {
      c.row("gfrerer", "rung", fmt_d(g.rung_scale[i]),
            i < g.rung_min.size() ? fmt_d(g.rung_min[i]) : "-");
    }
  }
  verdict_csv(c, a.verdict);
  if (a.expectations_checked) {
    for (const ExpectationCheck& e : a.expectations) {
      c.row("expectation", e.key, "expected", fmt_d(e.expected));
      c.row("expectation", e.key, "actual", e.actual.str());
      c.row("expectation", e.key, "ok", e.ok ? "1" : "0");
    }
  }
  return c.str();
}

std::string render_catalog_listing(ReportFormat fmt) {
  const std::vector<CatalogEntry>& entries = catalog_entries();
  if (fmt == ReportFormat::Json) {
    ordered_json doc = ordered_json::array();
    for (const CatalogEntry& e : entries) {
      ordered_json truths = ordered_json::object();
      for (const auto& [k, v] : e.ground_truth) truths[k] = v;
      // The spec object feeds straight back into `analyze`.
      doc.push_back({{"name", e.name},
                     {"kind", e.kind},
                     {"summary", e.summary},
                     {"ground_truth", truths},
                     {"spec", {{"kind", e.kind}, {"fixture", e.name}}}});
    }
    return doc.dump(2) + "\n";
  }
  if (fmt == ReportFormat::Table) {
    Table t;
    t.line("catalog fixtures");
    for (const CatalogEntry& e : entries) {
      t.line("  " + e.name + "  [" + e.kind + "]");
      t.line("    " + e.summary);
      std::ostringstream truths;
      for (std::size_t i = 0; i < e.ground_truth.size(); ++i) {
        if (i) truths << "  ";
        truths << e.ground_truth[i].first << "=" << fmt_d(e.ground_truth[i].second);
      }
      t.line("    analytic: " + truths.str());
    }
    return t.str();
  }
  Csv c;
  for (const CatalogEntry& e : entries) {
    c.row("catalog", e.name, "kind", e.kind);
    c.row("catalog", e.name, "summary", e.summary);
    for (const auto& [k, v] : e.ground_truth) c.row("catalog", e.name, k, fmt_d(v));
  }
  return c.str();
}

std::string render_properties(const PropertySuiteResult& r, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    ordered_json checks = ordered_json::array();
    for (const PropertyCheck& c : r.checks) {
      checks.push_back({{"group", c.group},
                        {"name", c.name},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    }
    ordered_json doc = {{"seed", r.seed},          {"filter", r.filter},
                        {"groups_run", r.groups_run}, {"passed", r.passed},
                        {"failed", r.failed},      {"ok", r.ok()},
                        {"checks", checks}};
    return doc.dump(2) + "\n";
  }
  if (fmt == ReportFormat::Table) {
    Table t;
    for (const PropertyCheck& c : r.checks) {
      std::string row = std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.group + " :: " + c.name;
      if (!c.detail.empty()) row += "  -- " + c.detail;
      t.line(row);
    }
    std::ostringstream groups;
    for (std::size_t i = 0; i < r.groups_run.size(); ++i) {
      if (i) groups << ",";
      groups << r.groups_run[i];
    }
    t.line("groups: " + groups.str());
    t.line("summary: checks=" + std::to_string(r.checks.size()) +
           " passed=" + std::to_string(r.passed) + " failed=" + std::to_string(r.failed) +
           " seed=" + std::to_string(r.seed) +
           (r.filter.empty() ? "" : " filter=" + r.filter));
    return t.str();
  }
  Csv c;
  for (const PropertyCheck& pc : r.checks) {
    c.row("check", pc.group, pc.name, pc.passed ? "pass" : "fail");
    if (!pc.detail.empty()) c.row("detail", pc.group, pc.name, pc.detail);
  }
  c.row("summary", "passed", "count", std::to_string(r.passed));
  c.row("summary", "failed", "count", std::to_string(r.failed));
  c.row("summary", "seed", "value", std::to_string(r.seed));
  return c.str();
}

}  // namespace slopekit
