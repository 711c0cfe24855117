#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "slopekit/catalog.hpp"
#include "slopekit/properties.hpp"
#include "slopekit/report.hpp"

using nlohmann::json;
using namespace slopekit;

namespace {

// Any spec-file violation. The message already carries the line or field
// diagnostic; main() turns it into exit code 2.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = line_col(text, byte);
    throw SpecError("parse error in '" + path + "' at line " + std::to_string(line) +
                    ", column " + std::to_string(col) + ": " + e.what());
  }
}

const json& need(const json& o, const std::string& field) {
  if (!o.is_object() || !o.contains(field)) throw SpecError("missing field '" + field + "'");
  return o.at(field);
}

double need_num(const json& o, const std::string& field) {
  const json& v = need(o, field);
  if (!v.is_number()) throw SpecError("field '" + field + "' must be a number");
  return v.get<double>();
}

std::string need_str(const json& o, const std::string& field) {
  const json& v = need(o, field);
  if (!v.is_string()) throw SpecError("field '" + field + "' must be a string");
  return v.get<std::string>();
}

// A value entry is a finite number or the string "inf".
ExtReal parse_value(const json& v, const std::string& field) {
  if (v.is_number()) return ExtReal(v.get<double>());
  if (v.is_string() && v.get<std::string>() == "inf") return ExtReal::infinity();
  throw SpecError("field '" + field + "' entries must be numbers or \"inf\"");
}

FiniteMetricSpace parse_finite_space(const json& o, const std::string& field) {
  const json& labels_j = need(o, "labels");
  const json& matrix_j = need(o, "matrix");
  if (!labels_j.is_array() || labels_j.empty())
    throw SpecError("field '" + field + ".labels' must be a non-empty array of strings");
  std::vector<std::string> labels;
  for (const json& l : labels_j) {
    if (!l.is_string()) throw SpecError("field '" + field + ".labels' must contain strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t n = labels.size();
  if (!matrix_j.is_array() || matrix_j.size() != n)
    throw SpecError("field '" + field + ".matrix' must be a " + std::to_string(n) + "x" +
                    std::to_string(n) + " array");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const json& row : matrix_j) {
    if (!row.is_array() || row.size() != n)
      throw SpecError("field '" + field + ".matrix' rows must have " + std::to_string(n) +
                      " numbers");
    for (const json& v : row) {
      if (!v.is_number()) throw SpecError("field '" + field + ".matrix' must contain numbers");
      flat.push_back(v.get<double>());
    }
  }
  try {
    return FiniteMetricSpace(labels, flat);
  } catch (const std::exception& e) {
    throw SpecError("field '" + field + ".matrix': " + e.what());
  }
}

Point parse_finite_base(const json& v, const Space& sp, const std::string& field) {
  const FiniteMetricSpace& fs = sp.finite();
  if (v.is_string()) {
    const std::string label = v.get<std::string>();
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (fs.label(i) == label) return Point::finite(i);
    throw SpecError("field '" + field + "': no point labeled '" + label + "'");
  }
  if (v.is_number_integer()) {
    long idx = v.get<long>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= fs.size())
      throw SpecError("field '" + field + "': index " + std::to_string(idx) + " out of range");
    return Point::finite(static_cast<std::size_t>(idx));
  }
  throw SpecError("field '" + field + "' must be a label or an index");
}

ProbeFunction build_table_function(const json& spec) {
  if (spec.contains("space")) {
    Space sp{parse_finite_space(need(spec, "space"), "space")};
    const json& values_j = need(spec, "values");
    const std::size_t n = sp.finite().size();
    if (!values_j.is_array() || values_j.size() != n)
      throw SpecError("field 'values' must list one value per point (" + std::to_string(n) + ")");
    std::vector<ExtReal> vals;
    for (const json& v : values_j) vals.push_back(parse_value(v, "values"));
    ProbeFunction f;
    f.name = "spec-function";
    f.space = sp;
    f.xbar = parse_finite_base(need(spec, "base"), sp, "base");
    f.eval = [vals](const Point& p) { return vals.at(static_cast<std::size_t>(p.id)); };
    f.convex = spec.value("convex", false);
    return f;
  }
  if (spec.contains("breakpoints")) {
    const json& xs_j = need(spec, "breakpoints");
    const json& fs_j = need(spec, "values");
    if (!xs_j.is_array() || xs_j.size() < 2)
      throw SpecError("field 'breakpoints' must be an array of at least two numbers");
    if (!fs_j.is_array() || fs_j.size() != xs_j.size())
      throw SpecError("field 'values' must match 'breakpoints' in length");
    std::vector<double> xs;
    std::vector<double> fs;
    for (const json& v : xs_j) {
      if (!v.is_number()) throw SpecError("field 'breakpoints' must contain numbers");
      xs.push_back(v.get<double>());
    }
    for (const json& v : fs_j) {
      if (!v.is_number()) throw SpecError("field 'values' must contain numbers");
      fs.push_back(v.get<double>());
    }
    for (std::size_t i = 1; i < xs.size(); ++i)
      if (xs[i] <= xs[i - 1]) throw SpecError("field 'breakpoints' must be strictly increasing");
    NormKind nk = NormKind::L2;
    if (spec.contains("norm_kind")) {
      const std::string s = need_str(spec, "norm_kind");
      if (s == "l2")
        nk = NormKind::L2;
      else if (s == "l1")
        nk = NormKind::L1;
      else if (s == "linf")
        nk = NormKind::LInf;
      else
        throw SpecError("field 'norm_kind' must be l2, l1 or linf");
    }
    EuclideanSpace line(1, nk);
    ProbeFunction f;
    f.name = "spec-function";
    f.space = Space{line};
    f.xbar = Point::of(need_num(spec, "base"));
    f.eval = [xs, fs](const Point& p) -> ExtReal {
      double x = p[0];
      if (x < xs.front() || x > xs.back()) return ExtReal::infinity();
      std::size_t hi = 1;
      while (hi + 1 < xs.size() && xs[hi] < x) ++hi;
      double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
      return ExtReal(fs[hi - 1] + t * (fs[hi] - fs[hi - 1]));
    };
    f.convex = spec.value("convex", false);
    double extent = std::max(std::abs(xs.front()), std::abs(xs.back()));
    f.domain_radius = std::max(extent, 1.0);
    f.base_grid = grid_ball(line, Point::of(0.0), f.domain_radius, f.domain_radius / 16.0);
    return f;
  }
  throw SpecError("function spec needs 'fixture', a finite 'space' table or 'breakpoints'");
}

TwoVarFunction build_table_two_var(const json& spec) {
  Space X{parse_finite_space(need(spec, "x_space"), "x_space")};
  Space Y{parse_finite_space(need(spec, "y_space"), "y_space")};
  const std::size_t nx = X.finite().size();
  const std::size_t ny = Y.finite().size();
  const json& values_j = need(spec, "values");
  if (!values_j.is_array() || values_j.size() != nx)
    throw SpecError("field 'values' must have one row per x point (" + std::to_string(nx) + ")");
  std::vector<std::vector<ExtReal>> vals;
  for (const json& row : values_j) {
    if (!row.is_array() || row.size() != ny)
      throw SpecError("field 'values' rows must have " + std::to_string(ny) + " entries");
    std::vector<ExtReal> r;
    for (const json& v : row) r.push_back(parse_value(v, "values"));
    vals.push_back(std::move(r));
  }
  const json& base = need(spec, "base");
  if (!base.is_array() || base.size() != 2)
    throw SpecError("field 'base' must be a [x, y] pair");
  TwoVarFunction g;
  g.name = "spec-two-var";
  g.X = X;
  g.Y = Y;
  g.xbar = parse_finite_base(base.at(0), X, "base[0]");
  g.ybar = parse_finite_base(base.at(1), Y, "base[1]");
  g.eval = [vals](const Point& x, const Point& y) {
    return vals.at(static_cast<std::size_t>(x.id)).at(static_cast<std::size_t>(y.id));
  };
  g.convex = spec.value("convex", false);
  return g;
}

SetValuedMapping build_table_mapping(const json& spec) {
  Space X{parse_finite_space(need(spec, "x_space"), "x_space")};
  Space Y{parse_finite_space(need(spec, "y_space"), "y_space")};
  const std::size_t nx = X.finite().size();
  const std::size_t ny = Y.finite().size();
  const json& graph_j = need(spec, "graph");
  if (!graph_j.is_array() || graph_j.size() != nx)
    throw SpecError("field 'graph' must have one row per x point (" + std::to_string(nx) + ")");
  std::vector<std::vector<int>> graph;
  for (const json& row : graph_j) {
    if (!row.is_array() || row.size() != ny)
      throw SpecError("field 'graph' rows must have " + std::to_string(ny) + " entries");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
        throw SpecError("field 'graph' entries must be 0 or 1");
      r.push_back(v.get<int>());
    }
    graph.push_back(std::move(r));
  }
  const json& base = need(spec, "base");
  if (!base.is_array() || base.size() != 2)
    throw SpecError("field 'base' must be a [x, y] pair");
  SetValuedMapping F;
  F.name = "spec-mapping";
  F.X = X;
  F.Y = Y;
  F.xbar = parse_finite_base(base.at(0), X, "base[0]");
  F.ybar = parse_finite_base(base.at(1), Y, "base[1]");
  if (graph[static_cast<std::size_t>(F.xbar.id)][static_cast<std::size_t>(F.ybar.id)] != 1)
    throw SpecError("field 'base': the base pair must lie on the graph");
  F.contains = [graph](const Point& x, const Point& y) {
    return graph.at(static_cast<std::size_t>(x.id)).at(static_cast<std::size_t>(y.id)) == 1;
  };
  F.convex = spec.value("convex", false);
  return F;
}

std::vector<double> parse_coords(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw SpecError("--at: '" + tok + "' is not a number");
    }
  }
  if (out.empty()) throw SpecError("--at: empty point");
  return out;
}

Point euclid_point(const std::vector<double>& c, std::size_t offset, int dim) {
  if (dim == 1) return Point::of(c.at(offset));
  if (dim == 2) return Point::of(c.at(offset), c.at(offset + 1));
  return Point::of(c.at(offset), c.at(offset + 1), c.at(offset + 2));
}

Point parse_at_point(const std::string& text, const Space& sp) {
  if (sp.is_euclidean()) {
    std::vector<double> c = parse_coords(text);
    int dim = sp.euclidean().dim();
    if (c.size() != static_cast<std::size_t>(dim))
      throw SpecError("--at: expected " + std::to_string(dim) + " coordinates");
    return euclid_point(c, 0, dim);
  }
  return parse_finite_base(json(text), sp, "--at");
}

PairPt parse_at_pair(const std::string& text, const Space& X, const Space& Y) {
  if (X.is_euclidean() && Y.is_euclidean()) {
    std::vector<double> c = parse_coords(text);
    std::size_t dx = static_cast<std::size_t>(X.euclidean().dim());
    std::size_t dy = static_cast<std::size_t>(Y.euclidean().dim());
    if (c.size() != dx + dy)
      throw SpecError("--at: expected " + std::to_string(dx + dy) + " coordinates (x then y)");
    return {euclid_point(c, 0, static_cast<int>(dx)), euclid_point(c, dx, static_cast<int>(dy))};
  }
  if (X.is_finite() && Y.is_finite()) {
    std::stringstream ss(text);
    std::string a;
    std::string b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || ss.rdbuf()->in_avail() > 0)
      throw SpecError("--at: expected 'x,y' for a pair of finite-space points");
    return {parse_finite_base(json(a), X, "--at"), parse_finite_base(json(b), Y, "--at")};
  }
  throw SpecError("--at: base override needs both spaces finite or both Euclidean");
}

struct AnalyzeOptions {
  std::string spec;
  std::string at;
  std::string schedule;
  std::string format = "table";
  std::string out_dir;
  double tol = 1e-6;
  double gamma = 0.5;
  unsigned seed = 0;
  bool expect = false;
  bool tol_set = false;
  bool gamma_set = false;
};

RadiusSchedule parse_schedule(const std::string& text) {
  std::stringstream ss(text);
  std::string tok;
  std::vector<double> parts;
  while (std::getline(ss, tok, ',')) {
    try {
      parts.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw SpecError("--schedule: '" + tok + "' is not a number");
    }
  }
  if (parts.size() != 3) throw SpecError("--schedule: expected rho0,gamma,steps");
  RadiusSchedule s;
  s.rho0 = parts[0];
  s.gamma = parts[1];
  s.steps = static_cast<int>(parts[2]);
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw SpecError(std::string("--schedule: ") + e.what());
  }
  return s;
}

RadiusSchedule schedule_from_spec(const json& spec) {
  RadiusSchedule s;
  if (!spec.contains("schedule")) return s;
  const json& o = spec.at("schedule");
  if (!o.is_object()) throw SpecError("field 'schedule' must be an object");
  s.rho0 = o.value("rho0", s.rho0);
  s.gamma = o.value("gamma", s.gamma);
  if (o.contains("steps")) {
    if (!o.at("steps").is_number_integer())
      throw SpecError("field 'schedule.steps' must be an integer");
    s.steps = o.at("steps").get<int>();
  }
  try {
    s.validate();
  } catch (const std::exception& e) {
    throw SpecError(std::string("field 'schedule': ") + e.what());
  }
  return s;
}

// Expectation targets, from the catalog ground truths or the spec file's
// "expect" object. The lattice reads band limits at the finest scheduled
// radius, so the default tolerance absorbs one grid step.
constexpr double kExpectTol = 0.1;

ExtReal band_actual(const Analysis& a, const std::string& key, bool& known) {
  known = true;
  if (a.fn) {
    if (key == "er") return a.fn->er.reported;
    if (key == "uniform_strict") return a.fn->uniform_strict.reported;
    if (key == "strict_outer") return a.fn->strict_outer.reported;
    if (key == "subdiff_strict_outer") return a.fn->subdiff_strict_outer.reported;
    if (key == "ratio") return a.fn->ratio.reported;
  } else if (a.pair) {
    if (key == "er") return a.pair->er2.reported;
    if (key == "uniform_strict") return a.pair->uniform_strict.reported;
    if (key == "strict_outer") return a.pair->strict_outer.reported;
    if (key == "subdiff_strict_outer") return a.pair->subdiff_strict_outer.reported;
    if (key == "ratio") return a.pair->uniform_strict.reported;  // no separate band
  } else if (a.map) {
    if (key == "sr") return a.map->sr.reported;
    if (key == "uniform_strict") return a.map->uniform_strict.reported;
    if (key == "strict_outer") return a.map->strict_outer.reported;
    if (key == "subdiff_strict_outer") return a.map->subdiff_strict_outer.reported;
    if (key == "approx_subdiff_strict_outer") return a.map->approx_subdiff_strict_outer.reported;
    if (key == "ratio") return a.map->ratio.reported;
    if (key == "gfrerer_excludes")
      return ExtReal(a.map->gfrerer.excludes_origin ? 1.0 : 0.0);
  }
  known = false;
  return ExtReal(0.0);
}

void add_expectation(Analysis& a, const std::string& key, double expected, double tol) {
  bool known = false;
  ExtReal actual = band_actual(a, key, known);
  if (!known) throw SpecError("field 'expect': unknown quantity '" + key + "'");
  ExpectationCheck ch;
  ch.key = key;
  ch.expected = expected;
  ch.actual = actual;
  ch.tolerance = tol;
  ch.ok = actual.finite() && std::abs(actual.raw() - expected) <= tol;
  a.expectations.push_back(ch);
}

void collect_expectations(Analysis& a, const CatalogEntry* entry, const json* spec) {
  a.expectations_checked = true;
  if (entry) {
    for (const auto& [key, value] : entry->ground_truth) add_expectation(a, key, value, kExpectTol);
    return;
  }
  if (!spec || !spec->contains("expect"))
    throw SpecError("--expect needs a catalog fixture or an 'expect' object in the spec file");
  const json& o = spec->at("expect");
  if (!o.is_object()) throw SpecError("field 'expect' must be an object of quantity -> value");
  for (const auto& [key, v] : o.items()) {
    if (v.is_number()) {
      add_expectation(a, key, v.get<double>(), kExpectTol);
    } else if (v.is_array() && v.size() == 2 && v.at(0).is_number() && v.at(1).is_number()) {
      add_expectation(a, key, v.at(0).get<double>(), v.at(1).get<double>());
    } else {
      throw SpecError("field 'expect." + key + "' must be a number or [value, tolerance]");
    }
  }
}

void write_outputs(const std::string& dir, const std::string& base, const std::string& json_text,
                   const std::string& table_text) {
  std::filesystem::create_directories(dir);
  std::ofstream jf(dir + "/" + base + ".json");
  jf << json_text;
  std::ofstream tf(dir + "/" + base + ".txt");
  tf << table_text;
}

int run_analyze(const AnalyzeOptions& opt) {
  ReportFormat fmt = parse_report_format(opt.format);

  const CatalogEntry* entry = nullptr;
  json spec;
  bool has_spec_file = false;
  std::string kind;
  if (opt.spec.rfind("catalog:", 0) == 0) {
    const std::string name = opt.spec.substr(8);
    entry = catalog_find(name);
    if (!entry) throw SpecError("unknown catalog fixture '" + name + "'");
    kind = entry->kind;
  } else {
    spec = load_spec_file(opt.spec);
    has_spec_file = true;
    kind = need_str(spec, "kind");
    if (kind != "function" && kind != "two_var_function" && kind != "mapping")
      throw SpecError("field 'kind' must be function, two_var_function or mapping");
    if (spec.contains("fixture")) {
      const std::string name = need_str(spec, "fixture");
      entry = catalog_find(name);
      if (!entry) throw SpecError("field 'fixture': unknown catalog fixture '" + name + "'");
      if (entry->kind != kind)
        throw SpecError("field 'fixture': '" + name + "' is a " + entry->kind + ", not a " + kind);
    }
  }

  Analysis a;
  a.source = opt.spec;
  a.kind = kind;
  a.seed = opt.seed;
  a.schedule = has_spec_file ? schedule_from_spec(spec) : RadiusSchedule{};
  if (!opt.schedule.empty()) a.schedule = parse_schedule(opt.schedule);
  a.tol = has_spec_file && spec.contains("tol") ? need_num(spec, "tol") : 1e-6;
  if (opt.tol_set) a.tol = opt.tol;
  a.gamma = has_spec_file && spec.contains("gamma") ? need_num(spec, "gamma") : 0.5;
  if (opt.gamma_set) a.gamma = opt.gamma;

  if (kind == "function") {
    ProbeFunction f = entry ? catalog_function(entry->name) : build_table_function(spec);
    std::vector<Point> probes;
    if (entry) {
      probes = catalog_probe_points(entry->name);
    } else if (f.space.is_finite()) {
      probes = f.space.all_points();
    } else {
      probes.push_back(f.xbar);
    }
    if (!opt.at.empty()) {
      f.xbar = parse_at_point(opt.at, f.space);
      bool present = false;
      for (const Point& p : probes) present = present || p == f.xbar;
      if (!present) probes.insert(probes.begin(), f.xbar);
    }
    SlopeConfig cfg;
    cfg.schedule = a.schedule;
    cfg.tol = a.tol;
    a.fn = make_slope_report(f, probes, cfg);
    a.verdict = criteria_verdict(f, a.gamma, cfg);
  } else if (kind == "two_var_function") {
    TwoVarFunction g = entry ? catalog_two_var(entry->name) : build_table_two_var(spec);
    std::vector<PairPt> probes;
    if (entry) {
      probes = catalog_probe_pairs(entry->name);
    } else {
      for (const Point& x : g.X.all_points())
        for (const Point& y : g.Y.all_points())
          if (probes.size() < 64) probes.push_back({x, y});
    }
    if (!opt.at.empty()) {
      PairPt base = parse_at_pair(opt.at, g.X, g.Y);
      g.xbar = base.x;
      g.ybar = base.y;
      bool present = false;
      for (const PairPt& p : probes) present = present || p == base;
      if (!present) probes.insert(probes.begin(), base);
    }
    TwoVarConfig cfg;
    cfg.schedule = a.schedule;
    cfg.tol = a.tol;
    a.pair = make_two_var_report(g, probes, 0.5, cfg);
    a.verdict = criteria_verdict2(g, a.gamma, cfg);
  } else {
    SetValuedMapping F = entry ? catalog_mapping(entry->name) : build_table_mapping(spec);
    std::vector<PairPt> probes;
    if (entry) {
      probes = catalog_probe_pairs(entry->name);
    } else {
      for (const Point& x : F.X.all_points())
        for (const Point& y : F.Y.all_points())
          if (F.contains(x, y) && probes.size() < 64) probes.push_back({x, y});
    }
    if (!opt.at.empty()) {
      PairPt base = parse_at_pair(opt.at, F.X, F.Y);
      F.xbar = base.x;
      F.ybar = base.y;
      if (!F.contains(F.xbar, F.ybar))
        throw SpecError("--at: the base pair must lie on the graph");
      bool present = false;
      for (const PairPt& p : probes) present = present || p == base;
      if (!present) probes.insert(probes.begin(), base);
    }
    TwoVarConfig cfg;
    cfg.schedule = a.schedule;
    cfg.tol = a.tol;
    a.map = make_mapping_report(F, probes, 0.5, cfg);
    a.verdict = subregularity_verdict(F, a.gamma, cfg);
  }

  if (opt.expect) collect_expectations(a, entry, has_spec_file ? &spec : nullptr);

  std::cout << render_analysis(a, fmt);
  if (!opt.out_dir.empty()) {
    write_outputs(opt.out_dir, "report", render_analysis(a, ReportFormat::Json),
                  render_analysis(a, ReportFormat::Table));
  }
  return a.expectations_checked && !a.expectations_ok() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slope, error-bound and subregularity analysis"};
  app.require_subcommand(1);

  AnalyzeOptions aopt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "analyze a fixture (catalog:<name>) or a JSON spec file");
  analyze->add_option("spec", aopt.spec, "catalog:<name> or path to a spec file")->required();
  analyze->add_option("--at", aopt.at,
                      "base point override (coordinates x[,y...], or label/index on finite "
                      "spaces; pairs list x then y)");
  analyze->add_option("--schedule", aopt.schedule, "radius ladder rho0,gamma,steps");
  auto* tol_opt = analyze->add_option("--tol", aopt.tol, "saturation tolerance");
  auto* gamma_opt = analyze->add_option("--gamma", aopt.gamma, "criteria threshold gamma");
  analyze->add_option("--format", aopt.format, "output format: json, table or csv");
  analyze->add_option("--seed", aopt.seed, "seed recorded in the report");
  analyze->add_flag("--expect", aopt.expect,
                    "check analytic expectations; exit 1 on mismatch");
  analyze->add_option("--out", aopt.out_dir, "directory for report.json and report.txt");

  std::string vfilter;
  unsigned vseed = 12345;
  std::string vformat = "table";
  std::string vout;
  CLI::App* verify = app.add_subcommand("verify", "run the cross-module property suite");
  verify->add_option("--filter", vfilter, "run only groups whose name contains this substring");
  verify->add_option("--seed", vseed, "seed for the randomized instances");
  verify->add_option("--format", vformat, "output format: json, table or csv");
  verify->add_option("--out", vout, "directory for verify.json and verify.txt");

  std::string cformat = "table";
  CLI::App* catalog = app.add_subcommand("catalog", "list fixtures and their analytic values");
  catalog->add_option("--format", cformat, "output format: json, table or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (analyze->parsed()) {
      aopt.tol_set = tol_opt->count() > 0;
      aopt.gamma_set = gamma_opt->count() > 0;
      return run_analyze(aopt);
    }
    if (verify->parsed()) {
      ReportFormat fmt = parse_report_format(vformat);
      PropertySuiteResult r = run_property_suite(vseed, vfilter);
      std::cout << render_properties(r, fmt);
      if (!vout.empty()) {
        write_outputs(vout, "verify", render_properties(r, ReportFormat::Json),
                      render_properties(r, ReportFormat::Table));
      }
      return r.ok() ? 0 : 3;
    }
    if (catalog->parsed()) {
      ReportFormat fmt = parse_report_format(cformat);
      std::cout << render_catalog_listing(fmt);
      return 0;
    }
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
