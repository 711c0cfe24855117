#include "slopekit/catalog.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace slopekit {

namespace {

constexpr double kZeroSlack = 1e-12;

DualSet list1(double v) { return DualSet::list({DualVec::xonly(Point::of(v))}); }

DualSet hull1(double a, double b) {
  DualSet s;
  s.hull = true;
  s.vertices = {DualVec::xonly(Point::of(a)), DualVec::xonly(Point::of(b))};
  return s;
}

// Product of two interval factors, each given by its endpoint list. Two
// singletons stay a list; anything else becomes the hull of the corner
// vectors, which is the exact product for intervals.
DualSet corner_product2(const std::vector<double>& as, const std::vector<double>& bs) {
  if (as.size() == 1 && bs.size() == 1) {
    return DualSet::list({DualVec::xonly(Point::of(as[0], bs[0]))});
  }
  DualSet s;
  s.hull = true;
  for (double a : as)
    for (double b : bs) s.vertices.push_back(DualVec::xonly(Point::of(a, b)));
  return s;
}

// Same idea with the factors living on X* and Y* separately.
DualSet corner_product_xy(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() == 1 && ys.size() == 1) {
    return DualSet::list({DualVec::pair(Point::of(xs[0]), Point::of(ys[0]))});
  }
  DualSet s;
  s.hull = true;
  for (double a : xs)
    for (double b : ys) s.vertices.push_back(DualVec::pair(Point::of(a), Point::of(b)));
  return s;
}

std::vector<double> abs_slope_parts(double t) {
  if (t > kZeroSlack) return {1.0};
  if (t < -kZeroSlack) return {-1.0};
  return {-1.0, 1.0};
}

ProbeFunction make_abs() {
  EuclideanSpace line(1, NormKind::L2);
  ProbeFunction f;
  f.name = "abs";
  f.space = Space(line);
  f.xbar = Point::of(0.0);
  f.eval = [](const Point& p) { return ExtReal(std::abs(p[0])); };
  f.subdiff = [](const Point& p) -> DualSet {
    double t = p[0];
    if (t > kZeroSlack) return list1(1.0);
    if (t < -kZeroSlack) return list1(-1.0);
    return hull1(-1.0, 1.0);
  };
  f.subdiff_exact = true;
  f.convex = true;
  f.base_grid = grid_ball(line, f.xbar, 2.0, 0.25);
  return f;
}

ProbeFunction make_parabola() {
  EuclideanSpace line(1, NormKind::L2);
  ProbeFunction f;
  f.name = "parabola";
  f.space = Space(line);
  f.xbar = Point::of(0.0);
  f.eval = [](const Point& p) { return ExtReal(p[0] * p[0]); };
  f.subdiff = [](const Point& p) { return list1(2.0 * p[0]); };
  f.subdiff_exact = true;
  f.convex = true;
  f.base_grid = grid_ball(line, f.xbar, 2.0, 0.25);
  return f;
}

ProbeFunction make_relu() {
  EuclideanSpace line(1, NormKind::L2);
  ProbeFunction f;
  f.name = "relu";
  f.space = Space(line);
  f.xbar = Point::of(0.0);
  f.eval = [](const Point& p) { return ExtReal(std::max(p[0], 0.0)); };
  f.subdiff = [](const Point& p) -> DualSet {
    double t = p[0];
    if (t > kZeroSlack) return list1(1.0);
    if (t < -kZeroSlack) return list1(0.0);
    return hull1(0.0, 1.0);
  };
  f.subdiff_exact = true;
  f.convex = true;
  f.base_grid = grid_ball(line, f.xbar, 2.0, 0.25);
  return f;
}

// Taxicab distance in the plane to the right half-axis {(t, 0) : t >= 0}:
// f(a, b) = max(-a, 0) + |b|. The L1 norm keeps every descent direction
// axis-aligned, so lattice scans realize the unit slope exactly.
ProbeFunction make_halfline_dist() {
  EuclideanSpace plane(2, NormKind::L1);
  ProbeFunction f;
  f.name = "halfline-dist";
  f.space = Space(plane);
  f.xbar = Point::of(0.0, 0.0);
  f.eval = [](const Point& p) { return ExtReal(std::max(-p[0], 0.0) + std::abs(p[1])); };
  f.subdiff = [](const Point& p) -> DualSet {
    double a = p[0];
    double b = p[1];
    std::vector<double> da;  // endpoints of d/da max(-a, 0)
    if (a > kZeroSlack) {
      da = {0.0};
    } else if (a < -kZeroSlack) {
      da = {-1.0};
    } else {
      da = {-1.0, 0.0};
    }
    return corner_product2(da, abs_slope_parts(b));
  };
  f.subdiff_exact = true;
  f.convex = true;
  f.base_grid = grid_ball(plane, f.xbar, 2.0, 0.25);
  return f;
}

// Self-similar sawtooth: zero on the left half-line; on each dyadic block
// [h, 2h) it stays flat at h until 1.5h, then climbs with slope two. The
// ratio f(x)/x dips to 2/3 at every 1.5h, so the error bound constant is
// 2/3, while the flat stretches force the strict outer slope down to zero.
double sawtooth_value(double x) {
  if (x <= 0.0) return 0.0;
  double h = std::exp2(std::floor(std::log2(x)));
  return std::max(h, 2.0 * x - 2.0 * h);
}

ProbeFunction make_sawtooth() {
  EuclideanSpace line(1, NormKind::L2);
  ProbeFunction f;
  f.name = "nonconvex-lipschitz-counterexample";
  f.space = Space(line);
  f.xbar = Point::of(0.0);
  f.eval = [](const Point& p) { return ExtReal(sawtooth_value(p[0])); };
  f.subdiff = [](const Point& p) -> DualSet {
    double x = p[0];
    if (x < -kZeroSlack) return list1(0.0);
    // At the origin the graph sits above the line (2/3)x on the right and
    // above zero on the left, with equality along x = 1.5h, so the lower
    // supporting slopes form exactly [0, 2/3].
    if (x <= kZeroSlack) return hull1(0.0, 2.0 / 3.0);
    double h = std::exp2(std::floor(std::log2(x)));
    double r = x / h;  // in [1, 2)
    if (std::abs(r - 1.0) <= 1e-9) return DualSet::empty_set();  // concave kink
    if (std::abs(r - 1.5) <= 1e-9) return hull1(0.0, 2.0);       // convex kink
    return r < 1.5 ? list1(0.0) : list1(2.0);
  };
  f.subdiff_exact = true;
  f.convex = false;
  f.base_grid = grid_ball(line, f.xbar, 2.0, 0.25);
  return f;
}

TwoVarFunction make_weighted_abs() {
  EuclideanSpace line(1, NormKind::L2);
  TwoVarFunction g;
  g.name = "weighted-abs";
  g.X = Space(line);
  g.Y = Space(line);
  g.xbar = Point::of(0.0);
  g.ybar = Point::of(0.0);
  g.eval = [](const Point& x, const Point& y) {
    return ExtReal(std::abs(x[0]) + 2.0 * std::abs(y[0]));
  };
  g.subdiff = [](const Point& x, const Point& y) {
    std::vector<double> ys = abs_slope_parts(y[0]);
    for (double& v : ys) v *= 2.0;
    return corner_product_xy(abs_slope_parts(x[0]), ys);
  };
  g.subdiff_exact = true;
  g.convex = true;
  g.samples = [line](const PairPt& center, double radius, double spacing) {
    // Product scans follow the two-dimensional step cap per axis, otherwise
    // wide windows square a one-dimensional grid into millions of pairs.
    double step = std::max(spacing, 2.0 * radius / 96.0);
    std::vector<PairPt> out;
    auto xs = grid_ball(line, center.x, radius, step);
    auto ys = grid_ball(line, center.y, radius, step);
    out.reserve(xs.size() * ys.size());
    for (const Point& x : xs)
      for (const Point& y : ys) out.push_back({x, y});
    return out;
  };
  g.sublevel = [](const Point&, double, double) {
    return std::vector<Point>{Point::of(0.0)};
  };
  return g;
}

SetValuedMapping make_identity_mapping() {
  EuclideanSpace line(1, NormKind::L2);
  SetValuedMapping F;
  F.name = "identity-mapping";
  F.X = Space(line);
  F.Y = Space(line);
  F.xbar = Point::of(0.0);
  F.ybar = Point::of(0.0);
  F.contains = [](const Point& x, const Point& y) { return std::abs(y[0] - x[0]) <= kZeroSlack; };
  F.graph_samples = [line](const PairPt& center, double radius, double spacing) {
    std::vector<PairPt> out;
    for (const Point& t : grid_ball(line, center.x, radius, spacing)) out.push_back({t, t});
    return out;
  };
  F.image_samples = [](const Point& x, double radius, double) {
    std::vector<Point> out;
    if (std::abs(x[0]) <= radius + kZeroSlack) out.push_back(x);
    return out;
  };
  F.preimage_samples = [](const Point&, double, double) {
    return std::vector<Point>{Point::of(0.0)};
  };
  F.normal_cone = [](const Point&, const Point&) {
    return DualSet::cone(1, 1, {}, {DualVec::pair(Point::of(1.0), Point::of(-1.0))});
  };
  F.convex = true;
  return F;
}

SetValuedMapping make_halfline_mapping() {
  EuclideanSpace line(1, NormKind::L2);
  SetValuedMapping F;
  F.name = "halfline-mapping";
  F.X = Space(line);
  F.Y = Space(line);
  F.xbar = Point::of(0.0);
  F.ybar = Point::of(0.0);
  F.contains = [](const Point& x, const Point& y) { return y[0] >= x[0] - kZeroSlack; };
  F.graph_samples = [line](const PairPt& center, double radius, double spacing) {
    std::vector<PairPt> out;
    for (const Point& t : grid_ball(line, center.x, radius, spacing))
      out.push_back({t, t});  // the boundary carries the slope action
    // Interior pairs come from a product scan, so cap the per-axis step
    // count the way two-dimensional grids are capped.
    double step = std::max(spacing, 2.0 * radius / 96.0);
    auto ts = grid_ball(line, center.x, radius, step);
    auto ys = grid_ball(line, center.y, radius, step);
    for (const Point& t : ts)
      for (const Point& y : ys)
        if (y[0] >= t[0] - kZeroSlack) out.push_back({t, y});
    return out;
  };
  F.image_samples = [line](const Point& x, double radius, double spacing) {
    std::vector<Point> out;
    if (std::abs(x[0]) <= radius + kZeroSlack) out.push_back(x);
    for (const Point& y : grid_ball(line, Point::of(0.0), radius, spacing))
      if (y[0] >= x[0] - kZeroSlack) out.push_back(y);
    return out;
  };
  F.preimage_samples = [line](const Point& xcenter, double radius, double spacing) {
    std::vector<Point> out{Point::of(0.0)};
    for (const Point& t : grid_ball(line, xcenter, radius, spacing))
      if (t[0] <= kZeroSlack) out.push_back(t);
    return out;
  };
  F.normal_cone = [](const Point& x, const Point& y) {
    if (std::abs(y[0] - x[0]) <= 1e-9) {
      return DualSet::cone(1, 1, {DualVec::pair(Point::of(1.0), Point::of(-1.0))}, {});
    }
    return DualSet::cone(1, 1, {}, {});  // interior of the graph: only zero
  };
  F.convex = true;
  return F;
}

SetValuedMapping make_parabola_mapping() {
  EuclideanSpace line(1, NormKind::L2);
  SetValuedMapping F;
  F.name = "parabola-mapping";
  F.X = Space(line);
  F.Y = Space(line);
  F.xbar = Point::of(0.0);
  F.ybar = Point::of(0.0);
  F.contains = [](const Point& x, const Point& y) {
    return std::abs(y[0] - x[0] * x[0]) <= kZeroSlack;
  };
  F.graph_samples = [line](const PairPt& center, double radius, double spacing) {
    std::vector<PairPt> out;
    for (const Point& t : grid_ball(line, center.x, radius, spacing))
      out.push_back({t, Point::of(t[0] * t[0])});
    return out;
  };
  F.image_samples = [](const Point& x, double radius, double) {
    std::vector<Point> out;
    double v = x[0] * x[0];
    if (v <= radius + kZeroSlack) out.push_back(Point::of(v));
    return out;
  };
  F.preimage_samples = [](const Point&, double, double) {
    return std::vector<Point>{Point::of(0.0)};
  };
  F.normal_cone = [](const Point& x, const Point&) {
    return DualSet::cone(1, 1, {}, {DualVec::pair(Point::of(2.0 * x[0]), Point::of(-1.0))});
  };
  F.convex = false;
  return F;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  out.push_back({"abs",
                 "function",
                 "absolute value on the line; every slope and modulus equals one",
                 {{"er", 1.0},
                  {"uniform_strict", 1.0},
                  {"strict_outer", 1.0},
                  {"subdiff_strict_outer", 1.0},
                  {"ratio", 1.0}}});
  out.push_back({"parabola",
                 "function",
                 "square function; zero set {0} admits no linear error bound",
                 {{"er", 0.0},
                  {"uniform_strict", 0.0},
                  {"strict_outer", 0.0},
                  {"subdiff_strict_outer", 0.0},
                  {"ratio", 0.0}}});
  out.push_back({"relu",
                 "function",
                 "positive part max(x, 0); one-sided copy of abs",
                 {{"er", 1.0},
                  {"uniform_strict", 1.0},
                  {"strict_outer", 1.0},
                  {"subdiff_strict_outer", 1.0},
                  {"ratio", 1.0}}});
  out.push_back({"halfline-dist",
                 "function",
                 "taxicab distance in the plane to the right half-axis",
                 {{"er", 1.0},
                  {"uniform_strict", 1.0},
                  {"strict_outer", 1.0},
                  {"subdiff_strict_outer", 1.0},
                  {"ratio", 0.0}}});
  out.push_back({"nonconvex-lipschitz-counterexample",
                 "function",
                 "dyadic sawtooth: error bound constant 2/3, strict outer slope zero",
                 {{"er", 2.0 / 3.0},
                  {"uniform_strict", 2.0 / 3.0},
                  {"strict_outer", 0.0},
                  {"subdiff_strict_outer", 0.0},
                  {"ratio", 2.0 / 3.0}}});
  out.push_back({"weighted-abs",
                 "two_var_function",
                 "|x| + 2|y| on the product of two lines",
                 {{"er", 1.0},
                  {"uniform_strict", 1.0},
                  {"strict_outer", 1.0},
                  {"subdiff_strict_outer", 1.0},
                  {"ratio", 1.0}}});
  out.push_back({"identity-mapping",
                 "mapping",
                 "y = x; subregular with constant one",
                 {{"sr", 1.0},
                  {"uniform_strict", 1.0},
                  {"strict_outer", 1.0},
                  {"subdiff_strict_outer", 1.0},
                  {"ratio", 1.0},
                  {"gfrerer_excludes", 1.0}}});
  out.push_back({"halfline-mapping",
                 "mapping",
                 "F(x) = [x, inf); boundary drives every slope to one",
                 {{"sr", 1.0},
                  {"uniform_strict", 1.0},
                  {"strict_outer", 1.0},
                  {"subdiff_strict_outer", 1.0},
                  {"ratio", 1.0},
                  {"gfrerer_excludes", 1.0}}});
  out.push_back({"parabola-mapping",
                 "mapping",
                 "F(x) = {x^2}; not subregular at the origin",
                 {{"sr", 0.0},
                  {"uniform_strict", 0.0},
                  {"strict_outer", 0.0},
                  {"subdiff_strict_outer", 0.0},
                  {"ratio", 0.0},
                  {"gfrerer_excludes", 0.0}}});
  return out;
}

[[noreturn]] void unknown(const std::string& name, const char* kind) {
  throw std::invalid_argument("catalog: no " + std::string(kind) + " named '" + name + "'");
}

double u24(std::mt19937& rng) {
  return static_cast<double>(rng() & 0xFFFFFFu) / 16777216.0;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

ProbeFunction catalog_function(const std::string& name) {
  if (name == "abs") return make_abs();
  if (name == "parabola") return make_parabola();
  if (name == "relu") return make_relu();
  if (name == "halfline-dist") return make_halfline_dist();
  if (name == "nonconvex-lipschitz-counterexample") return make_sawtooth();
  unknown(name, "function");
}

TwoVarFunction catalog_two_var(const std::string& name) {
  if (name == "weighted-abs") return make_weighted_abs();
  unknown(name, "two-variable function");
}

SetValuedMapping catalog_mapping(const std::string& name) {
  if (name == "identity-mapping") return make_identity_mapping();
  if (name == "halfline-mapping") return make_halfline_mapping();
  if (name == "parabola-mapping") return make_parabola_mapping();
  unknown(name, "mapping");
}

std::vector<Point> catalog_probe_points(const std::string& name) {
  if (name == "abs" || name == "relu") {
    return {Point::of(0.0), Point::of(0.5), Point::of(-0.5), Point::of(1.0)};
  }
  if (name == "parabola") {
    return {Point::of(0.0), Point::of(0.5), Point::of(1.0), Point::of(-1.0)};
  }
  if (name == "halfline-dist") {
    // Axis-aligned probes: at these the lattice slope readings are exact.
    return {Point::of(0.0, 0.0), Point::of(1.0, 0.0),  Point::of(0.5, 0.5),
            Point::of(1.0, -0.5), Point::of(-0.5, 0.0), Point::of(0.0, 1.0)};
  }
  if (name == "nonconvex-lipschitz-counterexample") {
    // One probe per feature of the dyadic block [0.5, 1): flat interior,
    // both kinds of kink, rising stretch, plus the origin and a left point.
    return {Point::of(0.0),   Point::of(0.5), Point::of(0.625), Point::of(0.75),
            Point::of(0.875), Point::of(1.5), Point::of(-0.5)};
  }
  if (catalog_find(name) != nullptr) return {};
  unknown(name, "fixture");
}

std::vector<PairPt> catalog_probe_pairs(const std::string& name) {
  if (name == "weighted-abs") {
    return {{Point::of(0.0), Point::of(0.0)},
            {Point::of(0.5), Point::of(0.0)},
            {Point::of(0.5), Point::of(0.25)},
            {Point::of(0.0), Point::of(0.5)}};
  }
  if (name == "identity-mapping") {
    return {{Point::of(0.0), Point::of(0.0)},
            {Point::of(0.5), Point::of(0.5)},
            {Point::of(1.0), Point::of(1.0)}};
  }
  if (name == "halfline-mapping") {
    return {{Point::of(0.0), Point::of(0.0)},
            {Point::of(0.5), Point::of(0.5)},
            {Point::of(0.5), Point::of(1.0)}};
  }
  if (name == "parabola-mapping") {
    return {{Point::of(0.0), Point::of(0.0)},
            {Point::of(0.5), Point::of(0.25)},
            {Point::of(1.0), Point::of(1.0)}};
  }
  if (catalog_find(name) != nullptr) return {};
  unknown(name, "fixture");
}

std::vector<AnalyticEntry> catalog_expectations(const std::string& name) {
  // Values a 1-d discretization must reproduce; band entries only where the
  // grid value is grid-size independent. The sawtooth keeps pointwise rows
  // only: its band limits live below any fixed grid scale.
  if (name == "abs") {
    return {{"er", 1.0, 1e-9, {}},
            {"uniform_strict", 1.0, 1e-9, {}},
            {"strict_outer", 1.0, 1e-9, {}},
            {"ratio", 1.0, 1e-9, {}},
            {"local", 1.0, 1e-9, Point::of(1.0)},
            {"nonlocal", 1.0, 1e-9, Point::of(0.5)}};
  }
  if (name == "parabola") {
    return {{"er", 0.0, 0.02, {}},
            {"uniform_strict", 0.0, 0.02, {}},
            {"local", 2.0, 0.02, Point::of(1.0)}};
  }
  if (name == "relu") {
    return {{"er", 1.0, 1e-9, {}},
            {"uniform_strict", 1.0, 1e-9, {}},
            {"local", 0.0, 1e-9, Point::of(-0.5)},
            {"nonlocal", 1.0, 1e-9, Point::of(0.5)}};
  }
  if (name == "nonconvex-lipschitz-counterexample") {
    return {{"local", 0.0, 1e-9, Point::of(0.75)},
            {"local", 2.0, 1e-6, Point::of(0.9)},
            {"nonlocal", 2.0, 1e-6, Point::of(0.9)}};
  }
  if (catalog_find(name) != nullptr) return {};
  unknown(name, "fixture");
}

FiniteMetricSpace random_finite_space(unsigned seed, std::size_t points) {
  if (points == 0) throw std::invalid_argument("random_finite_space: need at least one point");
  if (points > FiniteMetricSpace::kMaxPoints)
    throw std::invalid_argument("random_finite_space: too many points");
  std::mt19937 rng(seed);
  std::size_t n = points;
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double w = 0.5 + 1.5 * u24(rng);
      d[i * n + j] = w;
      d[j * n + i] = w;
    }
  }
  // Shortest paths turn the random weights into a genuine metric.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

ProbeFunction random_finite_function(unsigned seed, std::size_t points, bool allow_negative) {
  FiniteMetricSpace fin = random_finite_space(seed, points);
  std::mt19937 rng(seed ^ 0x5bd1e995u);
  std::vector<double> vals(points, 0.0);
  for (std::size_t i = 0; i < points; ++i) {
    double u = u24(rng);
    if (u < 0.15) {
      vals[i] = 0.0;
    } else if (u < 0.25) {
      vals[i] = std::numeric_limits<double>::infinity();
    } else {
      double v = u24(rng);
      vals[i] = allow_negative ? -0.5 + 2.5 * v : 0.05 + 1.95 * v;
    }
  }
  vals[0] = 0.0;  // the base point solves the inequality system
  ProbeFunction f;
  f.name = "random-finite-" + std::to_string(seed);
  f.space = Space(std::move(fin));
  f.xbar = Point::finite(0);
  f.eval = [vals](const Point& p) {
    double v = vals.at(static_cast<std::size_t>(p.id));
    return std::isinf(v) ? ExtReal::infinity() : ExtReal(v);
  };
  f.convex = false;
  return f;
}

SetValuedMapping random_finite_mapping(unsigned seed, std::size_t xpoints, std::size_t ypoints) {
  FiniteMetricSpace X = random_finite_space(2u * seed + 1u, xpoints);
  FiniteMetricSpace Y = random_finite_space(2u * seed + 2u, ypoints);
  std::mt19937 rng(seed ^ 0xa5a5a5a5u);
  std::vector<char> graph(xpoints * ypoints, 0);
  for (std::size_t i = 0; i < graph.size(); ++i) graph[i] = u24(rng) < 0.35 ? 1 : 0;
  graph[0] = 1;  // (xbar, ybar) always belongs
  SetValuedMapping F;
  F.name = "random-mapping-" + std::to_string(seed);
  F.X = Space(std::move(X));
  F.Y = Space(std::move(Y));
  F.xbar = Point::finite(0);
  F.ybar = Point::finite(0);
  F.contains = [graph, ny = ypoints](const Point& x, const Point& y) {
    return graph.at(static_cast<std::size_t>(x.id) * ny + static_cast<std::size_t>(y.id)) != 0;
  };
  F.convex = false;
  return F;
}

}  // namespace slopekit
