#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "slopekit/ext_real.hpp"

namespace slopekit {

enum class NormKind { L2, L1, LInf };

const char* norm_name(NormKind k);

// A probe point. Finite-space points carry an index into the space's point
// list; Euclidean points carry up to three coordinates. Keeping both shapes
// in one small value type lets candidate lists, fixtures and reports stay
// agnostic about which kind of space they came from.
struct Point {
  int id = -1;                   // >= 0: finite-space point index
  int dim = 0;                   // coordinate count when id < 0
  std::array<double, 3> x{};

  static Point finite(int index) {
    Point p;
    p.id = index;
    return p;
  }
  static Point of(double a) {
    Point p;
    p.dim = 1;
    p.x = {a, 0.0, 0.0};
    return p;
  }
  static Point of(double a, double b) {
    Point p;
    p.dim = 2;
    p.x = {a, b, 0.0};
    return p;
  }
  static Point of(double a, double b, double c) {
    Point p;
    p.dim = 3;
    p.x = {a, b, c};
    return p;
  }

  bool is_index() const { return id >= 0; }
  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.id >= 0 || b.id >= 0) return a.id == b.id;
    if (a.dim != b.dim) return false;
    for (int i = 0; i < a.dim; ++i) {
      if (a.x[static_cast<std::size_t>(i)] != b.x[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  std::string str() const;
};

double norm_of(const double* v, int dim, NormKind k);
inline double norm_of(const Point& p, NormKind k) { return norm_of(p.x.data(), p.dim, k); }

// Norm on the dual space: L2 pairs with L2, L1 with LInf, LInf with L1.
NormKind dual_norm_kind(NormKind k);

// Explicit finite metric space: symmetric nonnegative matrix with zero
// diagonal and the triangle inequality, validated exhaustively (O(n^3)) at
// construction. Capped at 400 points: the toolkit's sweeps are quadratic
// and the cap keeps worst cases around the second scale.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> matrix);

  std::size_t size() const { return n_; }
  double dist(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  static constexpr std::size_t kMaxPoints = 400;

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<double> d_;
};

// R^dim with a chosen norm, dim in [1,3]. Norm axioms are spot-checked on a
// deterministic sample of triples at construction; the point is catching a
// future norm-table edit that breaks symmetry or the triangle inequality.
class EuclideanSpace {
 public:
  EuclideanSpace(int dim, NormKind norm);

  int dim() const { return dim_; }
  NormKind norm() const { return norm_; }
  double dist(const Point& a, const Point& b) const;

 private:
  int dim_;
  NormKind norm_;
};

// Handle to either space kind. Cheap to copy; distance dispatches on the
// point representation, which must match the space kind.
class Space {
 public:
  Space() = default;
  explicit Space(FiniteMetricSpace fin);
  explicit Space(EuclideanSpace euc);

  bool is_finite() const { return fin_ != nullptr; }
  bool is_euclidean() const { return euc_ != nullptr; }
  const FiniteMetricSpace& finite() const;
  const EuclideanSpace& euclidean() const;

  double dist(const Point& a, const Point& b) const;

  // Every point of a finite space, in index order. Euclidean spaces have no
  // intrinsic enumeration; candidate builders supply one.
  std::vector<Point> all_points() const;

 private:
  std::shared_ptr<const FiniteMetricSpace> fin_;
  std::shared_ptr<const EuclideanSpace> euc_;
};

}  // namespace slopekit
