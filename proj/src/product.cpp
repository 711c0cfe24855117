#include "slopekit/product.hpp"

#include <cmath>
#include <stdexcept>

namespace slopekit {

const char* combiner_name(RhoCombiner c) { return c == RhoCombiner::Max ? "max" : "sum"; }

double rho_dist(double dx, double dy, double rho, RhoCombiner c) {
  if (dx < 0.0 || dy < 0.0 || !(rho > 0.0)) {
    throw std::invalid_argument("rho_dist: distances must be >= 0 and rho > 0");
  }
  return c == RhoCombiner::Max ? std::max(dx, rho * dy) : dx + rho * dy;
}

double dual_rho_norm(const Point& xstar, NormKind x_primal, const Point& ystar,
                     NormKind y_primal, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("dual_rho_norm: rho must be positive");
  double nx = norm_of(xstar, dual_norm_kind(x_primal));
  double ny = norm_of(ystar, dual_norm_kind(y_primal));
  return nx + ny / rho;
}

namespace {

Point from_array(const double* v, int dim) {
  Point p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) p.x[static_cast<std::size_t>(i)] = v[i];
  return p;
}

}  // namespace

std::vector<Point> duality_map(const Point& y, NormKind y_primal) {
  if (y.is_index()) throw std::invalid_argument("duality_map: needs coordinates");
  int dim = y.dim;
  double ny = norm_of(y, y_primal);
  if (ny == 0.0) throw std::invalid_argument("duality_map: y must be nonzero");

  std::vector<Point> out;
  switch (y_primal) {
    case NormKind::L2: {
      double v[3] = {0, 0, 0};
      for (int i = 0; i < dim; ++i) v[i] = y[i] / ny;
      out.push_back(from_array(v, dim));
      break;
    }
    case NormKind::L1: {
      // Dual vectors live in the LInf ball: sign(y_i) where y_i != 0, and the
      // face spans +-1 on the zero coordinates; enumerate its vertices.
      std::vector<int> free_coords;
      double base[3] = {0, 0, 0};
      for (int i = 0; i < dim; ++i) {
        if (y[i] > 0.0) {
          base[i] = 1.0;
        } else if (y[i] < 0.0) {
          base[i] = -1.0;
        } else {
          free_coords.push_back(i);
        }
      }
      std::size_t combos = static_cast<std::size_t>(1) << free_coords.size();
      for (std::size_t m = 0; m < combos; ++m) {
        double v[3] = {base[0], base[1], base[2]};
        for (std::size_t b = 0; b < free_coords.size(); ++b) {
          v[free_coords[b]] = (m >> b) & 1 ? 1.0 : -1.0;
        }
        out.push_back(from_array(v, dim));
      }
      break;
    }
    case NormKind::LInf: {
      // Dual vectors live in the L1 ball: the face spanned by sign(y_i) e_i
      // over the coordinates attaining the max.
      for (int i = 0; i < dim; ++i) {
        if (std::fabs(y[i]) == ny) {
          double v[3] = {0, 0, 0};
          v[i] = y[i] > 0.0 ? 1.0 : -1.0;
          out.push_back(from_array(v, dim));
        }
      }
      break;
    }
  }
  return out;
}

std::vector<Point> unit_sphere_points(int dim, NormKind k) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("unit_sphere_points: dim must be 1..3");
  std::vector<Point> out;
  if (dim == 1) {
    out.push_back(Point::of(1.0));
    out.push_back(Point::of(-1.0));
    return out;
  }
  switch (k) {
    case NormKind::L1:
      for (int i = 0; i < dim; ++i) {
        double v[3] = {0, 0, 0};
        v[i] = 1.0;
        out.push_back(from_array(v, dim));
        v[i] = -1.0;
        out.push_back(from_array(v, dim));
      }
      break;
    case NormKind::LInf: {
      std::size_t combos = static_cast<std::size_t>(1) << dim;
      for (std::size_t m = 0; m < combos; ++m) {
        double v[3] = {0, 0, 0};
        for (int i = 0; i < dim; ++i) v[i] = (m >> i) & 1 ? 1.0 : -1.0;
        out.push_back(from_array(v, dim));
      }
      break;
    }
    case NormKind::L2: {
      if (dim == 2) {
        // 16 evenly spaced directions.
        for (int t = 0; t < 16; ++t) {
          double a = 2.0 * M_PI * t / 16.0;
          out.push_back(Point::of(std::cos(a), std::sin(a)));
        }
      } else {
        // Axes plus normalized sign diagonals: 6 + 8 directions.
        for (int i = 0; i < 3; ++i) {
          double v[3] = {0, 0, 0};
          v[i] = 1.0;
          out.push_back(from_array(v, 3));
          v[i] = -1.0;
          out.push_back(from_array(v, 3));
        }
        double c = 1.0 / std::sqrt(3.0);
        for (std::size_t m = 0; m < 8; ++m) {
          double v[3];
          for (int i = 0; i < 3; ++i) v[i] = ((m >> i) & 1 ? 1.0 : -1.0) * c;
          out.push_back(from_array(v, 3));
        }
      }
      break;
    }
  }
  return out;
}

std::vector<Point> ball_points(int dim, NormKind k, double radius, bool include_center) {
  if (!(radius >= 0.0)) throw std::invalid_argument("ball_points: radius must be >= 0");
  std::vector<Point> out;
  if (include_center) {
    double z[3] = {0, 0, 0};
    out.push_back(from_array(z, dim));
  }
  if (radius > 0.0) {
    for (const Point& u : unit_sphere_points(dim, k)) {
      double v[3] = {0, 0, 0};
      for (int i = 0; i < dim; ++i) v[i] = radius * u[i];
      out.push_back(from_array(v, dim));
    }
  }
  return out;
}

}  // namespace slopekit
