#include "slopekit/space.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace slopekit {

const char* norm_name(NormKind k) {
  switch (k) {
    case NormKind::L2: return "l2";
    case NormKind::L1: return "l1";
    case NormKind::LInf: return "linf";
  }
  return "?";
}

std::string Point::str() const {
  std::ostringstream os;
  if (is_index()) {
    os << "#" << id;
  } else {
    os << "(";
    for (int i = 0; i < dim; ++i) {
      if (i) os << ", ";
      os << x[static_cast<std::size_t>(i)];
    }
    os << ")";
  }
  return os.str();
}

double norm_of(const double* v, int dim, NormKind k) {
  switch (k) {
    case NormKind::L2: {
      double s = 0.0;
      for (int i = 0; i < dim; ++i) s += v[i] * v[i];
      return std::sqrt(s);
    }
    case NormKind::L1: {
      double s = 0.0;
      for (int i = 0; i < dim; ++i) s += std::fabs(v[i]);
      return s;
    }
    case NormKind::LInf: {
      double s = 0.0;
      for (int i = 0; i < dim; ++i) s = std::max(s, std::fabs(v[i]));
      return s;
    }
  }
  return 0.0;
}

NormKind dual_norm_kind(NormKind k) {
  switch (k) {
    case NormKind::L2: return NormKind::L2;
    case NormKind::L1: return NormKind::LInf;
    case NormKind::LInf: return NormKind::L1;
  }
  return NormKind::L2;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> matrix)
    : n_(labels.size()), labels_(std::move(labels)), d_(std::move(matrix)) {
  if (n_ == 0) throw std::invalid_argument("FiniteMetricSpace: empty point list");
  if (n_ > kMaxPoints) throw std::invalid_argument("FiniteMetricSpace: more than 400 points");
  if (d_.size() != n_ * n_) {
    throw std::invalid_argument("FiniteMetricSpace: matrix size must be n*n");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (d_[i * n_ + i] != 0.0) {
      throw std::invalid_argument("FiniteMetricSpace: nonzero diagonal entry");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      double v = d_[i * n_ + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("FiniteMetricSpace: distances must be finite and >= 0");
      }
      if (i != j && v == 0.0) {
        throw std::invalid_argument("FiniteMetricSpace: distinct points at distance 0");
      }
      if (v != d_[j * n_ + i]) {
        throw std::invalid_argument("FiniteMetricSpace: matrix not symmetric");
      }
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (d_[i * n_ + j] > d_[i * n_ + k] + d_[k * n_ + j] + 1e-12) {
          throw std::invalid_argument("FiniteMetricSpace: triangle inequality violated");
        }
      }
    }
  }
}

EuclideanSpace::EuclideanSpace(int dim, NormKind norm) : dim_(dim), norm_(norm) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("EuclideanSpace: dim must be 1..3");
  // Deterministic spot check of the norm axioms on a few dozen triples.
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  auto next = [&s]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return (static_cast<double>(s >> 11) * 0x1.0p-53) * 4.0 - 2.0;
  };
  for (int t = 0; t < 32; ++t) {
    double a[3] = {0, 0, 0}, b[3] = {0, 0, 0}, ab[3] = {0, 0, 0};
    for (int i = 0; i < dim_; ++i) {
      a[i] = next();
      b[i] = next();
      ab[i] = a[i] + b[i];
    }
    double na = norm_of(a, dim_, norm_);
    double nb = norm_of(b, dim_, norm_);
    double nab = norm_of(ab, dim_, norm_);
    if (nab > na + nb + 1e-9 || na < 0.0) {
      throw std::logic_error("EuclideanSpace: norm axiom check failed");
    }
  }
}

double EuclideanSpace::dist(const Point& a, const Point& b) const {
  if (a.is_index() || b.is_index() || a.dim != dim_ || b.dim != dim_) {
    throw std::invalid_argument("EuclideanSpace: point/dimension mismatch");
  }
  double d[3] = {0, 0, 0};
  for (int i = 0; i < dim_; ++i) {
    d[i] = a.x[static_cast<std::size_t>(i)] - b.x[static_cast<std::size_t>(i)];
  }
  return norm_of(d, dim_, norm_);
}

Space::Space(FiniteMetricSpace fin) : fin_(std::make_shared<FiniteMetricSpace>(std::move(fin))) {}
Space::Space(EuclideanSpace euc) : euc_(std::make_shared<EuclideanSpace>(euc)) {}

const FiniteMetricSpace& Space::finite() const {
  if (!fin_) throw std::logic_error("Space: not a finite space");
  return *fin_;
}

const EuclideanSpace& Space::euclidean() const {
  if (!euc_) throw std::logic_error("Space: not a Euclidean space");
  return *euc_;
}

double Space::dist(const Point& a, const Point& b) const {
  if (fin_) {
    if (!a.is_index() || !b.is_index()) {
      throw std::invalid_argument("Space: finite space expects indexed points");
    }
    std::size_t i = static_cast<std::size_t>(a.id), j = static_cast<std::size_t>(b.id);
    if (i >= fin_->size() || j >= fin_->size()) {
      throw std::out_of_range("Space: point index out of range");
    }
    return fin_->dist(i, j);
  }
  if (euc_) return euc_->dist(a, b);
  throw std::logic_error("Space: empty handle");
}

std::vector<Point> Space::all_points() const {
  if (!fin_) throw std::logic_error("Space: all_points requires a finite space");
  std::vector<Point> pts;
  pts.reserve(fin_->size());
  for (std::size_t i = 0; i < fin_->size(); ++i) pts.push_back(Point::finite(static_cast<int>(i)));
  return pts;
}

}  // namespace slopekit
