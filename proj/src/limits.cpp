#include "slopekit/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slopekit {

void RadiusSchedule::validate() const {
  if (!(rho0 > 0.0) || !std::isfinite(rho0)) {
    throw std::invalid_argument("RadiusSchedule: rho0 must be positive and finite");
  }
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("RadiusSchedule: gamma must lie in (0,1)");
  }
  if (steps < 1) {
    throw std::invalid_argument("RadiusSchedule: steps must be >= 1");
  }
}

std::vector<double> RadiusSchedule::radii() const {
  validate();
  std::vector<double> r(static_cast<std::size_t>(steps));
  double rho = rho0;
  for (int k = 0; k < steps; ++k) {
    r[static_cast<std::size_t>(k)] = rho;
    rho *= gamma;
  }
  return r;
}

bool LimitEstimate::all_infinite() const {
  return std::all_of(per_radius.begin(), per_radius.end(),
                     [](const auto& p) { return p.second.is_inf(); });
}

bool LimitEstimate::has_note(const std::string& n) const {
  return std::find(notes.begin(), notes.end(), n) != notes.end();
}

void LimitEstimate::add_note(const std::string& n) {
  if (!has_note(n)) notes.push_back(n);
}

LimitEstimate estimate_over_radii(const std::function<ExtReal(const BandRadius&)>& band_value,
                                  const std::vector<BandRadius>& radii, double tol,
                                  LimitTrend trend) {
  if (radii.empty()) throw std::invalid_argument("estimate_over_radii: no radii");
  if (!(tol > 0.0)) throw std::invalid_argument("estimate_over_radii: tol must be positive");

  LimitEstimate est;
  est.per_radius.reserve(radii.size());
  for (const BandRadius& r : radii) {
    est.per_radius.emplace_back(r.rho, band_value(r));
  }
  est.reported = est.per_radius.back().second;

  est.monotone = true;
  for (std::size_t k = 0; k + 1 < est.per_radius.size(); ++k) {
    const ExtReal& a = est.per_radius[k].second;
    const ExtReal& b = est.per_radius[k + 1].second;
    bool ok;
    if (trend == LimitTrend::NondecreasingInf) {
      ok = a.is_inf() ? b.is_inf() : (b.raw() >= a.raw() - tol);
    } else {
      ok = b.is_inf() ? a.is_inf() : (a.is_inf() || b.raw() <= a.raw() + tol);
    }
    if (!ok) {
      est.monotone = false;
      break;
    }
  }

  if (est.per_radius.size() >= 2) {
    const ExtReal& last = est.per_radius.back().second;
    const ExtReal& prev = est.per_radius[est.per_radius.size() - 2].second;
    if (last.is_inf() && prev.is_inf()) {
      est.saturated = true;
    } else if (!last.is_inf() && !prev.is_inf()) {
      est.saturated = std::fabs(last.raw() - prev.raw()) <= tol;
    } else {
      est.saturated = false;
    }
  } else {
    est.saturated = false;
    est.add_note("single-rung");
  }

  if (est.all_infinite()) est.add_note("all-bands-empty");
  return est;
}

LimitEstimate estimate_limit(const std::function<ExtReal(double)>& band_inf,
                             const RadiusSchedule& schedule, double tol) {
  schedule.validate();
  if (schedule.steps < 2) {
    throw std::invalid_argument("estimate_limit: schedule must have at least 2 steps");
  }
  std::vector<BandRadius> rs;
  for (double rho : schedule.radii()) rs.push_back(BandRadius{rho, false});
  return estimate_over_radii([&](const BandRadius& r) { return band_inf(r.rho); }, rs, tol,
                             LimitTrend::NondecreasingInf);
}

std::vector<BandRadius> radii_with_snap(const RadiusSchedule& schedule, double t_min) {
  std::vector<BandRadius> rs;
  for (double rho : schedule.radii()) {
    if (std::isfinite(t_min) && rho <= t_min) break;
    rs.push_back(BandRadius{rho, false});
  }
  if (std::isfinite(t_min)) {
    rs.push_back(BandRadius{t_min, true});
  }
  if (rs.empty()) rs.push_back(BandRadius{schedule.rho0, false});
  return rs;
}

}  // namespace slopekit
