#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopekit/properties.hpp"
#include "slopekit/setval.hpp"
#include "slopekit/slopes1.hpp"
#include "slopekit/slopes2.hpp"

namespace slopekit {

enum class ReportFormat { Json, Table, Csv };

// Accepts "json", "table", "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& name);

// Pointwise rows plus every band limit the mapping analysis produces. The
// gfrerer member carries the full rung trace of the origin-exclusion test.
struct MappingPointRow {
  PairPt at;
  double rho = 0.0;
  bool in_graph = false;
  ExtReal range_distance{0.0};  // d(y, ybar), the reduction objective
  PointwiseValue local;
  PointwiseValue nonlocal;
  std::optional<ExtReal> subdiff;
  std::optional<ExtReal> approx_subdiff;
};

struct MappingReport {
  std::string fixture;
  std::vector<MappingPointRow> points;
  LimitEstimate sr;
  LimitEstimate uniform_strict;
  LimitEstimate strict_outer;
  LimitEstimate ratio;
  LimitEstimate subdiff_strict_outer;
  LimitEstimate approx_subdiff_strict_outer;
  bool subdiff_available = false;
  GfrererResult gfrerer;
};

MappingReport make_mapping_report(const SetValuedMapping& F, const std::vector<PairPt>& probes,
                                  double probe_rho, const TwoVarConfig& cfg);

struct ExpectationCheck {
  std::string key;
  double expected = 0.0;
  ExtReal actual{0.0};
  double tolerance = 0.0;
  bool ok = false;
};

// Everything one analyze invocation produced, ready for rendering. Exactly
// one of fn / pair / map is populated, matching kind.
struct Analysis {
  std::string source;  // "catalog:<name>" or the spec file path
  std::string kind;    // "function" | "two_var_function" | "mapping"
  RadiusSchedule schedule;
  double tol = 1e-6;
  double gamma = 0.5;
  unsigned seed = 0;
  std::optional<SlopeReport> fn;
  std::optional<TwoVarSlopeReport> pair;
  std::optional<MappingReport> map;
  CriteriaVerdict verdict;
  bool expectations_checked = false;
  std::vector<ExpectationCheck> expectations;

  bool expectations_ok() const;
};

// Renderers. Output is deterministic for identical inputs: fixed key order,
// fixed column order, locale-independent number formatting. Band quantities
// always carry their whole per-radius sequence.
std::string render_analysis(const Analysis& a, ReportFormat fmt);
std::string render_catalog_listing(ReportFormat fmt);
std::string render_properties(const PropertySuiteResult& r, ReportFormat fmt);

}  // namespace slopekit
