#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/oracle.hpp"
#include "slopekit/probe_function.hpp"
#include "slopekit/setval.hpp"
#include "slopekit/space.hpp"
#include "slopekit/two_var.hpp"

namespace slopekit {

// Named fixtures with pencil-and-paper answers. Every value in ground_truth
// was derived by hand from the fixture's formula (most are exact on the
// default radius schedule, see the catalog tests); the reports and the
// property suite check themselves against these numbers, so change them
// only together with a re-derivation.

struct CatalogEntry {
  std::string name;
  std::string kind;  // "function" | "two_var_function" | "mapping"
  std::string summary;
  std::vector<std::pair<std::string, double>> ground_truth;  // quantity -> hand value
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& name);

// Builders. Each throws std::invalid_argument for an unknown name or a name
// of a different kind.
ProbeFunction catalog_function(const std::string& name);
TwoVarFunction catalog_two_var(const std::string& name);
SetValuedMapping catalog_mapping(const std::string& name);

// Points at which reports evaluate pointwise rows for this fixture.
std::vector<Point> catalog_probe_points(const std::string& name);

// Pair probes for two-variable fixtures and mappings (graph pairs there).
std::vector<PairPt> catalog_probe_pairs(const std::string& name);

// Hand-derived expectations in cross_check form. Only 1-d function fixtures
// have grid expectations; others return an empty list.
std::vector<AnalyticEntry> catalog_expectations(const std::string& name);

// Deterministic random instances for the equivalence and property sweeps.
// Distances are shortest paths over a random weighted complete graph, so
// symmetry and the triangle inequality hold by construction.
FiniteMetricSpace random_finite_space(unsigned seed, std::size_t points);

// Random extended-real function on random_finite_space(seed, points):
// a mix of zeros, finite values and sparse +infinity, with the base point
// at index 0. allow_negative widens the finite range below zero (the
// brute-force comparison is sign-agnostic; the property sweeps keep f >= 0).
ProbeFunction random_finite_function(unsigned seed, std::size_t points, bool allow_negative);

// Random relation between two random finite spaces with (xbar, ybar) =
// (index 0, index 0) forced onto the graph. No normal-cone oracle: dual
// conditions are reported as not evaluable, primal ones stay exact.
SetValuedMapping random_finite_mapping(unsigned seed, std::size_t xpoints, std::size_t ypoints);

}  // namespace slopekit
