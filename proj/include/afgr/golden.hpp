#pragma once

// Named SL3/SL2 polytopes and subdivisions, and the worked-example corpus:
// Gr^{theta} intersected with S_{w0}^mu for the five weights mu <= theta.

#include <string>
#include <vector>

#include "afgr/json_io.hpp"
#include "afgr/upper_bound.hpp"

namespace afgr {

/// point, segment, triangle, trapezoid, hexagon (the corpus), prime-triangle,
/// sl2-segment. Throws UsageError for unknown names.
Polytope named_polytope(const std::string& name);
std::vector<std::string> polytope_names();

struct NamedSubdivision {
  Polytope outer;
  Subdivision subdivision;
  bool expected_regular = false;
};
/// trivial, rhombi, mother (twisted, non-regular), mother-mixed (regular).
NamedSubdivision named_subdivision(const std::string& name);
std::vector<std::string> subdivision_names();

struct GoldenCase {
  std::string key;
  std::string mu_label;
  Coweight mu;
  Polytope polytope;
  Int dimension = 0;
  Int expected_lower = 0;
  Int expected_components = 0;
};
std::vector<GoldenCase> golden_corpus();

struct GoldenOutcome {
  GoldenCase c;
  Int lower = 0;
  Int dimension = 0;
  UpperBound upper;
  bool pass = false;
};

struct RegularityOutcome {
  std::string name;
  bool expected = false;
  bool regular = false;
  bool certificate_valid = false;
  bool pass = false;
};

struct ExamplesReport {
  std::vector<GoldenOutcome> cases;
  std::vector<RegularityOutcome> subdivisions;
  bool all_pass() const;
};

/// Empty `only` runs everything; otherwise one corpus case or subdivision.
ExamplesReport run_examples(Int cap, const std::string& only = "");
Json to_json(const ExamplesReport& r);
std::string to_text(const ExamplesReport& r);

}  // namespace afgr
