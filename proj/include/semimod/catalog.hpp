#pragma once

// Counterexample catalog: statements with a hypothesis dropped, searched
// smallest-first over an enumerated universe.

#include "semimod/harness.hpp"

namespace semimod {

struct PropertyInfo {
  std::string id;
  /// The claim whose failure is searched for.
  std::string statement;
  /// A witness is expected to exist at desk scale.
  bool expect_witness = true;
};

const std::vector<PropertyInfo>& property_catalog();
/// Throws ParameterError for unknown ids.
const PropertyInfo& find_property(const std::string& id);

struct Counterexample {
  std::string property;
  std::string description;
  std::vector<ModulePtr> modules;
  std::vector<Morphism> morphisms;
  std::optional<Subsemimodule> sub;
  std::optional<Diagram> diagram;
  /// No instance with smaller modules exists in the searched universe.
  bool minimal = false;
};

struct ExhaustionReport {
  std::string property;
  std::string universe;
  std::size_t candidates = 0;
  /// False when a search budget cut the scan short.
  bool complete = true;
};

struct SearchResult {
  std::optional<Counterexample> counterexample;
  std::optional<ExhaustionReport> exhaustion;
};

struct SearchLimits {
  /// Per-size node budget for diagram searches.
  std::size_t node_budget = 2'000'000;
};

/// Throws ParameterError for unknown ids.
SearchResult search_counterexample(const std::string& property_id, const UniverseSpec& spec,
                                   const SearchLimits& limits = {});

/// Re-checks the stored witnesses; holds when the property still fails on them.
Flag replay(const Counterexample& c);

/// Hand-built witnesses shipped with the library.
std::vector<Counterexample> stored_counterexamples();

std::string describe(const Counterexample& c);
std::string describe(const ExhaustionReport& r);

}  // namespace semimod
