#pragma once

// Seeded generation of hypothesis-satisfying diagrams over module pools and
// parallel verification of lemma statements on them.

#include <cstdint>
#include <functional>

#include "semimod/diagram.hpp"
#include "semimod/enumerate.hpp"

namespace semimod {

struct Pool {
  std::string name;
  std::shared_ptr<const HomTable> homs;

  const std::vector<ModulePtr>& modules() const { return homs->modules(); }
};

Pool make_pool(std::string name, std::vector<ModulePtr> modules);
/// Pool of all modules of a universe.
Pool make_pool(std::string name, const UniverseSpec& spec);

/// Universes over B, Z2, Z4 and T2 up to `max_size`, plus commutative
/// monoids (as modules over a cyclic quotient of the naturals) up to
/// `max_size`.
std::vector<Pool> standard_pools(std::size_t max_size = 3);

struct HarnessOptions {
  std::size_t target = 100;
  std::uint64_t seed = 1;
  std::size_t max_attempts = 40000;
  /// Bindings tried per attempt before it is abandoned.
  std::size_t node_budget = 4000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct GenerationStats {
  std::size_t attempts = 0;
  std::size_t solutions = 0;
  std::size_t duplicates = 0;
  std::vector<std::string> exhausted_pools;  // proved to have no instance
};

/// Distinct diagrams of `shape` over single pools satisfying every square
/// and every constraint, in attempt order. Deterministic for fixed options.
std::vector<Diagram> generate_diagrams(Shape shape, const std::vector<Claim>& constraints,
                                       const std::vector<Pool>& pools, const HarnessOptions& opts,
                                       GenerationStats* stats = nullptr);

struct SearchOutcome {
  std::optional<Diagram> diagram;
  std::size_t nodes = 0;
  /// The search space was covered; no diagram means none exists in the pool.
  bool complete = false;
};

/// Deterministic depth-first search in pool order; the first complete
/// diagram accepted by `accept` (if given) wins.
SearchOutcome search_diagram(Shape shape, const std::vector<Claim>& constraints, const Pool& pool,
                             std::size_t node_budget,
                             const std::function<bool(const Diagram&)>& accept = {});

/// Identifies a diagram by pool, object choices and arrow tables.
std::string diagram_key(const Diagram& d);

struct LemmaRun {
  std::string lemma;
  std::vector<Diagram> diagrams;
  std::vector<Certificate> certificates;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t hypothesis_failed = 0;
  GenerationStats stats;
};

LemmaRun run_lemma(const Lemma& lemma, const std::vector<Pool>& pools, const HarnessOptions& opts);

struct SnakeRun {
  std::vector<Diagram> diagrams;
  std::vector<SnakeResult> results;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t hypothesis_failed = 0;
  GenerationStats stats;
};

SnakeRun run_snake(const std::vector<Pool>& pools, const HarnessOptions& opts);

/// Runs fn(i) for i in [0, n) on worker threads.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace semimod
