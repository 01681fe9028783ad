#pragma once

// Exhaustive generation of small semimodules up to isomorphism and
// brute-force categorical oracles over the generated universe.

#include <cstdint>

#include "semimod/classify.hpp"

namespace semimod {

struct UniverseSpec {
  SemiringPtr semiring;
  std::size_t max_module_size = 4;
  std::size_t max_modules = 100000;
  std::uint64_t seed = 0;
};

struct Universe {
  UniverseSpec spec;
  /// Ordered by size, then by canonical form.
  std::vector<ModulePtr> modules;
  bool truncated = false;
};

/// Throws ParameterError if max_module_size is 0 or the semiring is missing.
Universe enumerate_semimodules(const UniverseSpec& spec);

/// Addition tables of all commutative monoids on {0..n-1} with identity 0,
/// one per isomorphism class, each equal to its canonical form.
std::vector<Table> enumerate_commutative_monoids(std::size_t n);

/// Lexicographically least (add cells, action cells) over all carrier
/// permutations fixing 0.
std::vector<Index> canonical_form(const Semimodule& m);

/// Index i of the semiring is the i-fold sum of 1, so every action is forced.
bool has_natural_indexing(const Semiring& s);

/// Exhaustive over bijections fixing 0.
std::optional<Morphism> oracle_iso_exists(const ModulePtr& m, const ModulePtr& n);

/// Hom(A, B) for every ordered pair of a fixed module list.
class HomTable {
 public:
  explicit HomTable(std::vector<ModulePtr> modules, unsigned threads = 0);

  const std::vector<ModulePtr>& modules() const { return modules_; }
  const std::vector<Morphism>& hom(std::size_t from, std::size_t to) const {
    return homs_[from * modules_.size() + to];
  }
  /// Position of a module in the list (pointer identity); throws ParameterError.
  std::size_t index_of(const ModulePtr& m) const;
  /// Every morphism, ordered by (domain, codomain, map).
  std::vector<Morphism> all() const;

 private:
  std::vector<ModulePtr> modules_;
  std::vector<std::vector<Morphism>> homs_;
};

/// f∘h1 = f∘h2 implies h1 = h2 for all h1, h2: T -> dom(f), T among the
/// table's modules. Witness names the test object and both maps.
Flag monomorphism_bruteforce(const Morphism& f, const HomTable& tests);
/// h1∘f = h2∘f implies h1 = h2 for all h1, h2: cod(f) -> T.
Flag epimorphism_bruteforce(const Morphism& f, const HomTable& tests);
/// f is, up to the induced map, the quotient by its kernel pair onto the codomain.
Flag regular_epimorphism(const Morphism& f);

/// [x] -> f(x) from X/Ker(f) (Bourne) onto f(X); returns it when well
/// defined and bijective.
std::optional<Morphism> bourne_coimage_iso(const Morphism& f);
/// [x] -> f(x) from X/Ker(f) into the closure of f(X), when well defined and
/// bijective.
std::optional<Morphism> bourne_closure_iso(const Morphism& f);

}  // namespace semimod
