#pragma once

// S-linear maps between finite semimodules.

#include "semimod/core.hpp"

namespace semimod {

/// Result of a decidable property check; `witness` names the offending
/// elements when the property fails (e.g. "element 2", "pair (1,2)").
struct Flag {
  bool holds = true;
  std::string witness;

  explicit operator bool() const { return holds; }
  static Flag yes() { return {true, {}}; }
  static Flag no(std::string witness) { return {false, std::move(witness)}; }
};

std::string element_witness(Index m);
std::string pair_witness(Index a, Index b);

bool same_ring(const SemiringPtr& a, const SemiringPtr& b);
bool same_module(const ModulePtr& a, const ModulePtr& b);

class Morphism {
 public:
  Morphism() = default;

  /// Validates totality, zero preservation, additivity and equivariance;
  /// throws StructureError or AxiomError.
  static Morphism make(ModulePtr domain, ModulePtr codomain, std::vector<Index> map,
                       std::string name = {});
  /// For maps that are linear by construction.
  static Morphism unchecked(ModulePtr domain, ModulePtr codomain, std::vector<Index> map,
                            std::string name = {});

  const ModulePtr& domain() const { return domain_; }
  const ModulePtr& codomain() const { return codomain_; }
  const std::vector<Index>& map() const { return map_; }
  const std::string& name() const { return name_; }
  Index operator()(Index m) const { return map_[m]; }
  Morphism named(std::string name) const;

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  Morphism(ModulePtr domain, ModulePtr codomain, std::vector<Index> map, std::string name);

  ModulePtr domain_;
  ModulePtr codomain_;
  std::vector<Index> map_;
  std::string name_;
};

ValidationReport validate_morphism(const Semimodule& domain, const Semimodule& codomain,
                                   std::span<const Index> map);

/// g∘f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity(const ModulePtr& m);
Morphism zero_morphism(const ModulePtr& from, const ModulePtr& to);
bool is_zero(const Morphism& f);

/// Inclusion of a materialized subsemimodule (see as_module) into its parent.
Morphism inclusion(const Subsemimodule& sub, const ModulePtr& materialized);
Morphism inclusion(const Subsemimodule& sub);

/// f with codomain restricted to `target` (materialized from `sub`).
Morphism corestrict(const Morphism& f, const Subsemimodule& sub, const ModulePtr& target);

Subsemimodule kernel(const Morphism& f);
Subsemimodule image(const Morphism& f);

/// Pointwise sum; Hom(M,N) is a commutative monoid under it.
Morphism hom_sum(const Morphism& f, const Morphism& g);

/// Greedy generating set: each element is the smallest index outside the
/// span of those before it.
std::vector<Index> generating_set(const ModulePtr& m);

/// All S-linear maps M -> N, sorted by map table.
std::vector<Morphism> enumerate_hom(const ModulePtr& m, const ModulePtr& n);

Flag injective(const Morphism& f);
Flag surjective(const Morphism& f);

/// Every image element f(m) is cancellable in the codomain.
Flag cancellative_morphism(const Morphism& f);
Flag cancellative_module(const Semimodule& m);

}  // namespace semimod
