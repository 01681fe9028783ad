#pragma once

// Congruences, Bourne quotients, canonical projections and the constructions
// built from them: coimage, cokernel, canonical isomorphism, induced maps.

#include "semimod/morphism.hpp"

namespace semimod {

/// Partition of a carrier. Class ids are numbered by smallest member, so the
/// class of 0 is 0 and class order follows member order.
class Congruence {
 public:
  /// Renumbers `labels` canonically; throws AxiomError if the partition is
  /// not compatible with addition and action.
  static Congruence make(ModulePtr module, std::span<const Index> labels);

  const ModulePtr& module() const { return module_; }
  const std::vector<Index>& classes() const { return class_of_; }
  Index class_of(Index m) const { return class_of_[m]; }
  std::size_t class_count() const { return representatives_.size(); }
  /// Smallest member of each class.
  const std::vector<Index>& representatives() const { return representatives_; }
  std::vector<Index> members_of(Index cls) const;
  bool related(Index a, Index b) const { return class_of_[a] == class_of_[b]; }
  bool is_identity() const { return class_count() == class_of_.size(); }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  Congruence(ModulePtr module, std::vector<Index> class_of);

  ModulePtr module_;
  std::vector<Index> class_of_;
  std::vector<Index> representatives_;
};

/// Checks compatibility of a labeling with + and the action.
ValidationReport validate_congruence(const Semimodule& module, std::span<const Index> labels);

/// m1 ~ m2 iff m1 + l1 = m2 + l2 for some l1, l2 in L.
Congruence bourne_congruence(const Subsemimodule& l);

/// x ~ x' iff f(x) = f(x').
Congruence kernel_pair_congruence(const Morphism& f);

struct QuotientModule {
  ModulePtr base;
  Congruence congruence;
  ModulePtr quotient;
  Morphism projection;
  Subsemimodule projection_kernel;
};

QuotientModule quotient(const Congruence& rho, std::string name = {});
/// M/L by the Bourne congruence of L.
QuotientModule quotient(const Subsemimodule& l, std::string name = {});

/// Expected to hold for every subsemimodule.
bool projection_kernel_is_closure(const Subsemimodule& l);

/// Quotient of the domain by the kernel-pair congruence.
QuotientModule coimage(const Morphism& f);

/// Codomain modulo the Bourne congruence of the image.
QuotientModule cokernel(const Morphism& f);

/// d_f: Coim(f) -> Im(f), [x] -> f(x); verified bijective.
Morphism canonical_iso(const Morphism& f);

/// f': L -> Ker(g). Throws PreconditionError unless g∘f = 0.
Morphism induced_to_kernel(const Morphism& f, const Morphism& g);

/// g'': Coker(f) -> N, [m] -> g(m). Throws PreconditionError unless g∘f = 0.
Morphism induced_from_cokernel(const Morphism& f, const Morphism& g);

/// [m] -> f(m) from q.quotient to the codomain of f, where f is defined on
/// q.base; nullopt when f is not constant on classes.
std::optional<Morphism> descend(const QuotientModule& q, const Morphism& f);

}  // namespace semimod
