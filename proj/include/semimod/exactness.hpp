#pragma once

// Finite sequences of semimodules and their exactness flags.

#include "semimod/classify.hpp"

namespace semimod {

class Sequence {
 public:
  /// Throws StructureError unless arrows[i].codomain is arrows[i+1].domain.
  static Sequence make(std::vector<Morphism> arrows, std::string name = {});

  const std::vector<ModulePtr>& objects() const { return objects_; }
  const std::vector<Morphism>& arrows() const { return arrows_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<ModulePtr> objects_;
  std::vector<Morphism> arrows_;
  std::string name_;
};

/// Flags for L -f-> M -g-> N at M.
struct PositionVerdict {
  std::size_t object = 0;  // index of M in the sequence
  Flag chain_complex;      // g∘f = 0
  Flag proper_exact;       // f(L) = Ker(g)
  Flag semi_exact;         // closure of f(L) = Ker(g)
  Flag exact;              // proper-exact and g k-uniform
};

struct ArrowVerdict {
  Flag k_uniform;
  Flag i_uniform;
  Flag uniform;
};

struct ExactnessVerdict {
  std::vector<PositionVerdict> positions;
  std::vector<ArrowVerdict> arrows;

  bool exact() const;
  bool proper_exact() const;
  bool semi_exact() const;
  bool chain_complex() const;
};

Flag chain_complex_at(const Morphism& f, const Morphism& g);
Flag proper_exact_at(const Morphism& f, const Morphism& g);
Flag semi_exact_at(const Morphism& f, const Morphism& g);
Flag exact_at(const Morphism& f, const Morphism& g);

ExactnessVerdict analyze(const Sequence& seq);

struct ShortExactVerdict {
  bool holds = false;
  std::string diagnosis;  // first failing condition, empty when exact
  /// f' : L -> Ker(g) and g'' : Coker(f) -> N are both isomorphisms.
  bool canonical_isos = false;
};

/// 0 -> L -f-> M -g-> N -> 0: f injective, f(L) = Ker(g), g surjective and
/// k-uniform. Throws StructureError on other shapes.
ShortExactVerdict is_short_exact(const Sequence& seq);

/// 0 -> L -f-> M -g-> N -> 0 from the two middle arrows.
Sequence short_sequence(const Morphism& f, const Morphism& g, std::string name = {});

struct KerCokerSequences {
  Sequence five_term;       // 0 -> Ker -> X -> Y -> Coker -> 0
  ExactnessVerdict verdict;
  Sequence closure_image;   // 0 -> closure(f(X)) -> Y -> Y/f(X) -> 0
  Sequence kernel_quotient; // 0 -> Ker -> X -> X/Ker -> 0
};

KerCokerSequences ker_coker_sequence(const Morphism& f);

struct SubobjectCharacter {
  bool semi_exact = false;       // 0 -> L -> M -> M/L -> 0 semi-exact
  bool closure_exact = false;    // 0 -> closure(L) -> M -> M/L -> 0 exact
  bool exact = false;            // 0 -> L -> M -> M/L -> 0 exact
  bool iso_to_kernel = false;    // L -> Ker(pi_L) induced by inclusion is iso
  bool closure_sequence_exact = false;  // 0 -> L -> closure(L) -> 0 exact
  bool uniform = false;          // inclusion uniform
  bool normal = false;           // L = Ker(pi_L)

  bool equivalent() const {
    return exact == iso_to_kernel && exact == closure_sequence_exact && exact == uniform &&
           exact == normal;
  }
};

SubobjectCharacter subobject_character(const Subsemimodule& l);

}  // namespace semimod
