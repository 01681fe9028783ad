#pragma once

// Morphism classification by the raw defining conditions.

#include "semimod/quotient.hpp"

namespace semimod {

struct MorphismClassification {
  Flag injective;
  Flag surjective;
  Flag k_uniform;
  Flag i_uniform;
  Flag uniform;
  Flag semi_mono;
  Flag semi_epi;
  Flag semi_iso;
  Flag cancellative;
  /// Closure of the image is the codomain; set only when both modules are
  /// cancellative.
  std::optional<Flag> epimorphism_in_cs;
};

/// f(x1) = f(x2) implies x1 + k1 = x2 + k2 for some k1, k2 in Ker(f).
Flag k_uniform(const Morphism& f);
/// f(X) equals its subtractive closure.
Flag i_uniform(const Morphism& f);
Flag uniform(const Morphism& f);
/// Ker(f) = 0.
Flag semi_mono(const Morphism& f);
/// Closure of f(X) is the codomain.
Flag semi_epi(const Morphism& f);
Flag isomorphism(const Morphism& f);

MorphismClassification classify(const Morphism& f);

std::string describe(const MorphismClassification& c);

}  // namespace semimod
