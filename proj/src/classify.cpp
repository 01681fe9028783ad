#include "semimod/classify.hpp"

#include <sstream>

namespace semimod {

Flag k_uniform(const Morphism& f) {
  const auto& x = *f.domain();
  const auto ker = kernel(f);
  const auto n = static_cast<Index>(x.size);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (f(a) != f(b)) continue;
      bool found = false;
      for (Index k1 : ker.members()) {
        for (Index k2 : ker.members()) {
          if (x.plus(a, k1) == x.plus(b, k2)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return Flag::no(pair_witness(a, b));
    }
  }
  return Flag::yes();
}

Flag i_uniform(const Morphism& f) {
  const auto im = image(f);
  const auto closure = subtractive_closure(im);
  for (Index y : closure.members()) {
    if (!im.contains(y)) return Flag::no(element_witness(y));
  }
  return Flag::yes();
}

Flag uniform(const Morphism& f) {
  if (auto k = k_uniform(f); !k) return k;
  return i_uniform(f);
}

Flag semi_mono(const Morphism& f) {
  for (Index m = 1; m < f.map().size(); ++m) {
    if (f(m) == 0) return Flag::no(element_witness(m));
  }
  return Flag::yes();
}

Flag semi_epi(const Morphism& f) {
  const auto closure = subtractive_closure(image(f));
  for (Index y = 0; y < f.codomain()->size; ++y) {
    if (!closure.contains(y)) return Flag::no(element_witness(y));
  }
  return Flag::yes();
}

Flag isomorphism(const Morphism& f) {
  if (auto i = injective(f); !i) return i;
  return surjective(f);
}

MorphismClassification classify(const Morphism& f) {
  MorphismClassification c;
  c.injective = injective(f);
  c.surjective = surjective(f);
  c.k_uniform = k_uniform(f);
  c.i_uniform = i_uniform(f);
  c.uniform = c.k_uniform ? c.i_uniform : c.k_uniform;
  c.semi_mono = semi_mono(f);
  c.semi_epi = semi_epi(f);
  c.semi_iso = c.semi_mono ? c.semi_epi : c.semi_mono;
  c.cancellative = cancellative_morphism(f);
  if (is_cancellative_module(*f.domain()) && is_cancellative_module(*f.codomain())) {
    c.epimorphism_in_cs = c.semi_epi;
  }
  return c;
}

std::string describe(const MorphismClassification& c) {
  std::ostringstream out;
  auto line = [&](const char* name, const Flag& f) {
    out << name << "=" << (f.holds ? "true" : "false");
    if (!f.holds) out << " (" << f.witness << ")";
    out << "\n";
  };
  line("injective", c.injective);
  line("surjective", c.surjective);
  line("k_uniform", c.k_uniform);
  line("i_uniform", c.i_uniform);
  line("uniform", c.uniform);
  line("semi_mono", c.semi_mono);
  line("semi_epi", c.semi_epi);
  line("semi_iso", c.semi_iso);
  line("cancellative", c.cancellative);
  if (c.epimorphism_in_cs) line("epimorphism_in_cs", *c.epimorphism_in_cs);
  return out.str();
}

}  // namespace semimod
