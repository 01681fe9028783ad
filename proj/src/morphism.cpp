#include "semimod/morphism.hpp"

#include <algorithm>

namespace semimod {

std::string element_witness(Index m) { return "element " + std::to_string(m); }

std::string pair_witness(Index a, Index b) {
  return "pair (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

bool same_ring(const SemiringPtr& a, const SemiringPtr& b) {
  return a == b || (a && b && same_structure(*a, *b));
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  return a == b || (a && b && same_structure(*a, *b));
}

Morphism::Morphism(ModulePtr domain, ModulePtr codomain, std::vector<Index> map, std::string name)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      map_(std::move(map)),
      name_(std::move(name)) {}

ValidationReport validate_morphism(const Semimodule& dom, const Semimodule& cod,
                                   std::span<const Index> map) {
  if (!same_ring(dom.ring, cod.ring)) {
    throw StructureError("morphism between semimodules over different semirings");
  }
  if (map.size() != dom.size) {
    throw StructureError("map has " + std::to_string(map.size()) + " entries, domain " +
                         dom.name + " has " + std::to_string(dom.size));
  }
  for (Index v : map) {
    if (v >= cod.size) throw StructureError("map value " + std::to_string(v) + " out of range");
  }
  ValidationReport r;
  if (map[0] != 0) r.violations.push_back({"preserves-zero", {0}, "f(0) != 0"});
  for (Index a = 0; a < dom.size; ++a) {
    for (Index b = a; b < dom.size; ++b) {
      if (map[dom.plus(a, b)] != cod.plus(map[a], map[b])) {
        r.violations.push_back({"additive", {a, b}, "f(a+b) != f(a)+f(b)"});
      }
    }
    for (Index s = 0; s < dom.ring->size; ++s) {
      if (map[dom.act(a, s)] != cod.act(map[a], s)) {
        r.violations.push_back({"equivariant", {a, s}, "f(ms) != f(m)s"});
      }
    }
  }
  return r;
}

Morphism Morphism::make(ModulePtr domain, ModulePtr codomain, std::vector<Index> map,
                        std::string name) {
  if (!domain || !codomain) throw StructureError("morphism needs domain and codomain");
  auto report = validate_morphism(*domain, *codomain, map);
  if (!report.ok()) throw AxiomError("morphism " + name, std::move(report));
  return Morphism(std::move(domain), std::move(codomain), std::move(map), std::move(name));
}

Morphism Morphism::unchecked(ModulePtr domain, ModulePtr codomain, std::vector<Index> map,
                             std::string name) {
  return Morphism(std::move(domain), std::move(codomain), std::move(map), std::move(name));
}

Morphism Morphism::named(std::string name) const {
  Morphism copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.map_ == b.map_ && same_module(a.domain_, b.domain_) &&
         same_module(a.codomain_, b.codomain_);
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_module(f.codomain(), g.domain())) {
    throw StructureError("cannot compose " + g.name() + " after " + f.name());
  }
  std::vector<Index> map(f.map().size());
  for (Index m = 0; m < map.size(); ++m) map[m] = g(f(m));
  return Morphism::unchecked(f.domain(), g.codomain(), std::move(map));
}

Morphism identity(const ModulePtr& m) {
  std::vector<Index> map(m->size);
  for (Index i = 0; i < map.size(); ++i) map[i] = i;
  return Morphism::unchecked(m, m, std::move(map), "id");
}

Morphism zero_morphism(const ModulePtr& from, const ModulePtr& to) {
  if (!same_ring(from->ring, to->ring)) throw StructureError("zero morphism across semirings");
  return Morphism::unchecked(from, to, std::vector<Index>(from->size, 0), "0");
}

bool is_zero(const Morphism& f) {
  return std::all_of(f.map().begin(), f.map().end(), [](Index v) { return v == 0; });
}

Morphism inclusion(const Subsemimodule& sub, const ModulePtr& materialized) {
  if (materialized->size != sub.size()) throw StructureError("materialized size mismatch");
  return Morphism::unchecked(materialized, sub.parent(), sub.members(), "incl");
}

Morphism inclusion(const Subsemimodule& sub) { return inclusion(sub, as_module(sub)); }

Morphism corestrict(const Morphism& f, const Subsemimodule& sub, const ModulePtr& target) {
  std::vector<Index> map(f.map().size());
  for (Index m = 0; m < map.size(); ++m) {
    if (!sub.contains(f(m))) {
      throw PreconditionError("value " + std::to_string(f(m)) + " outside corestriction target");
    }
    map[m] = sub.local_index(f(m));
  }
  return Morphism::unchecked(f.domain(), target, std::move(map), f.name());
}

Subsemimodule kernel(const Morphism& f) {
  std::vector<Index> members;
  for (Index m = 0; m < f.map().size(); ++m) {
    if (f(m) == 0) members.push_back(m);
  }
  return Subsemimodule::make(f.domain(), std::move(members));
}

Subsemimodule image(const Morphism& f) {
  return Subsemimodule::make(f.codomain(), f.map());
}

Morphism hom_sum(const Morphism& f, const Morphism& g) {
  if (!same_module(f.domain(), g.domain()) || !same_module(f.codomain(), g.codomain())) {
    throw StructureError("hom_sum needs parallel morphisms");
  }
  std::vector<Index> map(f.map().size());
  for (Index m = 0; m < map.size(); ++m) map[m] = f.codomain()->plus(f(m), g(m));
  return Morphism::unchecked(f.domain(), f.codomain(), std::move(map));
}

std::vector<Index> generating_set(const ModulePtr& m) {
  std::vector<Index> gens;
  std::vector<bool> covered(m->size, false);
  covered[0] = true;
  for (Index x = 1; x < m->size; ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    const auto span = generated_by(m, gens);
    for (Index y : span.members()) covered[y] = true;
  }
  return gens;
}

std::vector<Morphism> enumerate_hom(const ModulePtr& m, const ModulePtr& n) {
  if (!same_ring(m->ring, n->ring)) throw StructureError("Hom across different semirings");
  const auto gens = generating_set(m);
  const Index unset = static_cast<Index>(n->size);
  std::vector<Morphism> out;
  std::vector<Index> choice(gens.size(), 0);
  const std::size_t k = m->ring->size;

  // Propagate generator images through sums and the action; fail on conflict.
  auto propagate = [&](std::vector<Index>& map) {
    std::vector<Index> known{0};
    map[0] = 0;
    auto assign = [&](Index x, Index y) {
      if (map[x] == unset) {
        map[x] = y;
        known.push_back(x);
        return true;
      }
      return map[x] == y;
    };
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!assign(gens[g], choice[g])) return false;
    }
    for (std::size_t i = 0; i < known.size(); ++i) {
      Index a = known[i];
      for (Index s = 0; s < k; ++s) {
        if (!assign(m->act(a, s), n->act(map[a], s))) return false;
      }
      for (std::size_t j = 0; j <= i; ++j) {
        Index b = known[j];
        if (!assign(m->plus(a, b), n->plus(map[a], map[b]))) return false;
      }
    }
    return true;
  };

  while (true) {
    std::vector<Index> map(m->size, unset);
    if (propagate(map) && validate_morphism(*m, *n, map).ok()) {
      out.push_back(Morphism::unchecked(m, n, std::move(map)));
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == n->size) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Morphism& a, const Morphism& b) { return a.map() < b.map(); });
  return out;
}

Flag injective(const Morphism& f) {
  const auto n = f.codomain()->size;
  std::vector<Index> seen(n, static_cast<Index>(f.map().size()));
  for (Index m = 0; m < f.map().size(); ++m) {
    Index& slot = seen[f(m)];
    if (slot != f.map().size()) return Flag::no(pair_witness(slot, m));
    slot = m;
  }
  return Flag::yes();
}

Flag surjective(const Morphism& f) {
  std::vector<bool> hit(f.codomain()->size, false);
  for (Index v : f.map()) hit[v] = true;
  for (Index y = 0; y < hit.size(); ++y) {
    if (!hit[y]) return Flag::no(element_witness(y));
  }
  return Flag::yes();
}

Flag cancellative_morphism(const Morphism& f) {
  for (Index m = 0; m < f.map().size(); ++m) {
    if (!is_cancellable(*f.codomain(), f(m))) return Flag::no(element_witness(m));
  }
  return Flag::yes();
}

Flag cancellative_module(const Semimodule& m) {
  if (auto bad = first_non_cancellable(m)) return Flag::no(element_witness(*bad));
  return Flag::yes();
}

}  // namespace semimod
