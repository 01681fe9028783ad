#include "semimod/quotient.hpp"

#include <numeric>

namespace semimod {

namespace {

std::vector<Index> canonical_labels(std::span<const Index> labels) {
  std::vector<Index> out(labels.size());
  std::vector<std::pair<Index, Index>> renumber;  // old label -> new id
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Index id = static_cast<Index>(renumber.size());
    for (const auto& [old, assigned] : renumber) {
      if (old == labels[i]) {
        id = assigned;
        break;
      }
    }
    if (id == renumber.size()) renumber.emplace_back(labels[i], id);
    out[i] = id;
  }
  return out;
}

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Congruence::Congruence(ModulePtr module, std::vector<Index> class_of)
    : module_(std::move(module)), class_of_(std::move(class_of)) {
  for (Index m = 0; m < class_of_.size(); ++m) {
    if (class_of_[m] == representatives_.size()) representatives_.push_back(m);
  }
}

std::vector<Index> Congruence::members_of(Index cls) const {
  std::vector<Index> out;
  for (Index m = 0; m < class_of_.size(); ++m) {
    if (class_of_[m] == cls) out.push_back(m);
  }
  return out;
}

ValidationReport validate_congruence(const Semimodule& module, std::span<const Index> labels) {
  if (labels.size() != module.size) throw StructureError("partition size mismatch");
  ValidationReport r;
  const auto n = static_cast<Index>(module.size);
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (labels[a] != labels[b]) continue;
      for (Index c = 0; c < n; ++c) {
        if (labels[module.plus(a, c)] != labels[module.plus(b, c)]) {
          r.violations.push_back({"compatible-add", {a, b, c}, "a~b but a+c !~ b+c"});
        }
      }
      for (Index s = 0; s < module.ring->size; ++s) {
        if (labels[module.act(a, s)] != labels[module.act(b, s)]) {
          r.violations.push_back({"compatible-action", {a, b, s}, "a~b but as !~ bs"});
        }
      }
    }
  }
  return r;
}

Congruence Congruence::make(ModulePtr module, std::span<const Index> labels) {
  auto report = validate_congruence(*module, labels);
  if (!report.ok()) throw AxiomError("congruence on " + module->name, std::move(report));
  return Congruence(std::move(module), canonical_labels(labels));
}

Congruence bourne_congruence(const Subsemimodule& l) {
  const auto& m = *l.parent();
  const auto n = static_cast<Index>(m.size);
  // nodes 0..n-1 are elements, n..2n-1 are sums m + l
  UnionFind uf(2 * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y : l.members()) uf.unite(x, n + m.plus(x, y));
  }
  std::vector<Index> labels(n);
  for (Index x = 0; x < n; ++x) labels[x] = uf.find(x);

  auto related = [&](Index a, Index b) {
    for (Index l1 : l.members()) {
      for (Index l2 : l.members()) {
        if (m.plus(a, l1) == m.plus(b, l2)) return true;
      }
    }
    return false;
  };
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (labels[a] == labels[b] && !related(a, b)) {
        throw InternalError("Bourne relation not transitive at " + pair_witness(a, b));
      }
    }
  }
  auto report = validate_congruence(m, labels);
  if (!report.ok()) throw InternalError("Bourne relation not a congruence: " + report.summary());
  return Congruence::make(l.parent(), labels);
}

Congruence kernel_pair_congruence(const Morphism& f) {
  return Congruence::make(f.domain(), f.map());
}

QuotientModule quotient(const Congruence& rho, std::string name) {
  const auto& m = *rho.module();
  const std::size_t q = rho.class_count();
  const std::size_t k = m.ring->size;
  const auto& reps = rho.representatives();
  std::vector<Index> add(q * q);
  std::vector<Index> act(q * k);
  for (Index a = 0; a < q; ++a) {
    for (Index b = 0; b < q; ++b) add[a * q + b] = rho.class_of(m.plus(reps[a], reps[b]));
    for (Index s = 0; s < k; ++s) act[a * k + s] = rho.class_of(m.act(reps[a], s));
  }
  for (Index x = 0; x < m.size; ++x) {
    for (Index y = 0; y < m.size; ++y) {
      if (rho.class_of(m.plus(x, y)) != add[rho.class_of(x) * q + rho.class_of(y)]) {
        throw InternalError("quotient addition depends on representatives");
      }
    }
    for (Index s = 0; s < k; ++s) {
      if (rho.class_of(m.act(x, s)) != act[rho.class_of(x) * k + s]) {
        throw InternalError("quotient action depends on representatives");
      }
    }
  }
  Semimodule out;
  out.name = name.empty() ? m.name + "/~" : std::move(name);
  out.ring = m.ring;
  out.size = q;
  out.add = Table(q, q, std::move(add));
  out.action = Table(q, k, std::move(act));
  auto qm = make_semimodule(std::move(out));
  auto projection = Morphism::unchecked(rho.module(), qm, rho.classes(), "pi");
  auto ker = kernel(projection);
  return QuotientModule{rho.module(), rho, qm, std::move(projection), std::move(ker)};
}

QuotientModule quotient(const Subsemimodule& l, std::string name) {
  if (name.empty()) name = l.parent()->name + "/" + format_elements(l.members());
  return quotient(bourne_congruence(l), std::move(name));
}

bool projection_kernel_is_closure(const Subsemimodule& l) {
  return quotient(l).projection_kernel == subtractive_closure(l);
}

QuotientModule coimage(const Morphism& f) {
  return quotient(kernel_pair_congruence(f), "Coim(" + f.name() + ")");
}

QuotientModule cokernel(const Morphism& f) {
  return quotient(image(f), "Coker(" + f.name() + ")");
}

std::optional<Morphism> descend(const QuotientModule& q, const Morphism& f) {
  if (!same_module(q.base, f.domain())) throw StructureError("descend: domain mismatch");
  std::vector<Index> map(q.quotient->size);
  const auto& reps = q.congruence.representatives();
  for (Index c = 0; c < map.size(); ++c) map[c] = f(reps[c]);
  for (Index x = 0; x < q.base->size; ++x) {
    if (f(x) != map[q.congruence.class_of(x)]) return std::nullopt;
  }
  return Morphism::unchecked(q.quotient, f.codomain(), std::move(map));
}

Morphism canonical_iso(const Morphism& f) {
  auto q = coimage(f);
  auto im = image(f);
  auto target = as_module(im, "Im(" + f.name() + ")");
  auto d = descend(q, f);
  if (!d) throw InternalError("coimage map not well defined");
  auto iso = corestrict(*d, im, target).named("d");
  if (!injective(iso) || !surjective(iso) ||
      !validate_morphism(*iso.domain(), *iso.codomain(), iso.map()).ok()) {
    throw InternalError("canonical map Coim -> Im is not an isomorphism");
  }
  return iso;
}

Morphism induced_to_kernel(const Morphism& f, const Morphism& g) {
  if (!same_module(f.codomain(), g.domain())) throw StructureError("f and g do not compose");
  if (!is_zero(compose(g, f))) throw PreconditionError("g o f is not zero");
  auto ker = kernel(g);
  return corestrict(f, ker, as_module(ker, "Ker(" + g.name() + ")")).named("f'");
}

Morphism induced_from_cokernel(const Morphism& f, const Morphism& g) {
  if (!same_module(f.codomain(), g.domain())) throw StructureError("f and g do not compose");
  if (!is_zero(compose(g, f))) throw PreconditionError("g o f is not zero");
  auto d = descend(cokernel(f), g);
  if (!d) throw InternalError("g not constant on cokernel classes");
  return d->named("g''");
}

}  // namespace semimod
