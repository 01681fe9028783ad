#include "semimod/exactness.hpp"

#include <algorithm>

namespace semimod {

namespace {

Flag same_set(const Subsemimodule& a, const Subsemimodule& b) {
  for (Index m : a.members()) {
    if (!b.contains(m)) return Flag::no(element_witness(m));
  }
  for (Index m : b.members()) {
    if (!a.contains(m)) return Flag::no(element_witness(m));
  }
  return Flag::yes();
}

void require_composable(const Morphism& f, const Morphism& g) {
  if (!same_module(f.codomain(), g.domain())) {
    throw StructureError("arrows " + f.name() + " and " + g.name() + " do not compose");
  }
}

bool all_of(const std::vector<PositionVerdict>& ps, Flag PositionVerdict::*field) {
  return std::all_of(ps.begin(), ps.end(), [&](const auto& p) { return (p.*field).holds; });
}

}  // namespace

Sequence Sequence::make(std::vector<Morphism> arrows, std::string name) {
  if (arrows.empty()) throw StructureError("sequence needs at least one arrow");
  Sequence s;
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) require_composable(arrows[i], arrows[i + 1]);
  for (const auto& a : arrows) s.objects_.push_back(a.domain());
  s.objects_.push_back(arrows.back().codomain());
  s.arrows_ = std::move(arrows);
  s.name_ = std::move(name);
  return s;
}

bool ExactnessVerdict::exact() const { return all_of(positions, &PositionVerdict::exact); }
bool ExactnessVerdict::proper_exact() const {
  return all_of(positions, &PositionVerdict::proper_exact);
}
bool ExactnessVerdict::semi_exact() const {
  return all_of(positions, &PositionVerdict::semi_exact);
}
bool ExactnessVerdict::chain_complex() const {
  return all_of(positions, &PositionVerdict::chain_complex);
}

Flag chain_complex_at(const Morphism& f, const Morphism& g) {
  require_composable(f, g);
  for (Index l = 0; l < f.map().size(); ++l) {
    if (g(f(l)) != 0) return Flag::no(element_witness(l));
  }
  return Flag::yes();
}

Flag proper_exact_at(const Morphism& f, const Morphism& g) {
  require_composable(f, g);
  return same_set(image(f), kernel(g));
}

Flag semi_exact_at(const Morphism& f, const Morphism& g) {
  require_composable(f, g);
  return same_set(subtractive_closure(image(f)), kernel(g));
}

Flag exact_at(const Morphism& f, const Morphism& g) {
  if (auto p = proper_exact_at(f, g); !p) return p;
  return k_uniform(g);
}

ExactnessVerdict analyze(const Sequence& seq) {
  ExactnessVerdict v;
  const auto& arrows = seq.arrows();
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    const auto& f = arrows[i];
    const auto& g = arrows[i + 1];
    PositionVerdict p;
    p.object = i + 1;
    p.chain_complex = chain_complex_at(f, g);
    p.proper_exact = proper_exact_at(f, g);
    p.semi_exact = semi_exact_at(f, g);
    p.exact = p.proper_exact ? k_uniform(g) : p.proper_exact;
    v.positions.push_back(std::move(p));
  }
  for (const auto& a : arrows) {
    ArrowVerdict av{k_uniform(a), i_uniform(a), {}};
    av.uniform = av.k_uniform ? av.i_uniform : av.k_uniform;
    v.arrows.push_back(std::move(av));
  }
  return v;
}

Sequence short_sequence(const Morphism& f, const Morphism& g, std::string name) {
  const auto zero = zero_module(f.domain()->ring);
  return Sequence::make({zero_morphism(zero, f.domain()), f, g, zero_morphism(g.codomain(), zero)},
                        std::move(name));
}

ShortExactVerdict is_short_exact(const Sequence& seq) {
  const auto& obj = seq.objects();
  if (seq.arrows().size() != 4 || obj.front()->size != 1 || obj.back()->size != 1) {
    throw StructureError("short exact check needs 0 -> L -> M -> N -> 0");
  }
  const auto& f = seq.arrows()[1];
  const auto& g = seq.arrows()[2];
  ShortExactVerdict v;
  if (auto x = injective(f); !x) {
    v.diagnosis = "f not injective: " + x.witness;
  } else if (auto y = proper_exact_at(f, g); !y) {
    v.diagnosis = "f(L) != Ker(g): " + y.witness;
  } else if (auto z = surjective(g); !z) {
    v.diagnosis = "g not surjective: " + z.witness;
  } else if (auto w = k_uniform(g); !w) {
    v.diagnosis = "g not k-uniform: " + w.witness;
  } else {
    v.holds = true;
  }
  if (is_zero(compose(g, f))) {
    v.canonical_isos =
        isomorphism(induced_to_kernel(f, g)).holds && isomorphism(induced_from_cokernel(f, g)).holds;
  }
  return v;
}

KerCokerSequences ker_coker_sequence(const Morphism& f) {
  const auto zero = zero_module(f.domain()->ring);
  const auto ker = kernel(f);
  const auto ker_module = as_module(ker, "Ker(" + f.name() + ")");
  const auto ker_incl = inclusion(ker, ker_module).named("ker");
  const auto coker = cokernel(f);
  const auto coker_proj = coker.projection.named("coker");

  auto five = Sequence::make({zero_morphism(zero, ker_module), ker_incl, f, coker_proj,
                              zero_morphism(coker.quotient, zero)},
                             "ker-coker(" + f.name() + ")");
  auto verdict = analyze(five);

  const auto closure = subtractive_closure(image(f));
  const auto closure_module = as_module(closure, "cl(Im)");
  auto closure_seq = short_sequence(inclusion(closure, closure_module), coker_proj);

  const auto kq = quotient(ker);
  auto kernel_seq = short_sequence(ker_incl, kq.projection);
  return {std::move(five), std::move(verdict), std::move(closure_seq), std::move(kernel_seq)};
}

SubobjectCharacter subobject_character(const Subsemimodule& l) {
  SubobjectCharacter c;
  const auto q = quotient(l);
  const auto l_module = as_module(l);
  const auto iota = inclusion(l, l_module);
  const auto seq = short_sequence(iota, q.projection);
  const auto verdict = analyze(seq);
  c.semi_exact = verdict.semi_exact();
  c.exact = verdict.exact();

  const auto closure = subtractive_closure(l);
  const auto closure_module = as_module(closure);
  c.closure_exact = analyze(short_sequence(inclusion(closure, closure_module), q.projection)).exact();

  c.iso_to_kernel = isomorphism(induced_to_kernel(iota, q.projection)).holds;

  // 0 -> L -> closure(L) -> 0
  const auto zero = zero_module(l.parent()->ring);
  std::vector<Index> into_closure(l.size());
  for (Index i = 0; i < l.size(); ++i) into_closure[i] = closure.local_index(l.members()[i]);
  const auto j = Morphism::unchecked(l_module, closure_module, std::move(into_closure), "j");
  c.closure_sequence_exact =
      analyze(Sequence::make({zero_morphism(zero, l_module), j, zero_morphism(closure_module, zero)}))
          .exact();

  c.uniform = uniform(iota).holds;
  c.normal = q.projection_kernel == l;
  return c;
}

}  // namespace semimod
