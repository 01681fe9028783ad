#include "semimod/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "semimod/fixtures.hpp"

namespace semimod {

namespace {

const std::vector<PropertyInfo> kProperties = {
    {"bimorphism-not-iso", "a monomorphism that is an epimorphism is an isomorphism", true},
    {"finite-cancellative-nonsurjective-epi",
     "an epimorphism between cancellative modules is surjective", false},
    {"five-lemma-1-without-cancellative",
     "Five Lemma clause 1 holds without M1, M2 cancellative", true},
    {"ker-coker-exact-without-uniform",
     "0 -> Ker -> X -> Y -> Coker -> 0 is exact for every morphism", true},
    {"lemma-diagram-3-without-i-uniform",
     "alpha1, alpha3, g1 surjective force alpha2 surjective", true},
    {"mono-not-injective", "every monomorphism is injective", false},
    {"non-subtractive-subsemimodule", "every subsemimodule is subtractive", true},
    {"semi-mono-not-mono", "a morphism with zero kernel is a monomorphism", true},
    {"short-five-converse", "alpha2 iso forces alpha1 and alpha3 iso between short exact rows",
     true},
    {"snake-without-alpha2-i-uniform",
     "the snake clauses hold when alpha2 is only k-uniform", true},
};

std::string universe_text(const UniverseSpec& spec) {
  return spec.semiring->name + " modules of size <= " + std::to_string(spec.max_module_size);
}

bool is_module_property(const std::string& id) {
  return id == "bimorphism-not-iso" || id == "finite-cancellative-nonsurjective-epi" ||
         id == "ker-coker-exact-without-uniform" || id == "mono-not-injective" ||
         id == "semi-mono-not-mono";
}

// Test objects for brute-force mono and epi checks: the given modules plus
// the regular module, which detects non-injective maps.
HomTable test_table(std::vector<ModulePtr> modules, const SemiringPtr& ring) {
  modules.push_back(regular_module(ring, "S"));
  return HomTable(std::move(modules));
}

std::vector<ModulePtr> cancellative_only(const std::vector<ModulePtr>& modules) {
  std::vector<ModulePtr> out;
  for (const auto& m : modules) {
    if (is_cancellative_module(*m)) out.push_back(m);
  }
  return out;
}

bool ker_coker_exact(const Morphism& f) {
  return analyze(ker_coker_sequence(f).five_term).exact();
}

// Failure test for module properties; `tests` holds the test objects.
Flag module_failure(const std::string& id, const Morphism& f, const HomTable& tests) {
  if (id == "semi-mono-not-mono") {
    if (!semi_mono(f)) return Flag::no("kernel not zero");
    auto mono = monomorphism_bruteforce(f, tests);
    return mono ? Flag::no("monomorphism") : Flag::yes();
  }
  if (id == "mono-not-injective") {
    if (injective(f)) return Flag::no("injective");
    return monomorphism_bruteforce(f, tests) ? Flag::yes() : Flag::no("not a monomorphism");
  }
  if (id == "finite-cancellative-nonsurjective-epi") {
    if (!is_cancellative_module(*f.domain()) || !is_cancellative_module(*f.codomain())) {
      return Flag::no("not cancellative");
    }
    if (surjective(f)) return Flag::no("surjective");
    return epimorphism_bruteforce(f, tests) ? Flag::yes() : Flag::no("not an epimorphism");
  }
  if (id == "bimorphism-not-iso") {
    if (isomorphism(f)) return Flag::no("isomorphism");
    if (!monomorphism_bruteforce(f, tests)) return Flag::no("not a monomorphism");
    return epimorphism_bruteforce(f, tests) ? Flag::yes() : Flag::no("not an epimorphism");
  }
  if (id == "ker-coker-exact-without-uniform") {
    return ker_coker_exact(f) ? Flag::no("sequence exact") : Flag::yes();
  }
  throw ParameterError("not a module property: " + id);
}

struct DiagramProperty {
  Shape shape;
  std::vector<Claim> hypotheses;
  std::vector<Claim> conclusions;
  bool snake_weak = false;
};

std::vector<Claim> without(std::vector<Claim> claims, std::initializer_list<const char*> texts) {
  std::erase_if(claims, [&](const Claim& c) {
    return std::any_of(texts.begin(), texts.end(), [&](const char* t) { return c.text == t; });
  });
  return claims;
}

DiagramProperty diagram_property(const std::string& id) {
  if (id == "short-five-converse") {
    auto hyps = without(find_lemma("short-five").hypotheses, {"alpha1 isomorphism", "alpha3 isomorphism"});
    hyps.push_back(Claim::arrow_has("alpha2", Property::isomorphism));
    return {Shape::ladder3,
            hyps,
            {Claim::arrow_has("alpha1", Property::isomorphism),
             Claim::arrow_has("alpha3", Property::isomorphism)}};
  }
  if (id == "lemma-diagram-3-without-i-uniform") {
    const auto& l = find_lemma("diagram:3s");
    return {Shape::ladder3, without(l.hypotheses, {"alpha2 i-uniform"}), l.conclusions};
  }
  if (id == "five-lemma-1-without-cancellative") {
    const auto& l = find_lemma("five:1");
    return {Shape::ladder5, without(l.hypotheses, {"M1 cancellative", "M2 cancellative"}),
            l.conclusions};
  }
  if (id == "snake-without-alpha2-i-uniform") {
    auto hyps = without(find_lemma("snake").hypotheses, {"alpha2 uniform"});
    hyps.push_back(Claim::arrow_has("alpha2", Property::k_uniform));
    hyps.push_back(Claim::negation(Claim::arrow_has("alpha2", Property::i_uniform)));
    return {Shape::ladder3, hyps, {}, true};
  }
  throw ParameterError("not a diagram property: " + id);
}

Flag diagram_failure(const DiagramProperty& p, const Diagram& d) {
  for (const auto& sq : squares(p.shape)) {
    if (auto f = commutes(d, sq); !f) return Flag::no("square " + sq.top + "/" + sq.right);
  }
  for (const auto& h : p.hypotheses) {
    if (auto f = evaluate(h, d); !f) return Flag::no("hypothesis " + h.text + " fails");
  }
  if (p.snake_weak) {
    SnakeOptions o;
    o.weak_alpha2 = true;
    auto r = snake(d, o);
    if (r.verdict == Verdict::refuted) return Flag::yes();
    return Flag::no("snake " + to_string(r.verdict));
  }
  for (const auto& c : p.conclusions) {
    if (!evaluate(c, d)) return Flag::yes();
  }
  return Flag::no("conclusions hold");
}

Counterexample morphism_counterexample(const std::string& id, const Morphism& f, bool minimal) {
  Counterexample c;
  c.property = id;
  c.modules = {f.domain(), f.codomain()};
  c.morphisms = {f};
  c.minimal = minimal;
  c.description = "f: " + f.domain()->name + " -> " + f.codomain()->name + " map " +
                  format_elements(f.map());
  return c;
}

SearchResult search_modules(const std::string& id, const UniverseSpec& spec) {
  const auto universe = enumerate_semimodules(spec);
  const auto& mods = universe.modules;
  const bool cancellative = id == "finite-cancellative-nonsurjective-epi";
  const auto candidates = cancellative ? cancellative_only(mods) : mods;
  const HomTable homs(candidates);
  const HomTable tests = cancellative ? HomTable(candidates) : test_table(mods, spec.semiring);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) pairs.emplace_back(i, j);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
    return std::max(candidates[a.first]->size, candidates[a.second]->size) <
           std::max(candidates[b.first]->size, candidates[b.second]->size);
  });
  std::size_t checked = 0;
  for (auto [i, j] : pairs) {
    for (const auto& f : homs.hom(i, j)) {
      ++checked;
      if (module_failure(id, f, tests)) {
        return {morphism_counterexample(id, f.named("f"), true), std::nullopt};
      }
    }
  }
  return {std::nullopt,
          ExhaustionReport{id, universe_text(spec) + (cancellative ? ", cancellative" : ""),
                           checked, !universe.truncated}};
}

SearchResult search_subsemimodules(const UniverseSpec& spec) {
  const auto universe = enumerate_semimodules(spec);
  std::size_t checked = 0;
  for (const auto& m : universe.modules) {
    for (const auto& sub : enumerate_subsemimodules(m)) {
      ++checked;
      if (!is_subtractive(sub)) {
        Counterexample c;
        c.property = "non-subtractive-subsemimodule";
        c.modules = {m};
        c.sub = sub;
        c.minimal = true;
        c.description = format_elements(sub.members()) + " <= " + m->name + ", closure " +
                        format_elements(subtractive_closure(sub).members());
        return {c, std::nullopt};
      }
    }
  }
  return {std::nullopt, ExhaustionReport{"non-subtractive-subsemimodule", universe_text(spec),
                                         checked, !universe.truncated}};
}

SearchResult search_diagrams(const std::string& id, const UniverseSpec& spec,
                             const SearchLimits& limits) {
  const auto property = diagram_property(id);
  const auto universe = enumerate_semimodules(spec);
  std::vector<Claim> constraints = property.hypotheses;
  if (!property.snake_weak) {
    constraints.push_back(Claim::negation(Claim::all(property.conclusions)));
  }
  std::function<bool(const Diagram&)> accept;
  if (property.snake_weak) {
    accept = [&](const Diagram& d) { return bool(diagram_failure(property, d)); };
  }
  std::size_t nodes = 0;
  bool complete = !universe.truncated;
  for (std::size_t k = 1; k <= spec.max_module_size; ++k) {
    std::vector<ModulePtr> prefix;
    for (const auto& m : universe.modules) {
      if (m->size <= k) prefix.push_back(m);
    }
    auto outcome = search_diagram(property.shape, constraints,
                                  make_pool(spec.semiring->name, prefix), limits.node_budget, accept);
    nodes += outcome.nodes;
    if (outcome.diagram) {
      Counterexample c;
      c.property = id;
      c.diagram = outcome.diagram;
      c.diagram->name = id;
      c.minimal = complete;
      for (const auto& [role, m] : c.diagram->objects) c.modules.push_back(m);
      for (const auto& [role, f] : c.diagram->arrows) c.morphisms.push_back(f);
      std::ostringstream text;
      text << to_string(property.shape) << " over " << spec.semiring->name << ":";
      for (const auto& [role, m] : c.diagram->objects) text << " " << role << "=" << m->name;
      c.description = text.str();
      return {c, std::nullopt};
    }
    complete = complete && outcome.complete;
  }
  return {std::nullopt, ExhaustionReport{id, universe_text(spec), nodes, complete}};
}

}  // namespace

const std::vector<PropertyInfo>& property_catalog() { return kProperties; }

const PropertyInfo& find_property(const std::string& id) {
  for (const auto& p : kProperties) {
    if (p.id == id) return p;
  }
  throw ParameterError("unknown property " + id);
}

SearchResult search_counterexample(const std::string& property_id, const UniverseSpec& spec,
                                   const SearchLimits& limits) {
  find_property(property_id);
  if (!spec.semiring) throw ParameterError("search needs a semiring");
  if (property_id == "non-subtractive-subsemimodule") return search_subsemimodules(spec);
  if (is_module_property(property_id)) return search_modules(property_id, spec);
  return search_diagrams(property_id, spec, limits);
}

Flag replay(const Counterexample& c) {
  find_property(c.property);
  if (c.property == "non-subtractive-subsemimodule") {
    if (!c.sub) return Flag::no("no subsemimodule stored");
    return is_subtractive(*c.sub) ? Flag::no("subtractive") : Flag::yes();
  }
  if (is_module_property(c.property)) {
    if (c.morphisms.size() != 1) return Flag::no("expected one morphism");
    const auto& f = c.morphisms.front();
    std::vector<ModulePtr> objects = c.modules;
    if (c.property == "finite-cancellative-nonsurjective-epi") {
      return module_failure(c.property, f, HomTable(cancellative_only(objects)));
    }
    return module_failure(c.property, f, test_table(objects, f.domain()->ring));
  }
  if (!c.diagram) return Flag::no("no diagram stored");
  return diagram_failure(diagram_property(c.property), *c.diagram);
}

std::vector<Counterexample> stored_counterexamples() {
  const auto& fx = fixtures();
  std::vector<Counterexample> out;

  Counterexample sub;
  sub.property = "non-subtractive-subsemimodule";
  sub.modules = {fx.t2_monoid};
  sub.sub = Subsemimodule::make(fx.t2_monoid, {0, 2});
  sub.minimal = true;
  sub.description = "{0,2} <= T2, closure {0,1,2}";
  out.push_back(sub);

  out.push_back(morphism_counterexample(
      "semi-mono-not-mono",
      Morphism::make(fx.t2_monoid, fx.b_monoid, {0, 1, 1}, "f"), true));

  // 0 -> 0 -> Z2 -> Z2 -> 0 over 0 -> Z2 -> Z2 -> 0 -> 0 with alpha2 = id.
  const auto z2 = fx.z2_module;
  const auto zero = zero_module(fx.z2);
  const auto id = identity(z2);
  Counterexample sf;
  sf.property = "short-five-converse";
  sf.diagram = Diagram::from_arrows(Shape::ladder3,
                                    {{"f1", zero_morphism(zero, z2)},
                                     {"g1", id},
                                     {"f2", id},
                                     {"g2", zero_morphism(z2, zero)},
                                     {"alpha1", zero_morphism(zero, z2)},
                                     {"alpha2", id},
                                     {"alpha3", zero_morphism(z2, zero)}},
                                    "short-five-converse");
  sf.modules = {zero, z2};
  sf.morphisms = {id};
  sf.minimal = true;
  sf.description = "rows 0 -> 0 -> Z2 -> Z2 -> 0 and 0 -> Z2 -> Z2 -> 0 -> 0, alpha2 = id";
  out.push_back(sf);
  return out;
}

std::string describe(const Counterexample& c) {
  std::ostringstream out;
  out << "counterexample " << c.property << (c.minimal ? " (minimal)" : "") << "\n";
  out << "  " << c.description << "\n";
  if (c.diagram) {
    for (const auto& [role, f] : c.diagram->arrows) {
      out << "  " << role << ": " << f.domain()->name << " -> " << f.codomain()->name << " "
          << format_elements(f.map()) << "\n";
    }
  }
  return out.str();
}

std::string describe(const ExhaustionReport& r) {
  std::ostringstream out;
  out << "exhausted " << r.property << " over " << r.universe << ": " << r.candidates
      << " candidates, " << (r.complete ? "complete" : "budget reached") << "\n";
  return out.str();
}

}  // namespace semimod
