#include <doctest.h>

#include "oracles.hpp"
#include "semimod/enumerate.hpp"
#include "semimod/fixtures.hpp"

using namespace semimod;

namespace {

Morphism t2_to_b() {
  const auto& fx = fixtures();
  return Morphism::make(fx.t2_monoid, fx.b_monoid, {0, 1, 1}, "f");
}

bool linear(const Semimodule& a, const Semimodule& b, const std::vector<Index>& map) {
  if (map[0] != 0) return false;
  for (Index x = 0; x < a.size; ++x) {
    for (Index y = 0; y < a.size; ++y) {
      if (map[a.add.at(x, y)] != b.add.at(map[x], map[y])) return false;
    }
    for (Index s = 0; s < a.ring->size; ++s) {
      if (map[a.action.at(x, s)] != b.action.at(map[x], s)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("morphism") {
  TEST_CASE("T2 -> B collapsing 1 and 2") {
    const auto f = t2_to_b();
    const auto c = classify(f);
    CHECK_FALSE(c.k_uniform.holds);
    CHECK(c.k_uniform.witness == "pair (1,2)");
    CHECK(c.i_uniform.holds);
    CHECK(c.surjective.holds);
    CHECK(c.semi_mono.holds);
    CHECK_FALSE(c.injective.holds);
  }

  TEST_CASE("construction errors") {
    const auto& fx = fixtures();
    CHECK_THROWS_AS(Morphism::make(fx.t2_monoid, fx.b_monoid, {0, 1}), StructureError);
    CHECK_THROWS_AS(Morphism::make(fx.t2_monoid, fx.b_monoid, {0, 1, 4}), StructureError);
    CHECK_THROWS_AS(Morphism::make(fx.t2_monoid, fx.b_monoid, {1, 1, 1}), AxiomError);
    CHECK_THROWS_AS(Morphism::make(fx.b_monoid, fx.t2_monoid, {0, 1}), AxiomError);
    CHECK_THROWS_AS(Morphism::make(fx.c3, fx.z2_module, {0, 1, 1}), StructureError);
  }

  TEST_CASE("enumerate_hom matches brute force over all maps") {
    const auto universe = enumerate_semimodules({fixtures().t2, 3});
    for (const auto& a : universe.modules) {
      for (const auto& b : universe.modules) {
        std::size_t expected = 0;
        std::vector<Index> map(a->size, 0);
        while (true) {
          expected += linear(*a, *b, map);
          std::size_t i = 0;
          while (i < map.size() && ++map[i] == b->size) map[i++] = 0;
          if (i == map.size()) break;
        }
        const auto homs = enumerate_hom(a, b);
        CHECK(homs.size() == expected);
        CHECK(std::is_sorted(homs.begin(), homs.end(),
                             [](const Morphism& x, const Morphism& y) { return x.map() < y.map(); }));
      }
    }
  }

  TEST_CASE("flags agree with the brute-force oracle") {
    for (const auto& ring : {make_naturals_for_modules(3), fixtures().t2, fixtures().z4}) {
      const auto universe = enumerate_semimodules({ring, 3});
      const HomTable homs(universe.modules, 1);
      for (const auto& f : homs.all()) {
        const auto c = classify(f);
        CHECK(c.injective.holds == oracle::property(Property::injective, f));
        CHECK(c.surjective.holds == oracle::property(Property::surjective, f));
        CHECK(c.k_uniform.holds == oracle::is_k_uniform(f));
        CHECK(c.i_uniform.holds == oracle::is_i_uniform(f));
        CHECK(c.uniform.holds == (oracle::is_k_uniform(f) && oracle::is_i_uniform(f)));
        CHECK(c.semi_mono.holds == oracle::property(Property::semi_mono, f));
        CHECK(c.semi_epi.holds == oracle::property(Property::semi_epi, f));
        CHECK(c.cancellative.holds == oracle::property(Property::cancellative, f));
      }
    }
  }

  TEST_CASE("Hom is a commutative monoid under pointwise sum") {
    const auto c3 = fixtures().c3;
    const auto homs = enumerate_hom(c3, c3);
    for (const auto& f : homs) {
      CHECK(hom_sum(f, zero_morphism(c3, c3)) == f);
      for (const auto& g : homs) CHECK(hom_sum(f, g) == hom_sum(g, f));
    }
  }

  TEST_CASE("compose, kernel, image") {
    const auto f = t2_to_b();
    const auto id = identity(f.domain());
    CHECK(compose(f, id) == f);
    CHECK(kernel(f).is_zero());
    CHECK(image(f).is_whole());
    CHECK(is_zero(compose(zero_morphism(f.codomain(), f.codomain()), f)));
  }

  TEST_CASE("generating sets span") {
    const auto universe = enumerate_semimodules({make_naturals_for_modules(4), 4});
    for (const auto& m : universe.modules) {
      const auto gens = generating_set(m);
      CHECK(generated_by(m, gens).is_whole());
    }
  }
}
