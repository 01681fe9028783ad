#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semimod/enumerate.hpp"
#include "semimod/fixtures.hpp"

using namespace semimod;

TEST_SUITE("enumerate") {
  TEST_CASE("commutative monoid counts agree with brute force") {
    for (std::size_t n = 1; n <= 4; ++n) {
      CAPTURE(n);
      CHECK(enumerate_commutative_monoids(n).size() == oracle::count_commutative_monoids(n));
    }
    // frozen from the brute-force count above
    CHECK(enumerate_commutative_monoids(4).size() == 19);
    CHECK(enumerate_commutative_monoids(5).size() == 78);
  }

  TEST_CASE("universe sizes") {
    const auto& fx = fixtures();
    CHECK(enumerate_semimodules({fx.boolean, 4}).modules.size() == 5);
    CHECK(enumerate_semimodules({fx.z2, 4}).modules.size() == 3);
    CHECK(enumerate_semimodules({fx.z4, 4}).modules.size() == 4);
    CHECK(enumerate_semimodules({fx.t2, 4}).modules.size() == 10);
    CHECK(enumerate_semimodules({make_naturals_for_modules(4), 4}).modules.size() == 27);
    CHECK(enumerate_semimodules({make_truncated_minplus(2), 4}).modules.size() == 24);
    const auto capped = enumerate_semimodules({fx.t2, 4, 3});
    CHECK(capped.modules.size() == 3);
    CHECK(capped.truncated);
  }

  TEST_CASE("enumerated modules are valid and pairwise non-isomorphic") {
    const auto universe = enumerate_semimodules({fixtures().t2, 4});
    for (std::size_t i = 0; i < universe.modules.size(); ++i) {
      CHECK(oracle::module_ok(*universe.modules[i]));
      for (std::size_t j = 0; j < i; ++j) {
        CHECK_FALSE(oracle_iso_exists(universe.modules[i], universe.modules[j]));
      }
    }
  }

  TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(5);
    const auto universe = enumerate_semimodules({make_naturals_for_modules(4), 4});
    for (const auto& m : universe.modules) {
      std::vector<Index> perm(m->size);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin() + 1, perm.end(), rng);
      Semimodule p = *m;
      std::vector<Index> add(m->size * m->size), act(m->size * m->ring->size);
      for (Index a = 0; a < m->size; ++a) {
        for (Index b = 0; b < m->size; ++b) add[perm[a] * m->size + perm[b]] = perm[m->plus(a, b)];
        for (Index s = 0; s < m->ring->size; ++s) act[perm[a] * m->ring->size + s] = perm[m->act(a, s)];
      }
      p.add = Table(m->size, m->size, add);
      p.action = Table(m->size, m->ring->size, act);
      const auto q = make_semimodule(p);
      CHECK(canonical_form(*q) == canonical_form(*m));
      const auto iso = oracle_iso_exists(m, q);
      CHECK(iso);
    }
  }

  TEST_CASE("natural indexing") {
    CHECK(has_natural_indexing(*fixtures().t2));
    CHECK(has_natural_indexing(*fixtures().z4));
    CHECK(has_natural_indexing(*make_naturals_for_modules(3)));
    CHECK_FALSE(has_natural_indexing(*make_truncated_minplus(2)));
  }

  TEST_CASE("monomorphisms are exactly the injective maps") {
    const auto universe = enumerate_semimodules({make_naturals_for_modules(3), 3});
    const HomTable homs(universe.modules, 1);
    for (const auto& f : homs.all()) {
      CHECK(monomorphism_bruteforce(f, homs).holds == injective(f).holds);
      CHECK(regular_epimorphism(f).holds == surjective(f).holds);
    }
  }
}
