#include <doctest.h>

#include "oracles.hpp"
#include "semimod/enumerate.hpp"
#include "semimod/fixtures.hpp"

using namespace semimod;

TEST_SUITE("quotient") {
  TEST_CASE("Bourne quotient of T2 by {0,2}") {
    const auto t2 = fixtures().t2_monoid;
    const auto l = Subsemimodule::make(t2, {0, 2});
    const auto q = quotient(l);
    CHECK(q.quotient->size == 1);
    CHECK(q.projection_kernel.is_whole());
    CHECK(projection_kernel_is_closure(l));
  }

  TEST_CASE("incompatible labelings are rejected") {
    const auto c3 = fixtures().c3;
    const std::vector<Index> bad{0, 1, 0};  // 1 ~ 0 is fine, 2 ~ 0 is not with 1
    CHECK_FALSE(validate_congruence(*c3, bad).ok());
    CHECK_THROWS_AS(Congruence::make(c3, bad), AxiomError);
    const std::vector<Index> good{0, 0, 1};
    const auto rho = Congruence::make(c3, good);
    CHECK(rho.class_count() == 2);
    CHECK(rho.representatives() == std::vector<Index>{0, 2});
  }

  TEST_CASE("projection kernel is the subtractive closure on every small module") {
    const auto universe = enumerate_semimodules({make_naturals_for_modules(4), 4});
    for (const auto& m : universe.modules) {
      for (const auto& l : enumerate_subsemimodules(m)) {
        const auto q = quotient(l);
        CHECK(q.projection_kernel == subtractive_closure(l));
        CHECK(oracle::module_ok(*q.quotient));
        const oracle::Set members(l.members().begin(), l.members().end());
        const auto expected = oracle::closure(*m, members);
        CHECK(oracle::kernel_of(q.projection) == expected);
      }
    }
  }

  TEST_CASE("a subset and its closure give the same Bourne congruence") {
    const auto universe = enumerate_semimodules({make_naturals_for_modules(4), 4});
    for (const auto& m : universe.modules) {
      for (const auto& l : enumerate_subsemimodules(m)) {
        CHECK(bourne_congruence(l) == bourne_congruence(subtractive_closure(l)));
      }
    }
  }

  TEST_CASE("kernels are subtractive") {
    for (const auto& ring : {make_naturals_for_modules(4), fixtures().t2}) {
      const auto universe = enumerate_semimodules({ring, 4});
      const HomTable homs(universe.modules, 1);
      for (const auto& f : homs.all()) CHECK(is_subtractive(kernel(f)));
    }
  }

  TEST_CASE("canonical isomorphism Coim(f) -> Im(f)") {
    const auto universe = enumerate_semimodules({fixtures().t2, 3});
    const HomTable homs(universe.modules, 1);
    for (const auto& f : homs.all()) {
      const auto d = canonical_iso(f);
      CHECK(injective(d));
      CHECK(surjective(d));
      CHECK(coimage(f).quotient->size == image(f).size());
    }
  }

  TEST_CASE("cokernel of the zero map is the codomain") {
    const auto c3 = fixtures().c3;
    const auto z = zero_morphism(zero_module(c3->ring), c3);
    CHECK(cokernel(z).quotient->size == 3);
    CHECK(cokernel(identity(c3)).quotient->size == 1);
  }

  TEST_CASE("induced maps need a complex") {
    const auto c3 = fixtures().c3;
    CHECK_THROWS_AS(induced_to_kernel(identity(c3), identity(c3)), PreconditionError);
    const auto z = zero_morphism(c3, c3);
    CHECK(induced_to_kernel(identity(c3), z).codomain()->size == 3);
    CHECK(induced_from_cokernel(z, identity(c3)).domain()->size == 3);
  }
}
