#include <doctest.h>

#include "oracles.hpp"
#include "semimod/enumerate.hpp"
#include "semimod/fixtures.hpp"

using namespace semimod;

namespace {

std::vector<SemiringPtr> builder_semirings() {
  const auto& fx = fixtures();
  return {fx.boolean,
          fx.z2,
          fx.z4,
          fx.t2,
          fx.t3,
          make_truncated_minplus(1),
          make_truncated_minplus(2),
          make_truncated_minplus(3),
          make_product(fx.boolean, fx.z2),
          make_product(fx.t2, fx.boolean),
          make_cyclic_naturals(2, 2)};
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("builder semirings and modules validate") {
    for (const auto& s : builder_semirings()) {
      CAPTURE(s->name);
      CHECK(validate_semiring(*s).ok());
      CHECK(oracle::semiring_ok(*s));
      CHECK(validate_semimodule(*regular_module(s)).ok());
    }
    const auto& fx = fixtures();
    for (const auto& m : {fx.c3, fx.t2_monoid, fx.b_monoid, fx.z2_module}) {
      CHECK(validate_semimodule(*m).ok());
      CHECK(oracle::module_ok(*m));
    }
  }

  TEST_CASE("single-cell mutations agree with the brute-force checker") {
    std::size_t rejected = 0;
    for (const auto& s : builder_semirings()) {
      if (s->size > 5) continue;
      for (int which = 0; which < 2; ++which) {
        for (Index r = 0; r < s->size; ++r) {
          for (Index c = 0; c < s->size; ++c) {
            for (Index v = 0; v < s->size; ++v) {
              Semiring m = *s;
              auto& t = which == 0 ? m.add : m.mul;
              if (t.at(r, c) == v) continue;
              t = t.with_cell(r, c, v);
              const auto report = validate_semiring(m);
              CAPTURE(s->name);
              CAPTURE(which);
              CAPTURE(r);
              CAPTURE(c);
              CHECK(report.ok() == oracle::semiring_ok(m));
              if (report.ok()) continue;
              ++rejected;
              for (const auto& viol : report.violations) {
                CAPTURE(viol.axiom);
                CHECK_FALSE(viol.witness.empty());
                CHECK(oracle::semiring_witness_holds(m, viol.axiom, viol.witness));
              }
            }
          }
        }
      }
    }
    CHECK(rejected >= 20);
  }

  TEST_CASE("validation lists every violation") {
    Semiring s = *fixtures().boolean;
    s.add = s.add.with_cell(1, 0, 0);  // breaks identity and commutativity
    const auto report = validate_semiring(s);
    CHECK(report.has("add-identity"));
    CHECK(report.has("add-commutative"));
    CHECK(report.violations.size() >= 2);
    CHECK_THROWS_AS(make_semiring(s), AxiomError);
  }

  TEST_CASE("non-total tables are structure errors") {
    Semiring s = *fixtures().boolean;
    s.add = s.add.with_cell(1, 1, 7);
    CHECK_THROWS_AS(validate_semiring(s), StructureError);
    s = *fixtures().boolean;
    s.mul = Table(1, 2, {0, 0});
    CHECK_THROWS_AS(validate_semiring(s), StructureError);
  }

  TEST_CASE("module mutations are caught") {
    const auto& c3 = *fixtures().c3;
    std::size_t caught = 0;
    for (Index r = 0; r < c3.size; ++r) {
      for (Index c = 0; c < c3.ring->size; ++c) {
        for (Index v = 0; v < c3.size; ++v) {
          Semimodule m = c3;
          if (m.action.at(r, c) == v) continue;
          m.action = m.action.with_cell(r, c, v);
          const bool ok = validate_semimodule(m).ok();
          CHECK(ok == oracle::module_ok(m));
          caught += !ok;
        }
      }
    }
    CHECK(caught > 0);
  }

  TEST_CASE("cancellation") {
    const auto& fx = fixtures();
    CHECK(is_cancellative_module(*fx.z2_module));
    CHECK_FALSE(is_cancellative_module(*fx.c3));
    CHECK(first_non_cancellable(*fx.c3) == Index{1});
    const auto fail = cancellation_failure(*fx.t2_monoid, 2);
    REQUIRE(fail);
    CHECK(fx.t2_monoid->plus(2, fail->first) == fx.t2_monoid->plus(2, fail->second));
    CHECK(is_cancellable(*fx.t2_monoid, 0));
  }

  TEST_CASE("subsemimodules and subtractive closure") {
    const auto t2 = fixtures().t2_monoid;
    const auto l = Subsemimodule::make(t2, {2, 0});
    CHECK(l.members() == std::vector<Index>{0, 2});
    CHECK_FALSE(is_subtractive(l));
    CHECK(subtractive_closure(l).is_whole());
    CHECK_THROWS_AS(Subsemimodule::make(t2, {0, 1}), AxiomError);
    CHECK_THROWS_AS(Subsemimodule::make(t2, {1, 2}), AxiomError);
    CHECK_THROWS_AS(Subsemimodule::make(t2, {0, 5}), StructureError);
    CHECK(generated_by(t2, std::vector<Index>{1}).is_whole());
    CHECK(enumerate_subsemimodules(t2).size() == 3);
  }

  TEST_CASE("closure is a closure operator and matches the oracle") {
    const auto universe = enumerate_semimodules({make_naturals_for_modules(4), 4});
    for (const auto& m : universe.modules) {
      for (const auto& l : enumerate_subsemimodules(m)) {
        const auto c = subtractive_closure(l);
        CHECK(is_subset(l, c));
        CHECK(subtractive_closure(c) == c);
        const oracle::Set members(l.members().begin(), l.members().end());
        const oracle::Set expected = oracle::closure(*m, members);
        CHECK(oracle::Set(c.members().begin(), c.members().end()) == expected);
      }
    }
  }

  TEST_CASE("materialized subsemimodules validate") {
    const auto c3 = fixtures().c3;
    for (const auto& l : enumerate_subsemimodules(c3)) {
      const auto m = as_module(l);
      CHECK(m->size == l.size());
      CHECK(oracle::module_ok(*m));
    }
  }
}
