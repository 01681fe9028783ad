#include <doctest.h>

#include "oracles.hpp"
#include "semimod/fixtures.hpp"

using namespace semimod;

namespace {

// Identity ladder on 0 -> A -> A -> 0 style rows L -f-> M -g-> N.
Diagram identity_ladder(const Morphism& f, const Morphism& g) {
  return Diagram::from_arrows(Shape::ladder3,
                              {{"f1", f},
                               {"g1", g},
                               {"f2", f},
                               {"g2", g},
                               {"alpha1", identity(f.domain())},
                               {"alpha2", identity(f.codomain())},
                               {"alpha3", identity(g.codomain())}},
                              "ladder");
}

}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("shapes") {
    CHECK(shape_info(Shape::ladder3).cols == 3);
    CHECK(shape_info(Shape::ladder5).cols == 5);
    CHECK(shape_info(Shape::grid3).rows == 3);
    CHECK(squares(Shape::ladder3).size() == 2);
    CHECK(squares(Shape::ladder5).size() == 4);
    CHECK(squares(Shape::grid3).size() == 4);
    CHECK(endpoints(Shape::ladder3, "alpha2") == std::pair<std::string, std::string>{"M1", "M2"});
    CHECK(endpoints(Shape::grid3, "beta3") == std::pair<std::string, std::string>{"N2", "N3"});
    CHECK(is_object_role(Shape::ladder5, "U1"));
    CHECK_FALSE(is_arrow_role(Shape::ladder3, "gamma"));
  }

  TEST_CASE("tags") {
    CHECK(parse_tag(Shape::ladder3, "alpha2 i-uniform").text == "alpha2 i-uniform");
    CHECK(parse_tag(Shape::ladder3, "M1 cancellative").kind == Claim::Kind::module_cancellative);
    CHECK(parse_tag(Shape::ladder3, "exact f1 g1").kind == Claim::Kind::exact);
    CHECK_THROWS_AS(parse_tag(Shape::ladder3, "alpha9 injective"), ParameterError);
    CHECK_THROWS_AS(parse_tag(Shape::ladder3, "alpha1 shiny"), ParameterError);
  }

  TEST_CASE("catalog ids") {
    for (const char* id : {"short:1", "short:2", "short:3", "diagram:1a", "diagram:1b", "diagram:2a",
                           "diagram:2b", "diagram:3", "diagram:3s", "cor-short5:1", "cor-short5:2",
                           "short-five", "5-details:1a", "5-details:1b", "5-details:2",
                           "5-details:2s", "5-details:3", "five:1", "five:2", "five:3", "9-1:1",
                           "9-1:2", "9-1:2s", "9-3:1", "9-3:2", "nine", "nine:first-from-third",
                           "nine:third-from-first", "snake"}) {
      CHECK_NOTHROW(find_lemma(id));
    }
    CHECK_THROWS_AS(find_lemma("six"), ParameterError);
  }

  TEST_CASE("structure errors") {
    const auto& fx = fixtures();
    const auto f = Morphism::make(fx.t2_monoid, fx.b_monoid, {0, 1, 1}, "f");
    CHECK_THROWS_AS(Diagram::from_arrows(Shape::ladder3, {{"f1", f}, {"g1", f}}), StructureError);
    CHECK_THROWS_AS(Diagram::from_arrows(Shape::ladder3, {{"zeta", f}}), ParameterError);
    auto d = Diagram::from_arrows(Shape::ladder3, {{"f1", f}});
    CHECK_FALSE(d.complete());
    CHECK_THROWS_AS(verify("short-five", d), StructureError);
  }

  TEST_CASE("non-commuting square is reported") {
    const auto c3 = fixtures().c3;
    const auto z = zero_morphism(zero_module(c3->ring), c3);
    auto d = identity_ladder(z, identity(c3));
    d.arrows["alpha2"] = zero_morphism(c3, c3).named("alpha2");
    const auto cert = verify("short:1", d);
    CHECK(cert.verdict == Verdict::hypothesis_failed);
    CHECK(cert.message.find("commutes") != std::string::npos);
  }

  TEST_CASE("short five on a non-cancellative identity ladder") {
    const auto c3 = fixtures().c3;
    const auto z = zero_morphism(zero_module(c3->ring), c3);
    const auto cert = verify_short_five(identity_ladder(z, identity(c3)));
    CHECK(cert.verdict == Verdict::hypothesis_failed);
    CHECK(cert.message == "hypothesis M1 cancellative violated by element 1");
  }

  TEST_CASE("short five on a cancellative identity ladder") {
    const auto m = fixtures().z2_module;
    const auto z = zero_morphism(zero_module(m->ring), m);
    const auto d = identity_ladder(z, identity(m));
    const auto cert = verify_short_five(d);
    CHECK(cert.verdict == Verdict::verified);
    for (const auto& c : cert.conclusions) CHECK(c.result.holds);
    CHECK(oracle::commutes(d));
  }

  TEST_CASE("declared tags are re-verified") {
    const auto m = fixtures().z2_module;
    const auto z = zero_morphism(zero_module(m->ring), m);
    auto d = identity_ladder(z, identity(m));
    d.hypotheses = {"alpha1 injective", "f1 surjective"};
    const auto cert = verify("short-five", d);
    CHECK(cert.verdict == Verdict::hypothesis_failed);
    CHECK(cert.message.find("f1 surjective") != std::string::npos);
  }

  TEST_CASE("claim evaluation matches the oracle") {
    const auto& fx = fixtures();
    const auto f = Morphism::make(fx.t2_monoid, fx.b_monoid, {0, 1, 1});
    const auto d = identity_ladder(zero_morphism(zero_module(fx.t2), fx.t2_monoid), f);
    for (const auto& lemma : lemma_catalog()) {
      if (lemma.shape != Shape::ladder3) continue;
      for (const auto& c : lemma.hypotheses) CHECK(evaluate(c, d).holds == oracle::claim(c, d));
      for (const auto& c : lemma.conclusions) {
        CHECK(evaluate(c, d).holds == oracle::claim(c, d));
        CHECK(evaluate(Claim::negation(c), d).holds != oracle::claim(c, d));
      }
    }
  }

  TEST_CASE("wrappers validate clause names") {
    const auto m = fixtures().z2_module;
    const auto z = zero_morphism(zero_module(m->ring), m);
    const auto d = identity_ladder(z, identity(m));
    CHECK_THROWS_AS(verify_lemma_short(d, 4), ParameterError);
    CHECK_THROWS_AS(verify_lemma_diagram(d, "9"), ParameterError);
    CHECK(verify_lemma_short(d, 1).verdict == Verdict::verified);
  }
}
