#include <doctest.h>

#include "semimod/catalog.hpp"
#include "semimod/fixtures.hpp"

using namespace semimod;

TEST_SUITE("catalog") {
  TEST_CASE("property ids") {
    const auto& props = property_catalog();
    CHECK(props.size() == 10);
    CHECK(std::is_sorted(props.begin(), props.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));
    CHECK_THROWS_AS(find_property("no-such-thing"), ParameterError);
  }

  TEST_CASE("stored counterexamples replay") {
    const auto stored = stored_counterexamples();
    CHECK(stored.size() >= 3);
    for (const auto& c : stored) {
      CAPTURE(c.property);
      CHECK(replay(c).holds);
    }
  }

  TEST_CASE("semi-mono that is not mono at size 3") {
    const auto r = search_counterexample("semi-mono-not-mono", {make_naturals_for_modules(3), 3});
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->minimal);
    CHECK(r.counterexample->morphisms.front().map() == std::vector<Index>{0, 1, 1});
    CHECK(replay(*r.counterexample).holds);
  }

  TEST_CASE("non-subtractive subsemimodule") {
    const auto r = search_counterexample("non-subtractive-subsemimodule", {fixtures().t2, 3});
    REQUIRE(r.counterexample);
    REQUIRE(r.counterexample->sub);
    CHECK_FALSE(is_subtractive(*r.counterexample->sub));
  }

  TEST_CASE("mono that is not injective does not exist") {
    const auto r = search_counterexample("mono-not-injective", {make_naturals_for_modules(3), 3});
    CHECK_FALSE(r.counterexample);
    REQUIRE(r.exhaustion);
    CHECK(r.exhaustion->complete);
    CHECK(r.exhaustion->candidates > 0);
  }

  TEST_CASE("finite cancellative epimorphisms are surjective") {
    const auto a = search_counterexample("finite-cancellative-nonsurjective-epi",
                                         {make_naturals_for_modules(4), 4});
    const auto b = search_counterexample("finite-cancellative-nonsurjective-epi",
                                         {make_naturals_for_modules(4), 4});
    REQUIRE(a.exhaustion);
    REQUIRE(b.exhaustion);
    CHECK(a.exhaustion->complete);
    CHECK(describe(*a.exhaustion) == describe(*b.exhaustion));
  }

  TEST_CASE("short five converse fails at size 2") {
    const auto r = search_counterexample("short-five-converse", {fixtures().z2, 2});
    REQUIRE(r.counterexample);
    REQUIRE(r.counterexample->diagram);
    CHECK(replay(*r.counterexample).holds);
  }

  TEST_CASE("describe") {
    const auto stored = stored_counterexamples();
    const auto text = describe(stored.front());
    CHECK(text.rfind("counterexample " + stored.front().property, 0) == 0);
  }
}
