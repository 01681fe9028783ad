#include <doctest.h>

#include "semimod/fixtures.hpp"
#include "semimod/format.hpp"
#include "semimod/harness.hpp"

using namespace semimod;

namespace {

std::string fixture(const std::string& name) { return std::string(SEMIMOD_FIXTURE_DIR) + "/" + name; }

std::vector<ParseIssue> issues_of(const std::string& text) {
  try {
    parse_workspace(text, "t.sm");
  } catch (const ParseError& e) {
    return e.issues();
  }
  return {};
}

const char* kT2 =
    "semiring T2 size=3\n"
    "add: 0,1,2; 1,2,2; 2,2,2\n"
    "mul: 0,0,0; 0,1,2; 0,2,2\n"
    "end\n";

}  // namespace

TEST_SUITE("format") {
  TEST_CASE("basic fixture") {
    const auto ws = parse_files({fixture("basic.sm")});
    CHECK(ws.semirings().size() == 3);
    CHECK(ws.modules().size() == 1);
    const auto& c3 = ws.module("C3");
    CHECK(same_structure(*c3, *fixtures().c3));
    CHECK(same_structure(*ws.semiring("T2"), *fixtures().t2));
  }

  TEST_CASE("round trip on every fixture") {
    for (const char* name : {"basic.sm", "morphisms.sm", "snake_z2.sm", "short_five_t2.sm"}) {
      CAPTURE(name);
      const auto ws = parse_files({fixture(name)});
      const auto text = serialize(ws);
      const auto again = parse_workspace(text);
      CHECK(again == ws);
      CHECK(serialize(again) == text);
    }
  }

  TEST_CASE("dangling reference") {
    const auto issues =
        issues_of(std::string(kT2) + "morphism f from=A to=B map=0\nend\n");
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].kind == ParseIssue::Kind::reference);
    CHECK(issues[0].line == 5);
    CHECK(issues[0].message.find("module A") != std::string::npos);
  }

  TEST_CASE("axiom violation names the witness") {
    const auto issues = issues_of(
        "semiring S size=3\n"
        "add: 0,1,2; 1,2,0; 2,0,2\n"
        "mul: 0,0,0; 0,1,2; 0,2,1\n"
        "end\n");
    REQUIRE_FALSE(issues.empty());
    CHECK(issues[0].kind == ParseIssue::Kind::axiom);
    CHECK(issues[0].line == 1);
    CHECK(issues[0].message.find("add-associative") != std::string::npos);
    CHECK(issues[0].message.find(" at (") != std::string::npos);
  }

  TEST_CASE("syntax errors are located and collected") {
    const auto issues = issues_of(std::string(kT2) +
                                  "module M over=T2 size=2\n"
                                  "add: 0,1; 1\n"
                                  "end\n"
                                  "bogus line\n"
                                  "sub L of=T2 members=0\n");
    REQUIRE(issues.size() == 3);
    CHECK(issues[0].kind == ParseIssue::Kind::syntax);
    CHECK(issues[0].line == 6);
    CHECK(issues[1].line == 8);
    CHECK(issues[2].message.find("not closed") != std::string::npos);
    CHECK(to_string(issues[0]).rfind("t.sm:6: syntax error:", 0) == 0);
  }

  TEST_CASE("action is required when not forced") {
    const auto issues = issues_of(
        "semiring M size=3\n"
        "add: 0,1,2; 1,1,1; 2,1,2\n"
        "mul: 0,0,0; 0,1,2; 0,2,2\n"
        "end\n"
        "module X over=M size=2\n"
        "add: 0,1; 1,1\n"
        "end\n");
    bool found = false;
    for (const auto& i : issues) found = found || i.message.find("act:") != std::string::npos;
    CHECK(found);
  }

  TEST_CASE("diagram structure issues") {
    const auto ws = parse_files({fixture("short_five_t2.sm")});
    CHECK(ws.diagram("ladder").shape == Shape::ladder3);
    auto text = serialize(ws);
    const auto pos = text.find("col 2: C3 id C3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "col 2: O id C3");
    const auto issues = issues_of(text);
    REQUIRE_FALSE(issues.empty());
    CHECK(issues[0].kind == ParseIssue::Kind::structure);
  }

  TEST_CASE("duplicates and bad tags") {
    auto issues = issues_of(std::string(kT2) + kT2);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].message.find("duplicate") != std::string::npos);
    const auto ws = parse_files({fixture("snake_z2.sm")});
    auto text = serialize(ws);
    text.replace(text.find("hyp: alpha2 uniform"), 19, "hyp: alpha7 uniform");
    issues = issues_of(text);
    REQUIRE(issues.size() == 1);
  }

  TEST_CASE("files read in order") {
    const auto ws = parse_files({fixture("basic.sm")});
    CHECK_THROWS_AS(parse_files({fixture("basic.sm"), fixture("basic.sm")}), ParseError);
    CHECK_THROWS_AS(parse_files({fixture("missing.sm")}), ParseError);
  }

  TEST_CASE("generated corpora round trip") {
    const auto& lemma = find_lemma("nine");
    HarnessOptions opts;
    opts.target = 5;
    const auto ds = generate_diagrams(lemma.shape, lemma.hypotheses, standard_pools(3), opts);
    const auto ws = workspace_from_diagrams(ds);
    CHECK(ws.diagrams().size() == ds.size());
    const auto again = parse_workspace(serialize(ws));
    CHECK(again == ws);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      CHECK(verify(lemma, again.diagrams()[i]).verdict == Verdict::verified);
    }
  }
}
