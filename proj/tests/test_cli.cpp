#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "semimod/cli.hpp"
#include "semimod/report.hpp"

using namespace semimod;

namespace {

std::string fixture(const std::string& name) { return std::string(SEMIMOD_FIXTURE_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("semimod-test-" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    const auto r = run({"validate", fixture("basic.sm")});
    CHECK(r.code == 0);
    CHECK(r.out.find("3 semirings, 1 modules") != std::string::npos);
  }

  TEST_CASE("classify T2 -> B") {
    const auto r = run({"classify", "f", fixture("morphisms.sm")});
    CHECK(r.code == 0);
    CHECK(r.out.find("k_uniform=false (pair (1,2))") != std::string::npos);
  }

  TEST_CASE("exactness exit codes") {
    CHECK(run({"exactness", "s", fixture("morphisms.sm")}).code == 0);
    CHECK(run({"exactness", "t", fixture("morphisms.sm")}).code == 1);
  }

  TEST_CASE("snake on the Z2 fixture") {
    const auto r = run({"snake", "snake", fixture("snake_z2.sm")});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta: Ker(alpha3) -> Coker(alpha1)") != std::string::npos);
    CHECK(r.out.find("FAILS") == std::string::npos);
  }

  TEST_CASE("short five without cancellativity") {
    const auto r = run({"lemma", "short-five", "ladder", fixture("short_five_t2.sm")});
    CHECK(r.code == 2);
    CHECK(r.out.find("hypothesis M1 cancellative violated by element 1") != std::string::npos);
  }

  TEST_CASE("input errors exit 2") {
    CHECK(run({"validate", fixture("missing.sm")}).code == 2);
    CHECK(run({"classify", "nope", fixture("morphisms.sm")}).code == 2);
    CHECK(run({"lemma", "six", "ladder", fixture("short_five_t2.sm")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("search exit codes") {
    CHECK(run({"search", "semi-mono-not-mono", "--max-size", "3"}).code == 1);
    const auto r = run({"search", "finite-cancellative-nonsurjective-epi"});
    CHECK(r.code == 0);
    CHECK(r.out.find("complete") != std::string::npos);
  }

  TEST_CASE("machine report is deterministic") {
    const auto a = temp("a.txt"), b = temp("b.txt");
    for (const auto& path : {a, b}) {
      CHECK(run({"corpus", "snake", "--count", "20", "--seed", "5", "--max-size", "3", "--report",
                 path})
                .code == 0);
    }
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.rfind(std::string("# semimod report ") + kVersion + "\n", 0) == 0);
    std::istringstream lines(text);
    std::string line, prev;
    std::getline(lines, line);
    std::size_t records = 0;
    while (std::getline(lines, line)) {
      CHECK(std::count(line.begin(), line.end(), '|') == 3);
      const auto id = line.substr(0, line.find('|'));
      CHECK(prev <= id);
      prev = id;
      ++records;
    }
    CHECK(records == 20);
  }

  TEST_CASE("corpus export parses back") {
    const auto path = temp("corpus.sm");
    CHECK(run({"corpus", "five:2", "--count", "5", "--max-size", "3", "--corpus", path}).code == 0);
    const auto v = run({"validate", path});
    CHECK(v.code == 0);
    CHECK(v.out.find("5 diagrams") != std::string::npos);
  }

  TEST_CASE("report fields are sanitized") {
    Report r;
    r.add("b", "ok", "x|y\nz", 3);
    r.add("a", "fails");
    CHECK(r.str() == std::string("# semimod report ") + kVersion + "\na|fails||0\nb|ok|x/y z|3\n");
  }

  TEST_CASE("quiet prints the last line") {
    const auto r = run({"--quiet", "exactness", "t", fixture("morphisms.sm")});
    CHECK(r.out == "not exact\n");
  }
}
