#include "semimod/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "semimod/catalog.hpp"
#include "semimod/fixtures.hpp"
#include "semimod/format.hpp"
#include "semimod/report.hpp"

namespace semimod {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

struct Options {
  std::string report_path;
  std::size_t max_size = 4;
  std::uint64_t seed = 1;
  std::string corpus_path;
  bool quiet = false;
  bool timing = false;
  std::size_t count = 100;
  std::string semiring;
  std::string name;
  std::string target;
  std::vector<std::string> files;
};

class Clock {
 public:
  explicit Clock(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  long long millis() const {
    if (!enabled_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

std::string two_digits(std::size_t i) {
  std::ostringstream s;
  s << std::setw(2) << std::setfill('0') << i;
  return s.str();
}

std::string line(std::string text) {
  if (text.empty() || text.back() != '\n') text += '\n';
  return text;
}

std::string status(const Flag& f) { return f.holds ? "holds" : "fails"; }

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::verified: return kOk;
    case Verdict::refuted: return kRefuted;
    case Verdict::hypothesis_failed: return kInputError;
  }
  return kInputError;
}

void add_checks(Report& report, const std::string& prefix, const char* kind,
                const std::vector<Check>& checks, long long ms) {
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    report.add(prefix + "." + kind + two_digits(i + 1), status(c.result),
               c.description + (c.result.holds ? "" : ": " + c.result.witness), ms);
  }
}

SemiringPtr named_semiring(const std::string& name, std::size_t max_size, const Workspace* ws) {
  const auto& fx = fixtures();
  if (name.empty() || name == "N") return make_naturals_for_modules(max_size);
  if (name == "B") return fx.boolean;
  if (name == "Z2") return fx.z2;
  if (name == "Z4") return fx.z4;
  if (name == "T2") return fx.t2;
  if (name == "T3") return fx.t3;
  if (ws && ws->has_semiring(name)) return ws->semiring(name);
  throw ParameterError("unknown semiring " + name + " (use N, B, Z2, Z4, T2, T3 or a file)");
}

int cmd_validate(const Workspace& ws, const Options&, Report& report, std::ostream& out) {
  for (const auto& s : ws.semirings()) report.add("semiring." + s->name, "ok");
  for (const auto& m : ws.modules()) report.add("module." + m->name, "ok");
  for (const auto& s : ws.subs()) report.add("sub." + s.name, "ok");
  for (const auto& f : ws.morphisms()) report.add("morphism." + f.name(), "ok");
  for (const auto& s : ws.sequences()) report.add("sequence." + s.name, "ok");
  for (const auto& d : ws.diagrams()) report.add("diagram." + d.name, "ok");
  out << "ok: " << ws.semirings().size() << " semirings, " << ws.modules().size() << " modules, "
      << ws.subs().size() << " subs, " << ws.morphisms().size() << " morphisms, "
      << ws.sequences().size() << " sequences, " << ws.diagrams().size() << " diagrams\n";
  return kOk;
}

int cmd_classify(const Workspace& ws, const Options& opt, Report& report, std::ostream& out) {
  Clock clock(opt.timing);
  const auto& f = ws.morphism(opt.name);
  const auto c = classify(f);
  const auto ms = clock.millis();
  const std::pair<const char*, const Flag*> flags[] = {
      {"injective", &c.injective},   {"surjective", &c.surjective}, {"k_uniform", &c.k_uniform},
      {"i_uniform", &c.i_uniform},   {"uniform", &c.uniform},       {"semi_mono", &c.semi_mono},
      {"semi_epi", &c.semi_epi},     {"semi_iso", &c.semi_iso},     {"cancellative", &c.cancellative},
  };
  for (const auto& [id, flag] : flags) report.add(f.name() + "." + id, status(*flag), flag->witness, ms);
  if (c.epimorphism_in_cs) {
    report.add(f.name() + ".epimorphism_in_cs", status(*c.epimorphism_in_cs),
               c.epimorphism_in_cs->witness, ms);
  }
  out << f.name() << ": " << f.domain()->name << " -> " << f.codomain()->name << "\n"
      << line(describe(c));
  return kOk;
}

int cmd_exactness(const Workspace& ws, const Options& opt, Report& report, std::ostream& out) {
  Clock clock(opt.timing);
  const auto& seq = ws.sequence(opt.name);
  const auto v = analyze(seq);
  const auto ms = clock.millis();
  const auto& objs = seq.objects();
  const auto& arrows = seq.arrows();
  out << opt.name << ":";
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    out << " " << objs[i]->name << " -" << arrows[i].name() << "->";
  }
  out << " " << objs.back()->name << "\n";
  for (const auto& p : v.positions) {
    const std::string id = opt.name + ".at-" + objs[p.object]->name;
    const std::pair<const char*, const Flag*> flags[] = {{"chain_complex", &p.chain_complex},
                                                         {"proper_exact", &p.proper_exact},
                                                         {"semi_exact", &p.semi_exact},
                                                         {"exact", &p.exact}};
    out << "  at " << objs[p.object]->name << ":";
    for (const auto& [name, flag] : flags) {
      report.add(id + "." + name, status(*flag), flag->witness, ms);
      out << " " << name << "=" << (flag->holds ? "true" : "false");
      if (!flag->holds) out << " (" << flag->witness << ")";
    }
    out << "\n";
  }
  for (std::size_t i = 0; i < v.arrows.size(); ++i) {
    const auto& a = v.arrows[i];
    const std::pair<const char*, const Flag*> flags[] = {
        {"k_uniform", &a.k_uniform}, {"i_uniform", &a.i_uniform}, {"uniform", &a.uniform}};
    out << "  " << arrows[i].name() << ":";
    for (const auto& [name, flag] : flags) {
      report.add(opt.name + ".arrow-" + arrows[i].name() + "." + name, status(*flag), flag->witness,
                 ms);
      out << " " << name << "=" << (flag->holds ? "true" : "false");
    }
    out << "\n";
  }
  report.add(opt.name + ".verdict", v.exact() ? "exact" : "not-exact", {}, ms);
  out << (v.exact() ? "exact\n" : "not exact\n");
  return v.exact() ? kOk : kRefuted;
}

int cmd_lemma(const Workspace& ws, const Options& opt, Report& report, std::ostream& out) {
  Clock clock(opt.timing);
  const auto& lemma = find_lemma(opt.name);
  const auto& d = ws.diagram(opt.target);
  const auto cert = verify(lemma, d);
  const auto ms = clock.millis();
  const std::string prefix = d.name + "." + lemma.id;
  add_checks(report, prefix, "hypothesis", cert.hypotheses, ms);
  add_checks(report, prefix, "conclusion", cert.conclusions, ms);
  report.add(prefix + ".verdict", to_string(cert.verdict), cert.message, ms);
  out << line(describe(cert));
  return verdict_code(cert.verdict);
}

int cmd_snake(const Workspace& ws, const Options& opt, Report& report, std::ostream& out) {
  Clock clock(opt.timing);
  const auto& d = ws.diagram(opt.name);
  const auto r = snake(d);
  const auto ms = clock.millis();
  const std::string prefix = d.name + ".snake";
  add_checks(report, prefix, "hypothesis", r.hypotheses, ms);
  for (const auto& c : r.clauses) {
    report.add(prefix + ".clause" + c.id, c.applicable ? status(c.check.result) : "n/a",
               c.applicable && !c.check.result.holds ? c.check.description + ": " + c.check.result.witness
                                                     : c.check.description,
               ms);
  }
  report.add(prefix + ".verdict", to_string(r.verdict), r.message, ms);
  out << line(describe(r));
  return verdict_code(r.verdict);
}

int cmd_search(const Workspace* ws, const Options& opt, Report& report, std::ostream& out) {
  Clock clock(opt.timing);
  const auto& info = find_property(opt.name);
  UniverseSpec spec{named_semiring(opt.semiring, opt.max_size, ws), opt.max_size};
  spec.seed = opt.seed;
  const auto result = search_counterexample(info.id, spec);
  const auto ms = clock.millis();
  out << info.id << ": " << info.statement << "\n";
  if (result.counterexample) {
    report.add(info.id, "found", result.counterexample->description, ms);
    out << line(describe(*result.counterexample));
    return kRefuted;
  }
  const auto& ex = *result.exhaustion;
  report.add(info.id, ex.complete ? "exhausted" : "budget",
             ex.universe + ", " + std::to_string(ex.candidates) + " candidates", ms);
  out << line(describe(ex));
  return kOk;
}

int cmd_corpus(const Options& opt, Report& report, std::ostream& out) {
  Clock clock(opt.timing);
  HarnessOptions h;
  h.target = opt.count;
  h.seed = opt.seed;
  auto pools = standard_pools(opt.max_size);
  std::vector<Diagram> diagrams;
  std::vector<std::pair<Verdict, std::string>> verdicts;
  GenerationStats stats;
  if (opt.name == "snake") {
    std::erase_if(pools, [](const Pool& p) { return p.name == "N"; });
    auto run = run_snake(pools, h);
    stats = run.stats;
    diagrams = run.diagrams;
    for (const auto& r : run.results) verdicts.emplace_back(r.verdict, r.message);
  } else {
    const auto& lemma = find_lemma(opt.name);
    auto run = run_lemma(lemma, pools, h);
    stats = run.stats;
    diagrams = run.diagrams;
    for (const auto& c : run.certificates) verdicts.emplace_back(c.verdict, c.message);
  }
  const auto ms = clock.millis();
  std::size_t verified = 0;
  int code = kOk;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    report.add(opt.name + "." + diagrams[i].name, to_string(verdicts[i].first),
               verdicts[i].first == Verdict::verified ? "" : verdicts[i].second, ms);
    if (verdicts[i].first == Verdict::verified) ++verified;
    else code = kRefuted;
  }
  out << opt.name << ": " << verified << " of " << diagrams.size() << " verified ("
      << stats.attempts << " attempts, " << stats.duplicates << " duplicates)\n";
  if (diagrams.size() < opt.count) {
    out << "only " << diagrams.size() << " distinct diagrams found\n";
    code = std::max(code, kRefuted);
  }
  if (!opt.corpus_path.empty()) {
    std::ofstream file(opt.corpus_path, std::ios::binary);
    if (!file) throw ParameterError("cannot write corpus " + opt.corpus_path);
    file << serialize(workspace_from_diagrams(diagrams));
    out << "corpus written to " << opt.corpus_path << "\n";
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite semiring and semimodule exactness toolkit", "semimod"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--report", opt.report_path, "Write the machine report to this path");
  app.add_option("--max-size", opt.max_size, "Largest module size for enumeration")
      ->check(CLI::Range(1, 5));
  app.add_option("--seed", opt.seed, "Seed for generated diagrams");
  app.add_option("--corpus", opt.corpus_path, "Write generated diagrams to this path");
  app.add_flag("--quiet", opt.quiet, "Print only the verdict line");
  app.add_flag("--timing", opt.timing, "Record elapsed milliseconds in the report");
  app.set_version_flag("--version", kVersion);

  auto* validate = app.add_subcommand("validate", "Parse and validate files");
  validate->add_option("files", opt.files)->required();
  auto* cls = app.add_subcommand("classify", "Flags of a morphism");
  cls->add_option("morphism", opt.name)->required();
  cls->add_option("files", opt.files)->required();
  auto* ex = app.add_subcommand("exactness", "Exactness of a sequence");
  ex->add_option("sequence", opt.name)->required();
  ex->add_option("files", opt.files)->required();
  auto* lem = app.add_subcommand("lemma", "Verify a diagram lemma on a diagram");
  lem->add_option("name", opt.name)->required();
  lem->add_option("diagram", opt.target)->required();
  lem->add_option("files", opt.files)->required();
  auto* snk = app.add_subcommand("snake", "Connecting morphism and snake clauses");
  snk->add_option("diagram", opt.name)->required();
  snk->add_option("files", opt.files)->required();
  auto* srch = app.add_subcommand("search", "Counterexample catalog search");
  srch->add_option("property", opt.name)->required();
  srch->add_option("--semiring", opt.semiring, "N (default), B, Z2, Z4, T2, T3 or a file semiring");
  srch->add_option("files", opt.files);
  auto* corp = app.add_subcommand("corpus", "Generate and verify diagrams for a lemma or snake");
  corp->add_option("lemma", opt.name)->required();
  corp->add_option("--count", opt.count, "Distinct diagrams to generate");
  for (auto* sub : {validate, cls, ex, lem, snk, srch, corp}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Report report;
  std::ostringstream text;
  int code = kInputError;
  try {
    std::optional<Workspace> ws;
    if (!opt.files.empty()) ws = parse_files(opt.files);
    if (*validate) code = cmd_validate(*ws, opt, report, text);
    else if (*cls) code = cmd_classify(*ws, opt, report, text);
    else if (*ex) code = cmd_exactness(*ws, opt, report, text);
    else if (*lem) code = cmd_lemma(*ws, opt, report, text);
    else if (*snk) code = cmd_snake(*ws, opt, report, text);
    else if (*srch) code = cmd_search(ws ? &*ws : nullptr, opt, report, text);
    else code = cmd_corpus(opt, report, text);
  } catch (const ParseError& e) {
    for (std::size_t i = 0; i < e.issues().size(); ++i) {
      const auto& issue = e.issues()[i];
      report.add("input." + two_digits(i + 1), to_string(issue.kind),
                 issue.file + ":" + std::to_string(issue.line) + ": " + issue.message);
    }
    err << e.what() << "\n";
    code = kInputError;
  } catch (const Error& e) {
    report.add("input.01", "error", e.what());
    err << "error: " << e.what() << "\n";
    code = kInputError;
  }

  if (opt.quiet) {
    const auto s = text.str();
    auto last = s.find_last_of('\n', s.size() >= 2 ? s.size() - 2 : 0);
    out << (last == std::string::npos || s.size() < 2 ? s : s.substr(last + 1));
  } else {
    out << text.str();
  }
  if (!opt.report_path.empty()) {
    try {
      report.write(opt.report_path);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  return code;
}

}  // namespace semimod
