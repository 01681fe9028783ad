// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "semimod/catalog.hpp"
#include "semimod/cli.hpp"
#include "semimod/fixtures.hpp"
#include "semimod/format.hpp"

using namespace semimod;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    if (o.pass) std::cerr << "  first failure: " << what << "\n";
    o.pass = false;
  }
}

const Universe& naturals_universe() {
  static const auto u = enumerate_semimodules({make_naturals_for_modules(4), 4});
  return u;
}

const HomTable& naturals_homs() {
  static const HomTable h(naturals_universe().modules);
  return h;
}

std::string fixture(const std::string& name) { return std::string(SEMIMOD_FIXTURE_DIR) + "/" + name; }

Outcome axiom_suite() {
  Outcome o;
  const auto start = Clock::now();
  const auto& fx = fixtures();
  std::vector<SemiringPtr> rings{fx.boolean, fx.z2, fx.z4, fx.t2, fx.t3,
                                 make_truncated_minplus(1), make_truncated_minplus(2),
                                 make_truncated_minplus(3), make_product(fx.boolean, fx.z2),
                                 make_product(fx.t2, fx.boolean)};
  for (const auto& s : rings) {
    note(o, validate_semiring(*s).ok() && oracle::semiring_ok(*s), s->name + " rejected");
    note(o, validate_semimodule(*regular_module(s)).ok(), s->name + " regular module rejected");
  }
  for (const auto& m : {fx.c3, fx.t2_monoid, fx.b_monoid, fx.z2_module}) {
    note(o, validate_semimodule(*m).ok(), m->name + " rejected");
  }
  std::size_t mutations = 0, located = 0;
  for (const auto& s : rings) {
    for (int which = 0; which < 2; ++which) {
      for (Index r = 0; r < s->size; ++r) {
        for (Index c = 0; c < s->size; ++c) {
          Semiring m = *s;
          auto& t = which == 0 ? m.add : m.mul;
          t = t.with_cell(r, c, (t.at(r, c) + 1) % static_cast<Index>(s->size));
          const auto report = validate_semiring(m);
          note(o, report.ok() == oracle::semiring_ok(m), "validator disagrees with oracle on " + s->name);
          if (report.ok()) continue;
          ++mutations;
          bool all = true;
          for (const auto& v : report.violations) {
            all = all && !v.witness.empty() && oracle::semiring_witness_holds(m, v.axiom, v.witness);
          }
          located += all;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  note(o, mutations >= 20, "fewer than 20 failing mutations");
  note(o, located == mutations, "a mutation without a valid witness");
  note(o, secs < 1.0, "runtime above 1 s");
  std::ostringstream d;
  d << rings.size() << " semirings valid; " << mutations << " mutations rejected, " << located
    << " with verified witnesses";
  o.detail = d.str();
  return o;
}

Outcome co_stead() {
  Outcome o;
  std::size_t n = 0, kcount = 0, icount = 0;
  for (const auto& f : naturals_homs().all()) {
    ++n;
    const auto img = oracle::image_of(f);
    const auto clo = oracle::closure(*f.codomain(), img);
    const auto classes = oracle::bourne_class_count(f);
    const auto coim = quotient(kernel(f)).quotient;
    const auto im_module = as_module(image(f));
    const auto clo_module = as_module(subtractive_closure(image(f)));

    const bool k_lib = k_uniform(f).holds;
    const bool k_canon = classes == img.size();
    const bool k_iso = oracle_iso_exists(coim, im_module).has_value();
    note(o, k_lib == k_canon && k_lib == k_iso && k_lib == bourne_coimage_iso(f).has_value(),
         "k-uniform block disagrees on " + format_elements(f.map()));

    const bool i_lib = i_uniform(f).holds;
    const bool i_canon = clo.size() == img.size();
    const bool i_iso = oracle_iso_exists(im_module, clo_module).has_value();
    note(o, i_lib == i_canon && i_lib == i_iso, "i-uniform block disagrees on " + format_elements(f.map()));

    const bool u_lib = uniform(f).holds;
    const bool u_canon = classes == img.size() && img.size() == clo.size();
    note(o, u_lib == u_canon && u_lib == bourne_closure_iso(f).has_value(),
         "uniform block disagrees on " + format_elements(f.map()));
    kcount += k_lib;
    icount += i_lib;
  }
  std::ostringstream d;
  d << n << " morphisms over " << naturals_universe().modules.size() << " modules; " << kcount
    << " k-uniform, " << icount << " i-uniform; full agreement";
  o.detail = o.pass ? d.str() : "disagreement found";
  return o;
}

Outcome inj_surj() {
  Outcome o;
  const auto& homs = naturals_homs();
  std::size_t n = 0;
  for (const auto& f : homs.all()) {
    ++n;
    const bool inj = injective(f).holds;
    const bool surj = surjective(f).holds;
    note(o, monomorphism_bruteforce(f, homs).holds == inj, "mono != injective on " + format_elements(f.map()));
    const bool regular = regular_epimorphism(f).holds;
    const bool coker_iu = cokernel(f).quotient->size == 1 && i_uniform(f).holds;
    note(o, regular == surj && surj == coker_iu, "epi conditions disagree on " + format_elements(f.map()));
  }
  std::string witness = "none";
  for (std::size_t size = 1; size <= 3; ++size) {
    const auto r = search_counterexample("semi-mono-not-mono", {make_naturals_for_modules(size), size});
    if (r.counterexample) {
      const auto& f = r.counterexample->morphisms.front();
      witness = f.domain()->name + " -> " + f.codomain()->name + " " + format_elements(f.map()) +
                " at size " + std::to_string(size);
      note(o, semi_mono(f).holds && replay(*r.counterexample).holds, "semi-mono witness does not replay");
      break;
    }
  }
  note(o, witness != "none", "no semi-mono-not-mono witness at size <= 3");
  o.detail = std::to_string(n) + " morphisms, zero exceptions; semi-mono-not-mono: " + witness;
  return o;
}

Outcome first_iso() {
  Outcome o;
  std::size_t n = 0, exact = 0;
  for (const auto& f : naturals_homs().all()) {
    ++n;
    const auto seq = ker_coker_sequence(f);
    note(o, seq.verdict.semi_exact(), "not semi-exact: " + format_elements(f.map()));
    const bool uni = oracle::is_k_uniform(f) && oracle::is_i_uniform(f);
    note(o, seq.verdict.exact() == uni, "exact != uniform: " + format_elements(f.map()));
    exact += seq.verdict.exact();
  }
  o.detail = std::to_string(n) + " sequences semi-exact, " + std::to_string(exact) +
             " exact, each exactly when uniform";
  return o;
}

Outcome reg_sub() {
  Outcome o;
  std::size_t subs = 0, non_subtractive = 0;
  for (const auto& m : naturals_universe().modules) {
    for (const auto& l : enumerate_subsemimodules(m)) {
      ++subs;
      const oracle::Set members(l.members().begin(), l.members().end());
      const auto expected = oracle::closure(*m, members);
      const auto q = quotient(l);
      note(o, oracle::kernel_of(q.projection) == expected, "Ker(pi_L) != closure(L)");
      const auto c = subobject_character(l);
      note(o, c.equivalent(), "subobject conditions disagree");
      non_subtractive += expected != members;
    }
  }
  const auto t2 = fixtures().t2_monoid;
  const auto l = Subsemimodule::make(t2, {0, 2});
  const bool t2_witness = !is_subtractive(l) && !subobject_character(l).exact;
  note(o, non_subtractive > 0 && t2_witness, "no non-subtractive subsemimodule");
  o.detail = std::to_string(subs) + " subsemimodules, " + std::to_string(non_subtractive) +
             " non-subtractive; {0,2} <= T2 " + (t2_witness ? "non-subtractive" : "subtractive");
  return o;
}

Outcome harness() {
  Outcome o;
  const auto pools = standard_pools(4);
  HarnessOptions opts;
  opts.target = 100;
  std::size_t clauses = 0, total = 0;
  std::size_t weakest = opts.target;
  std::string weakest_id;
  for (const auto& lemma : lemma_catalog()) {
    if (lemma.id == "snake") continue;
    ++clauses;
    const auto run = run_lemma(lemma, pools, opts);
    if (run.certificates.size() < weakest) {
      weakest = run.certificates.size();
      weakest_id = lemma.id;
    }
    note(o, run.certificates.size() >= 100, lemma.id + ": only " + std::to_string(run.certificates.size()));
    note(o, run.verified == run.certificates.size(), lemma.id + ": a conclusion failed");
    for (std::size_t i = 0; i < run.diagrams.size(); ++i) {
      const auto& d = run.diagrams[i];
      bool ok = oracle::commutes(d);
      for (const auto& h : lemma.hypotheses) ok = ok && oracle::claim(h, d);
      for (const auto& c : lemma.conclusions) ok = ok && oracle::claim(c, d);
      note(o, ok, lemma.id + ": oracle disagrees on " + d.name);
    }
    total += run.verified;
  }
  std::ostringstream d;
  d << clauses << " clauses, " << total << " verified instances";
  if (!o.pass) d << "; smallest corpus " << weakest << " for " << weakest_id;
  o.detail = d.str();
  return o;
}

Outcome snake_lemma() {
  Outcome o;
  const auto& fx = fixtures();
  const std::vector<Pool> pools{make_pool("B", UniverseSpec{fx.boolean, 4}),
                                make_pool("Z2", UniverseSpec{fx.z2, 4}),
                                make_pool("Z4", UniverseSpec{fx.z4, 4}),
                                make_pool("T2", UniverseSpec{fx.t2, 4})};
  HarnessOptions opts;
  opts.target = 500;
  const auto run = run_snake(pools, opts);
  note(o, run.diagrams.size() >= 500, "only " + std::to_string(run.diagrams.size()) + " diagrams");
  note(o, run.verified == run.diagrams.size(), "a snake clause failed");
  std::size_t ring_checked = 0, clause5 = 0;
  for (std::size_t i = 0; i < run.diagrams.size(); ++i) {
    const auto& d = run.diagrams[i];
    const auto& r = run.results[i];
    if (r.verdict != Verdict::verified) continue;
    SnakeOptions reversed;
    for (Index x = d.object("M1")->size; x-- > 0;) reversed.m1_order.push_back(x);
    for (Index x = d.object("L2")->size; x-- > 0;) reversed.l2_order.push_back(x);
    note(o, snake(d, reversed).delta == r.delta, "delta depends on choices in " + d.name);
    bool has5 = false;
    for (const auto& c : r.clauses) {
      has5 = has5 || (c.id == "5" && c.applicable);
      if (c.id == "4") note(o, c.applicable && c.check.result.holds, "clause 4 fails in " + d.name);
    }
    clause5 += has5;
    const auto ring = d.object("M1")->ring->name;
    if (ring == "Z2" || ring == "Z4") {
      ++ring_checked;
      std::map<Index, oracle::Set> lib;
      const auto& members = r.ker_alpha3->members();
      for (Index k = 0; k < members.size(); ++k) {
        const auto m = r.coker_alpha1->congruence.members_of(r.delta.map()[k]);
        lib[members[k]] = oracle::Set(m.begin(), m.end());
      }
      note(o, lib == oracle::group_delta(d), "delta differs from the group oracle in " + d.name);
    }
  }
  std::ostringstream s;
  s << run.verified << " of " << run.diagrams.size() << " verified; " << ring_checked
    << " ring instances match the group oracle; clause 5 applicable in " << clause5;
  o.detail = s.str();
  return o;
}

Outcome catalog_replay() {
  Outcome o;
  const auto stored = stored_counterexamples();
  for (const auto& c : stored) note(o, replay(c).holds, c.property + " does not replay");
  const UniverseSpec spec{make_naturals_for_modules(4), 4};
  const auto a = search_counterexample("finite-cancellative-nonsurjective-epi", spec);
  const auto b = search_counterexample("finite-cancellative-nonsurjective-epi", spec);
  note(o, !a.counterexample && a.exhaustion && a.exhaustion->complete, "search did not exhaust");
  note(o, a.exhaustion && b.exhaustion && describe(*a.exhaustion) == describe(*b.exhaustion),
       "exhaustion report differs between runs");
  o.detail = std::to_string(stored.size()) + " stored counterexamples replay; " +
             (a.exhaustion ? describe(*a.exhaustion) : std::string("no exhaustion report"));
  while (!o.detail.empty() && o.detail.back() == '\n') o.detail.pop_back();
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_round_trip() {
  Outcome o;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SEMIMOD_FIXTURE_DIR)) {
    if (entry.path().extension() != ".sm") continue;
    ++files;
    const auto ws = parse_files({entry.path().string()});
    const auto text = serialize(ws);
    const auto again = parse_workspace(text);
    note(o, again == ws && serialize(again) == text, entry.path().filename().string() + " changes");
  }
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::vector<std::string>> commands{
      {"corpus", "snake", "--count", "40", "--seed", "9"},
      {"corpus", "short-five", "--count", "30", "--seed", "9"},
      {"lemma", "short-five", "ladder", fixture("short_five_t2.sm")},
      {"snake", "snake", fixture("snake_z2.sm")},
      {"search", "finite-cancellative-nonsurjective-epi"}};
  std::size_t reports = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const auto path = (dir / ("semimod-acceptance-" + std::to_string(i) + "-" + std::to_string(rep))).string();
      auto args = commands[i];
      args.insert(args.end(), {"--report", path});
      std::ostringstream out, err;
      run_cli(args, out, err);
      const auto text = slurp(path);
      std::filesystem::remove(path);
      if (rep == 0) first = text;
      else note(o, !first.empty() && text == first, "report differs for " + commands[i][0]);
    }
    ++reports;
  }
  o.detail = std::to_string(files) + " fixture files round-trip; " + std::to_string(reports) +
             " commands give byte-identical reports";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 axiom suite", axiom_suite},
      {"2 coimage/image equivalence", co_stead},
      {"3 mono/epi characterizations", inj_surj},
      {"4 kernel-cokernel sequence", first_iso},
      {"5 subtractive subsemimodules", reg_sub},
      {"6 diagram lemma harness", harness},
      {"7 snake lemma", snake_lemma},
      {"8 counterexample catalog", catalog_replay},
      {"9 CLI round trip and determinism", cli_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
