#include "semimod/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "semimod/fixtures.hpp"

namespace semimod {

namespace {

struct Step {
  bool object = false;
  std::string role;
  std::string src, dst;  // arrow endpoints
  std::vector<std::size_t> claims;
  std::vector<Square> squares;
};

// Column-major binding order: the objects of a column, the horizontals into
// it, then its verticals.
std::vector<Step> plan(Shape shape, const std::vector<Claim>& constraints) {
  const auto& info = shape_info(shape);
  std::vector<Step> steps;
  for (std::size_t c = 0; c < info.cols; ++c) {
    for (std::size_t r = 0; r < info.rows; ++r) steps.push_back({true, info.objects[r][c], {}, {}, {}, {}});
    if (c > 0) {
      for (std::size_t r = 0; r < info.rows; ++r) {
        const auto& role = info.horizontals[r][c - 1];
        auto [s, t] = endpoints(shape, role);
        steps.push_back({false, role, s, t, {}, {}});
      }
    }
    for (std::size_t r = 0; r + 1 < info.rows; ++r) {
      const auto& role = info.verticals[r][c];
      auto [s, t] = endpoints(shape, role);
      steps.push_back({false, role, s, t, {}, {}});
    }
  }
  std::set<std::string> bound;
  std::vector<bool> scheduled(constraints.size(), false);
  std::vector<Square> pending = squares(shape);
  for (auto& step : steps) {
    bound.insert(step.role);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (scheduled[i]) continue;
      auto roles = constraints[i].roles();
      if (std::all_of(roles.begin(), roles.end(), [&](const auto& r) { return bound.count(r); })) {
        step.claims.push_back(i);
        scheduled[i] = true;
      }
    }
    for (auto it = pending.begin(); it != pending.end();) {
      if (bound.count(it->top) && bound.count(it->right) && bound.count(it->left) &&
          bound.count(it->bottom)) {
        step.squares.push_back(*it);
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  }
  return steps;
}

class Searcher {
 public:
  Searcher(Shape shape, const std::vector<Claim>& constraints, const Pool& pool,
           std::size_t budget, std::mt19937_64* rng,
           std::function<bool(const Diagram&)> accept = {})
      : constraints_(constraints), pool_(pool), budget_(budget), rng_(rng), accept_(std::move(accept)) {
    steps_ = plan(shape, constraints);
    d_.shape = shape;
    d_.name = pool.name;
  }

  std::optional<Diagram> run() {
    if (dfs(0)) return found_;
    return std::nullopt;
  }

  std::size_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

 private:
  bool admissible(const Step& step) const {
    for (const auto& sq : step.squares) {
      if (!commutes(d_, sq)) return false;
    }
    for (std::size_t i : step.claims) {
      if (!evaluate(constraints_[i], d_)) return false;
    }
    return true;
  }

  template <class T>
  std::vector<T> ordered(std::vector<T> v) {
    if (rng_) std::shuffle(v.begin(), v.end(), *rng_);
    return v;
  }

  bool dfs(std::size_t i) {
    if (i == steps_.size()) {
      if (accept_ && !accept_(d_)) return false;
      found_ = d_;
      return true;
    }
    const auto& step = steps_[i];
    const auto& homs = *pool_.homs;
    std::vector<std::size_t> candidates;
    if (step.object) {
      candidates.resize(homs.modules().size());
    } else {
      candidates.resize(homs.hom(index_.at(step.src), index_.at(step.dst)).size());
    }
    for (std::size_t k = 0; k < candidates.size(); ++k) candidates[k] = k;
    for (std::size_t k : ordered(std::move(candidates))) {
      if (++nodes_ > budget_) {
        aborted_ = true;
        return false;
      }
      if (step.object) {
        index_[step.role] = k;
        d_.objects[step.role] = homs.modules()[k];
      } else {
        d_.arrows[step.role] =
            homs.hom(index_.at(step.src), index_.at(step.dst))[k].named(step.role);
      }
      if (admissible(step) && dfs(i + 1)) return true;
      if (aborted_) return false;
    }
    if (step.object) {
      index_.erase(step.role);
      d_.objects.erase(step.role);
    } else {
      d_.arrows.erase(step.role);
    }
    return false;
  }

  const std::vector<Claim>& constraints_;
  const Pool& pool_;
  std::size_t budget_;
  std::mt19937_64* rng_;
  std::function<bool(const Diagram&)> accept_;
  std::vector<Step> steps_;
  Diagram d_;
  std::map<std::string, std::size_t> index_;
  std::optional<Diagram> found_;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

unsigned worker_count(unsigned requested) {
  return requested ? requested : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

Pool make_pool(std::string name, std::vector<ModulePtr> modules) {
  return {std::move(name), std::make_shared<const HomTable>(std::move(modules))};
}

Pool make_pool(std::string name, const UniverseSpec& spec) {
  return make_pool(std::move(name), enumerate_semimodules(spec).modules);
}

std::vector<Pool> standard_pools(std::size_t max_size) {
  const auto& fx = fixtures();
  std::vector<Pool> out;
  out.push_back(make_pool("B", UniverseSpec{fx.boolean, max_size}));
  out.push_back(make_pool("Z2", UniverseSpec{fx.z2, max_size}));
  out.push_back(make_pool("Z4", UniverseSpec{fx.z4, max_size}));
  out.push_back(make_pool("T2", UniverseSpec{fx.t2, max_size}));
  out.push_back(make_pool("N", UniverseSpec{make_naturals_for_modules(max_size), max_size}));
  return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string diagram_key(const Diagram& d) {
  std::string key = to_string(d.shape);
  if (!d.objects.empty()) key += "|" + d.objects.begin()->second->ring->name;
  for (const auto& [role, m] : d.objects) key += "|" + role + "=" + m->name;
  for (const auto& [role, f] : d.arrows) key += "|" + role + "=" + format_elements(f.map());
  return key;
}

std::vector<Diagram> generate_diagrams(Shape shape, const std::vector<Claim>& constraints,
                                       const std::vector<Pool>& pools, const HarnessOptions& opts,
                                       GenerationStats* stats) {
  if (pools.empty()) throw ParameterError("harness needs at least one pool");
  GenerationStats local;
  std::vector<Diagram> out;
  std::set<std::string> keys;
  std::vector<bool> dead(pools.size(), false);
  const std::size_t batch = 8 * worker_count(opts.threads);
  std::size_t attempt = 0;
  while (out.size() < opts.target && attempt < opts.max_attempts) {
    std::vector<std::size_t> ids;
    while (ids.size() < batch && attempt < opts.max_attempts) {
      if (std::all_of(dead.begin(), dead.end(), [](bool b) { return b; })) break;
      if (!dead[attempt % pools.size()]) ids.push_back(attempt);
      ++attempt;
    }
    if (ids.empty()) break;
    std::vector<std::optional<Diagram>> found(ids.size());
    std::vector<char> exhausted(ids.size(), 0);
    parallel_for(ids.size(), opts.threads, [&](std::size_t j) {
      std::mt19937_64 rng(mix(opts.seed, ids[j]));
      Searcher s(shape, constraints, pools[ids[j] % pools.size()], opts.node_budget, &rng);
      found[j] = s.run();
      exhausted[j] = !found[j] && !s.aborted();
    });
    for (std::size_t j = 0; j < ids.size(); ++j) {
      ++local.attempts;
      const std::size_t p = ids[j] % pools.size();
      if (exhausted[j] && !dead[p]) {
        dead[p] = true;
        local.exhausted_pools.push_back(pools[p].name);
      }
      if (!found[j] || out.size() >= opts.target) continue;
      ++local.solutions;
      if (!keys.insert(diagram_key(*found[j])).second) {
        ++local.duplicates;
        continue;
      }
      found[j]->name = pools[p].name + "-" + to_string(shape) + "-" + std::to_string(out.size() + 1);
      out.push_back(std::move(*found[j]));
    }
  }
  if (stats) *stats = std::move(local);
  return out;
}

SearchOutcome search_diagram(Shape shape, const std::vector<Claim>& constraints, const Pool& pool,
                             std::size_t node_budget,
                             const std::function<bool(const Diagram&)>& accept) {
  Searcher s(shape, constraints, pool, node_budget, nullptr, accept);
  SearchOutcome out;
  out.diagram = s.run();
  out.nodes = s.nodes();
  out.complete = out.diagram || !s.aborted();
  return out;
}

LemmaRun run_lemma(const Lemma& lemma, const std::vector<Pool>& pools, const HarnessOptions& opts) {
  LemmaRun run;
  run.lemma = lemma.id;
  run.diagrams = generate_diagrams(lemma.shape, lemma.hypotheses, pools, opts, &run.stats);
  run.certificates.resize(run.diagrams.size());
  parallel_for(run.diagrams.size(), opts.threads,
               [&](std::size_t i) { run.certificates[i] = verify(lemma, run.diagrams[i]); });
  for (const auto& c : run.certificates) {
    switch (c.verdict) {
      case Verdict::verified: ++run.verified; break;
      case Verdict::refuted: ++run.refuted; break;
      case Verdict::hypothesis_failed: ++run.hypothesis_failed; break;
    }
  }
  return run;
}

SnakeRun run_snake(const std::vector<Pool>& pools, const HarnessOptions& opts) {
  SnakeRun run;
  run.diagrams =
      generate_diagrams(Shape::ladder3, find_lemma("snake").hypotheses, pools, opts, &run.stats);
  run.results.resize(run.diagrams.size());
  parallel_for(run.diagrams.size(), opts.threads,
               [&](std::size_t i) { run.results[i] = snake(run.diagrams[i]); });
  for (const auto& r : run.results) {
    switch (r.verdict) {
      case Verdict::verified: ++run.verified; break;
      case Verdict::refuted: ++run.refuted; break;
      case Verdict::hypothesis_failed: ++run.hypothesis_failed; break;
    }
  }
  return run;
}

}  // namespace semimod
