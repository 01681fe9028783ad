#include "semimod/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace semimod {

namespace {

using Perm = std::vector<Index>;

// All permutations of {0..n-1} fixing 0, in lexicographic order.
std::vector<Perm> zero_fixing_perms(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (n > 1 && std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

std::vector<Index> permuted_table(const Table& t, const Perm& p, bool permute_cols) {
  const std::size_t rows = t.rows(), cols = t.cols();
  std::vector<Index> out(rows * cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      Index nc = permute_cols ? p[c] : c;
      out[std::size_t{p[r]} * cols + nc] = p[t.at(r, c)];
    }
  }
  return out;
}

bool is_canonical_monoid(const Table& add, const std::vector<Perm>& perms) {
  for (const auto& p : perms) {
    if (permuted_table(add, p, true) < add.cells()) return false;
  }
  return true;
}

// Backtracking over the upper triangle of the non-identity block.
void monoid_tables(std::size_t n, std::vector<Table>& out) {
  if (n == 1) {
    out.emplace_back(1, 1, std::vector<Index>{0});
    return;
  }
  const Index unset = static_cast<Index>(n);
  std::vector<Index> cells(n * n, unset);
  for (Index i = 0; i < n; ++i) {
    cells[i] = i;
    cells[i * n] = i;
  }
  std::vector<std::pair<Index, Index>> slots;
  for (Index i = 1; i < n; ++i) {
    for (Index j = i; j < n; ++j) slots.emplace_back(i, j);
  }
  auto at = [&](Index a, Index b) { return cells[a * n + b]; };
  auto associative_so_far = [&] {
    for (Index a = 1; a < n; ++a) {
      for (Index b = 1; b < n; ++b) {
        Index ab = at(a, b);
        if (ab == unset) continue;
        for (Index c = 1; c < n; ++c) {
          Index bc = at(b, c);
          if (bc == unset) continue;
          Index l = at(ab, c), r = at(a, bc);
          if (l != unset && r != unset && l != r) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == slots.size()) {
      out.emplace_back(n, n, cells);
      return;
    }
    auto [i, j] = slots[k];
    for (Index v = 0; v < n; ++v) {
      cells[i * n + j] = v;
      cells[j * n + i] = v;
      if (associative_so_far()) self(self, k + 1);
    }
    cells[i * n + j] = unset;
    cells[j * n + i] = unset;
  };
  rec(rec, 0);
}

// Additive endomorphisms of a monoid table, sorted.
std::vector<std::vector<Index>> monoid_endomorphisms(const Table& add) {
  const std::size_t n = add.rows();
  std::vector<std::vector<Index>> out;
  std::vector<Index> map(n, 0);
  while (true) {
    bool ok = map[0] == 0;
    for (Index a = 0; ok && a < n; ++a) {
      for (Index b = a; ok && b < n; ++b) ok = map[add.at(a, b)] == add.at(map[a], map[b]);
    }
    if (ok) out.push_back(map);
    std::size_t pos = 1;
    while (pos < n && ++map[pos] == n) map[pos++] = 0;
    if (pos >= n) break;
  }
  return out;
}

// Every action table for `add` over `ring`, as full n x |S| cell vectors.
std::vector<std::vector<Index>> actions_for(const Table& add, const Semiring& ring) {
  const std::size_t n = add.rows();
  const std::size_t k = ring.size;
  const auto endos = monoid_endomorphisms(add);
  std::vector<std::size_t> choice(k, 0);  // endomorphism per scalar
  std::vector<bool> assigned(k, false);
  std::vector<std::vector<Index>> out;

  auto phi = [&](Index s) -> const std::vector<Index>& { return endos[choice[s]]; };
  auto consistent = [&](Index s) {
    const auto& f = phi(s);
    if (s == 0) {
      for (Index m = 0; m < n; ++m) {
        if (f[m] != 0) return false;
      }
    }
    if (s == ring.one) {
      for (Index m = 0; m < n; ++m) {
        if (f[m] != m) return false;
      }
    }
    for (Index t = 0; t < k; ++t) {
      if (!assigned[t]) continue;
      for (auto [a, b] : {std::pair{s, t}, std::pair{t, s}}) {
        const auto& fa = phi(a);
        const auto& fb = phi(b);
        Index sum = ring.plus(a, b), prod = ring.times(a, b);
        for (Index m = 0; m < n; ++m) {
          if (assigned[sum] && phi(sum)[m] != add.at(fa[m], fb[m])) return false;
          if (assigned[prod] && phi(prod)[m] != fb[fa[m]]) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, Index s) -> void {
    if (s == k) {
      std::vector<Index> cells(n * k);
      for (Index m = 0; m < n; ++m) {
        for (Index t = 0; t < k; ++t) cells[m * k + t] = endos[choice[t]][m];
      }
      out.push_back(std::move(cells));
      return;
    }
    assigned[s] = true;
    for (std::size_t e = 0; e < endos.size(); ++e) {
      choice[s] = e;
      if (consistent(s)) self(self, s + 1);
    }
    assigned[s] = false;
  };
  rec(rec, 0);
  return out;
}

std::vector<Index> natural_action(const Table& add, std::size_t k) {
  const std::size_t n = add.rows();
  std::vector<Index> act(n * k);
  for (Index m = 0; m < n; ++m) {
    Index acc = 0;
    for (Index s = 0; s < k; ++s) {
      act[m * k + s] = acc;
      acc = add.at(acc, m);
    }
  }
  return act;
}

std::vector<Index> canonical_action(const Table& add, const Table& action,
                                    const std::vector<Perm>& perms) {
  std::vector<Index> best = action.cells();
  for (const auto& p : perms) {
    if (permuted_table(add, p, true) != add.cells()) continue;
    auto cand = permuted_table(action, p, false);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

}  // namespace

std::vector<Table> enumerate_commutative_monoids(std::size_t n) {
  if (n == 0) throw ParameterError("monoid size must be positive");
  std::vector<Table> all;
  monoid_tables(n, all);
  const auto perms = zero_fixing_perms(n);
  std::vector<Table> out;
  for (auto& t : all) {
    if (is_canonical_monoid(t, perms)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const Table& a, const Table& b) { return a.cells() < b.cells(); });
  return out;
}

std::vector<Index> canonical_form(const Semimodule& m) {
  std::vector<Index> best;
  for (const auto& p : zero_fixing_perms(m.size)) {
    auto cand = permuted_table(m.add, p, true);
    auto act = permuted_table(m.action, p, false);
    cand.insert(cand.end(), act.begin(), act.end());
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

bool has_natural_indexing(const Semiring& s) {
  Index acc = 0;
  for (Index i = 0; i < s.size; ++i) {
    if (acc != i) return false;
    acc = s.plus(acc, s.one);
  }
  return true;
}

Universe enumerate_semimodules(const UniverseSpec& spec) {
  if (!spec.semiring) throw ParameterError("universe needs a semiring");
  if (spec.max_module_size == 0) throw ParameterError("max_module_size must be at least 1");
  Universe u;
  u.spec = spec;
  const auto& ring = *spec.semiring;
  const bool natural = has_natural_indexing(ring);
  for (std::size_t n = 1; n <= spec.max_module_size; ++n) {
    const auto perms = zero_fixing_perms(n);
    std::size_t counter = 0;
    for (const auto& add : enumerate_commutative_monoids(n)) {
      std::vector<std::vector<Index>> actions;
      if (natural) {
        actions.push_back(natural_action(add, ring.size));
      } else {
        std::set<std::vector<Index>> seen;
        for (auto& a : actions_for(add, ring)) {
          if (seen.insert(canonical_action(add, Table(n, ring.size, a), perms)).second) {
            actions.push_back(std::move(a));
          }
        }
      }
      std::vector<std::vector<Index>> canon;
      for (auto& a : actions) canon.push_back(canonical_action(add, Table(n, ring.size, a), perms));
      std::sort(canon.begin(), canon.end());
      for (auto& a : canon) {
        Semimodule cand;
        cand.ring = spec.semiring;
        cand.size = n;
        cand.add = add;
        cand.action = Table(n, ring.size, std::move(a));
        if (!validate_semimodule(cand).ok()) continue;
        if (u.modules.size() >= spec.max_modules) {
          u.truncated = true;
          return u;
        }
        cand.name = "M" + std::to_string(n) + "_" + std::to_string(++counter);
        u.modules.push_back(std::make_shared<const Semimodule>(std::move(cand)));
      }
    }
  }
  return u;
}

std::optional<Morphism> oracle_iso_exists(const ModulePtr& m, const ModulePtr& n) {
  if (!same_ring(m->ring, n->ring)) throw StructureError("iso across different semirings");
  if (m->size != n->size) return std::nullopt;
  const std::size_t k = m->ring->size;
  for (const auto& p : zero_fixing_perms(m->size)) {
    bool ok = true;
    for (Index a = 0; ok && a < m->size; ++a) {
      for (Index b = 0; ok && b < m->size; ++b) ok = p[m->plus(a, b)] == n->plus(p[a], p[b]);
      for (Index s = 0; ok && s < k; ++s) ok = p[m->act(a, s)] == n->act(p[a], s);
    }
    if (ok) return Morphism::unchecked(m, n, p, "iso");
  }
  return std::nullopt;
}

HomTable::HomTable(std::vector<ModulePtr> modules, unsigned threads) : modules_(std::move(modules)) {
  const std::size_t n = modules_.size();
  homs_.resize(n * n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([this, t, threads, n] {
      for (std::size_t i = t; i < n * n; i += threads) {
        homs_[i] = enumerate_hom(modules_[i / n], modules_[i % n]);
      }
    });
  }
  for (auto& th : pool) th.join();
}

std::size_t HomTable::index_of(const ModulePtr& m) const {
  for (std::size_t i = 0; i < modules_.size(); ++i) {
    if (modules_[i] == m) return i;
  }
  throw ParameterError("module " + m->name + " is not in the table");
}

std::vector<Morphism> HomTable::all() const {
  std::vector<Morphism> out;
  for (const auto& h : homs_) out.insert(out.end(), h.begin(), h.end());
  return out;
}

Flag monomorphism_bruteforce(const Morphism& f, const HomTable& tests) {
  const std::size_t dom = tests.index_of(f.domain());
  for (std::size_t t = 0; t < tests.modules().size(); ++t) {
    std::map<std::vector<Index>, const Morphism*> seen;
    for (const auto& h : tests.hom(t, dom)) {
      auto [it, inserted] = seen.emplace(compose(f, h).map(), &h);
      if (!inserted) {
        return Flag::no("test object " + tests.modules()[t]->name + ": maps " +
                        format_elements(it->second->map()) + " and " + format_elements(h.map()));
      }
    }
  }
  return Flag::yes();
}

Flag epimorphism_bruteforce(const Morphism& f, const HomTable& tests) {
  const std::size_t cod = tests.index_of(f.codomain());
  for (std::size_t t = 0; t < tests.modules().size(); ++t) {
    std::map<std::vector<Index>, const Morphism*> seen;
    for (const auto& h : tests.hom(cod, t)) {
      auto [it, inserted] = seen.emplace(compose(h, f).map(), &h);
      if (!inserted) {
        return Flag::no("test object " + tests.modules()[t]->name + ": maps " +
                        format_elements(it->second->map()) + " and " + format_elements(h.map()));
      }
    }
  }
  return Flag::yes();
}

Flag regular_epimorphism(const Morphism& f) {
  const auto q = quotient(kernel_pair_congruence(f));
  const auto d = descend(q, f);
  if (!d) throw InternalError("map not constant on its kernel pair classes");
  if (auto s = surjective(*d); !s) return s;
  return injective(*d);
}

namespace {

std::optional<Morphism> bourne_iso_onto(const Morphism& f, const Subsemimodule& target) {
  const auto q = quotient(kernel(f));
  const auto d = descend(q, f);
  if (!d) return std::nullopt;
  const auto target_module = as_module(target);
  for (Index x : d->map()) {
    if (!target.contains(x)) return std::nullopt;
  }
  auto iso = corestrict(*d, target, target_module);
  if (!injective(iso) || !surjective(iso)) return std::nullopt;
  return iso;
}

}  // namespace

std::optional<Morphism> bourne_coimage_iso(const Morphism& f) {
  return bourne_iso_onto(f, image(f));
}

std::optional<Morphism> bourne_closure_iso(const Morphism& f) {
  return bourne_iso_onto(f, subtractive_closure(image(f)));
}

}  // namespace semimod
