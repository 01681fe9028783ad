#include "semimod/core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace semimod {

namespace {

std::string join(std::span<const Index> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void check_table(const Table& t, std::size_t rows, std::size_t cols, std::size_t range,
                 const std::string& what) {
  if (t.rows() != rows || t.cols() != cols) {
    throw StructureError(what + " table is " + std::to_string(t.rows()) + "x" +
                         std::to_string(t.cols()) + ", expected " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
  for (Index v : t.cells()) {
    if (v >= range) {
      throw StructureError(what + " table entry " + std::to_string(v) + " out of range 0.." +
                           std::to_string(range - 1));
    }
  }
}

void add_violation(ValidationReport& r, std::string axiom, std::vector<Index> witness,
                   std::string detail) {
  r.violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

// Shared monoid checks for the additive structure of semirings and modules.
void check_commutative_monoid(const Table& add, std::size_t n, ValidationReport& r) {
  for (Index a = 0; a < n; ++a) {
    if (add.at(0, a) != a || add.at(a, 0) != a) {
      add_violation(r, "add-identity", {a}, "0+" + std::to_string(a) + " != " + std::to_string(a));
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (add.at(a, b) != add.at(b, a)) {
        add_violation(r, "add-commutative", {a, b},
                      std::to_string(a) + "+" + std::to_string(b) + " != " + std::to_string(b) +
                          "+" + std::to_string(a));
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (add.at(add.at(a, b), c) != add.at(a, add.at(b, c))) {
          add_violation(r, "add-associative", {a, b, c},
                        "(" + std::to_string(a) + "+" + std::to_string(b) + ")+" +
                            std::to_string(c) + " != " + std::to_string(a) + "+(" +
                            std::to_string(b) + "+" + std::to_string(c) + ")");
        }
      }
    }
  }
}

}  // namespace

Table::Table(std::size_t rows, std::size_t cols, std::vector<Index> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows_ * cols_) {
    throw StructureError("table has " + std::to_string(cells_.size()) + " cells, expected " +
                         std::to_string(rows_ * cols_));
  }
}

Table Table::with_cell(Index r, Index c, Index value) const {
  if (r >= rows_ || c >= cols_) throw StructureError("cell outside table");
  Table copy = *this;
  copy.cells_[std::size_t{r} * cols_ + c] = value;
  return copy;
}

bool same_structure(const Semiring& a, const Semiring& b) {
  return a.size == b.size && a.one == b.one && a.add == b.add && a.mul == b.mul;
}

bool same_structure(const Semimodule& a, const Semimodule& b) {
  if (a.size != b.size || !(a.add == b.add) || !(a.action == b.action)) return false;
  if (a.ring == b.ring) return true;
  return a.ring && b.ring && same_structure(*a.ring, *b.ring);
}

bool ValidationReport::has(std::string_view axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s); first: " << violations.front().axiom << " at ("
      << join(violations.front().witness, ',') << ") " << violations.front().detail;
  return out.str();
}

ValidationReport validate_semiring(const Semiring& s) {
  if (s.size == 0) throw StructureError("semiring carrier is empty");
  check_table(s.add, s.size, s.size, s.size, "addition");
  check_table(s.mul, s.size, s.size, s.size, "multiplication");
  if (s.one >= s.size) throw StructureError("one index out of range");

  ValidationReport r;
  const auto n = static_cast<Index>(s.size);
  check_commutative_monoid(s.add, n, r);
  for (Index a = 0; a < n; ++a) {
    if (s.times(s.one, a) != a || s.times(a, s.one) != a) {
      add_violation(r, "mul-identity", {a}, "1*" + std::to_string(a) + " != " + std::to_string(a));
    }
    if (s.times(0, a) != 0 || s.times(a, 0) != 0) {
      add_violation(r, "zero-absorbing", {a}, "0*" + std::to_string(a) + " != 0");
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        std::vector<Index> w{a, b, c};
        if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c))) {
          add_violation(r, "mul-associative", w, "(ab)c != a(bc)");
        }
        if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c))) {
          add_violation(r, "left-distributive", w, "a(b+c) != ab+ac");
        }
        if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c))) {
          add_violation(r, "right-distributive", w, "(a+b)c != ac+bc");
        }
      }
    }
  }
  if (s.one == kZero) add_violation(r, "zero-ne-one", {0}, "0 == 1");
  return r;
}

ValidationReport validate_semimodule(const Semimodule& m) {
  if (!m.ring) throw StructureError("semimodule has no semiring");
  if (m.size == 0) throw StructureError("semimodule carrier is empty");
  const Semiring& s = *m.ring;
  check_table(m.add, m.size, m.size, m.size, "addition");
  check_table(m.action, m.size, s.size, m.size, "action");

  ValidationReport r;
  const auto n = static_cast<Index>(m.size);
  const auto k = static_cast<Index>(s.size);
  check_commutative_monoid(m.add, n, r);
  for (Index x = 0; x < n; ++x) {
    if (m.act(x, s.one) != x) {
      add_violation(r, "action-unit", {x}, "m*1 != m for m=" + std::to_string(x));
    }
    if (m.act(x, 0) != 0) {
      add_violation(r, "action-zero-scalar", {x}, "m*0_S != 0_M for m=" + std::to_string(x));
    }
  }
  for (Index a = 0; a < k; ++a) {
    if (m.act(0, a) != 0) {
      add_violation(r, "action-zero-element", {a}, "0_M*s != 0_M for s=" + std::to_string(a));
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        if (m.act(m.act(x, a), b) != m.act(x, s.times(a, b))) {
          add_violation(r, "action-compatible", {x, a, b}, "(ms)s' != m(ss')");
        }
        if (m.act(x, s.plus(a, b)) != m.plus(m.act(x, a), m.act(x, b))) {
          add_violation(r, "action-additive-ring", {x, a, b}, "m(s+s') != ms+ms'");
        }
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index a = 0; a < k; ++a) {
        if (m.act(m.plus(x, y), a) != m.plus(m.act(x, a), m.act(y, a))) {
          add_violation(r, "action-additive-module", {x, y, a}, "(m+m')s != ms+m's");
        }
      }
    }
  }
  return r;
}

SemiringPtr make_semiring(Semiring candidate) {
  auto report = validate_semiring(candidate);
  if (!report.ok()) throw AxiomError("semiring " + candidate.name, std::move(report));
  return std::make_shared<const Semiring>(std::move(candidate));
}

ModulePtr make_semimodule(Semimodule candidate) {
  auto report = validate_semimodule(candidate);
  if (!report.ok()) throw AxiomError("semimodule " + candidate.name, std::move(report));
  return std::make_shared<const Semimodule>(std::move(candidate));
}

ModulePtr zero_module(const SemiringPtr& ring) {
  static std::mutex mutex;
  static std::map<const Semiring*, ModulePtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[ring.get()];
  if (!slot || slot->ring != ring) {
    Semimodule z;
    z.name = "0";
    z.ring = ring;
    z.size = 1;
    z.add = Table(1, 1, {0});
    z.action = Table(1, ring->size, std::vector<Index>(ring->size, 0));
    slot = std::make_shared<const Semimodule>(std::move(z));
  }
  return slot;
}

std::optional<std::pair<Index, Index>> cancellation_failure(const Semimodule& module, Index m) {
  const auto n = static_cast<Index>(module.size);
  std::vector<Index> seen(n, n);
  for (Index a = 0; a < n; ++a) {
    Index sum = module.plus(m, a);
    if (seen[sum] != n) return std::pair{seen[sum], a};
    seen[sum] = a;
  }
  return std::nullopt;
}

bool is_cancellable(const Semimodule& module, Index m) {
  return !cancellation_failure(module, m).has_value();
}

bool is_cancellable(const Element& m) {
  if (!m.module || m.index >= m.module->size) throw ParameterError("element out of range");
  return is_cancellable(*m.module, m.index);
}

std::optional<Index> first_non_cancellable(const Semimodule& module) {
  for (Index m = 0; m < module.size; ++m) {
    if (!is_cancellable(module, m)) return m;
  }
  return std::nullopt;
}

bool is_cancellative_module(const Semimodule& module) {
  return !first_non_cancellable(module).has_value();
}

ValidationReport validate_subsemimodule(const Semimodule& parent,
                                        std::span<const Index> members) {
  std::vector<bool> in(parent.size, false);
  for (Index m : members) {
    if (m >= parent.size) {
      throw StructureError("member " + std::to_string(m) + " outside carrier of " + parent.name);
    }
    in[m] = true;
  }
  ValidationReport r;
  if (!in[0]) add_violation(r, "contains-zero", {0}, "0 is not a member");
  for (Index a : members) {
    for (Index b : members) {
      if (!in[parent.plus(a, b)]) {
        add_violation(r, "closed-add", {a, b}, "sum leaves the subset");
      }
    }
    for (Index s = 0; s < parent.ring->size; ++s) {
      if (!in[parent.act(a, s)]) {
        add_violation(r, "closed-action", {a, s}, "action leaves the subset");
      }
    }
  }
  return r;
}

Subsemimodule::Subsemimodule(ModulePtr parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_->size, false) {
  for (Index m : members_) mask_[m] = true;
}

Subsemimodule Subsemimodule::make(ModulePtr parent, std::vector<Index> members) {
  if (!parent) throw StructureError("subsemimodule without parent");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto report = validate_subsemimodule(*parent, members);
  if (!report.ok()) {
    throw AxiomError("subset " + format_elements(members) + " of " + parent->name,
                     std::move(report));
  }
  return Subsemimodule(std::move(parent), std::move(members));
}

Subsemimodule Subsemimodule::whole(ModulePtr parent) {
  std::vector<Index> all(parent->size);
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return Subsemimodule(std::move(parent), std::move(all));
}

Subsemimodule Subsemimodule::zero(ModulePtr parent) {
  return Subsemimodule(std::move(parent), {0});
}

Index Subsemimodule::local_index(Index m) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), m);
  if (it == members_.end() || *it != m) {
    throw ParameterError("element " + std::to_string(m) + " is not a member");
  }
  return static_cast<Index>(it - members_.begin());
}

bool operator==(const Subsemimodule& a, const Subsemimodule& b) {
  return a.members_ == b.members_ &&
         (a.parent_ == b.parent_ || same_structure(*a.parent_, *b.parent_));
}

bool is_subset(const Subsemimodule& a, const Subsemimodule& b) {
  return std::all_of(a.members().begin(), a.members().end(),
                     [&](Index m) { return b.contains(m); });
}

Subsemimodule generated_by(const ModulePtr& parent, std::span<const Index> generators) {
  std::vector<bool> in(parent->size, false);
  std::vector<Index> members{0};
  in[0] = true;
  auto push = [&](Index m) {
    if (m >= parent->size) throw StructureError("generator outside carrier");
    if (!in[m]) {
      in[m] = true;
      members.push_back(m);
    }
  };
  for (Index g : generators) push(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    Index a = members[i];
    for (Index s = 0; s < parent->ring->size; ++s) push(parent->act(a, s));
    for (std::size_t j = 0; j <= i; ++j) push(parent->plus(a, members[j]));
  }
  return Subsemimodule::make(parent, std::move(members));
}

std::vector<Subsemimodule> enumerate_subsemimodules(const ModulePtr& parent) {
  std::set<std::vector<Index>> seen;
  std::vector<std::vector<Index>> frontier{{0}};
  seen.insert({0});
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto current = frontier[i];
    for (Index m = 0; m < parent->size; ++m) {
      if (std::binary_search(current.begin(), current.end(), m)) continue;
      auto gens = current;
      gens.push_back(m);
      auto next = generated_by(parent, gens).members();
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Subsemimodule> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.push_back(Subsemimodule::make(parent, members));
  return out;
}

ModulePtr as_module(const Subsemimodule& sub, std::string name) {
  const auto& parent = *sub.parent();
  const auto& mem = sub.members();
  const std::size_t n = mem.size();
  const std::size_t k = parent.ring->size;
  std::vector<Index> add(n * n);
  std::vector<Index> act(n * k);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) add[i * n + j] = sub.local_index(parent.plus(mem[i], mem[j]));
    for (Index s = 0; s < k; ++s) act[i * k + s] = sub.local_index(parent.act(mem[i], s));
  }
  Semimodule m;
  m.name = name.empty() ? parent.name + format_elements(mem) : std::move(name);
  m.ring = parent.ring;
  m.size = n;
  m.add = Table(n, n, std::move(add));
  m.action = Table(n, k, std::move(act));
  return make_semimodule(std::move(m));
}

Subsemimodule subtractive_closure(const Subsemimodule& x) {
  const auto& parent = *x.parent();
  std::vector<Index> members;
  for (Index m = 0; m < parent.size; ++m) {
    for (Index x1 : x.members()) {
      if (x.contains(parent.plus(m, x1))) {
        members.push_back(m);
        break;
      }
    }
  }
  return Subsemimodule::make(x.parent(), std::move(members));
}

bool is_subtractive(const Subsemimodule& x) { return subtractive_closure(x) == x; }

std::string format_elements(std::span<const Index> elements) {
  return "{" + join(elements, ',') + "}";
}

}  // namespace semimod
