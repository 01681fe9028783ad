#include "semimod/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace semimod {

namespace {

template <class F>
Table tabulate(std::size_t rows, std::size_t cols, F f) {
  std::vector<Index> cells(rows * cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) cells[r * cols + c] = f(r, c);
  }
  return Table(rows, cols, std::move(cells));
}

SemiringPtr build(std::string name, std::size_t n, Index one, auto add, auto mul) {
  Semiring s;
  s.name = std::move(name);
  s.size = n;
  s.add = tabulate(n, n, add);
  s.mul = tabulate(n, n, mul);
  s.one = one;
  return make_semiring(std::move(s));
}

}  // namespace

SemiringPtr make_boolean() {
  return build("B", 2, 1, [](Index a, Index b) { return a | b; },
               [](Index a, Index b) { return a & b; });
}

SemiringPtr make_zmod(std::size_t n) {
  if (n < 2) throw ParameterError("zmod needs n >= 2");
  const auto m = static_cast<Index>(n);
  return build("Z" + std::to_string(n), n, 1, [m](Index a, Index b) { return (a + b) % m; },
               [m](Index a, Index b) { return (a * b) % m; });
}

SemiringPtr make_saturating_naturals(std::size_t k) {
  if (k < 1) throw ParameterError("saturating naturals need k >= 1");
  const auto cap = static_cast<Index>(k);
  return build("T" + std::to_string(k), k + 1, 1,
               [cap](Index a, Index b) { return std::min(a + b, cap); },
               [cap](Index a, Index b) { return std::min(a * b, cap); });
}

SemiringPtr make_truncated_minplus(std::size_t k) {
  if (k < 1) throw ParameterError("truncated min-plus needs k >= 1");
  const auto cap = static_cast<Index>(k);
  // index 0 is top, index v+1 is value v
  auto add = [](Index a, Index b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
  };
  auto mul = [cap](Index a, Index b) -> Index {
    if (a == 0 || b == 0) return 0;
    return std::min(a - 1 + b - 1, cap) + 1;
  };
  return build("Nmin" + std::to_string(k), k + 2, 1, add, mul);
}

SemiringPtr make_cyclic_naturals(std::size_t t, std::size_t p) {
  if (p < 1 || t + p < 2) throw ParameterError("cyclic naturals need p >= 1 and t + p >= 2");
  auto reduce = [t, p](std::size_t x) -> Index {
    return static_cast<Index>(x < t ? x : t + (x - t) % p);
  };
  return build("N(" + std::to_string(t) + "," + std::to_string(p) + ")", t + p, 1,
               [reduce](Index a, Index b) { return reduce(std::size_t{a} + b); },
               [reduce](Index a, Index b) { return reduce(std::size_t{a} * b); });
}

SemiringPtr make_naturals_for_modules(std::size_t n) {
  if (n < 1) throw ParameterError("module size bound must be >= 1");
  std::size_t p = 1;
  for (std::size_t i = 2; i <= n; ++i) p = std::lcm(p, i);
  return make_cyclic_naturals(n, p);
}

SemiringPtr make_product(const SemiringPtr& s1, const SemiringPtr& s2) {
  const auto k = static_cast<Index>(s2->size);
  auto lift = [&](const Table& t1, const Table& t2) {
    return [&t1, &t2, k](Index a, Index b) {
      return t1.at(a / k, b / k) * k + t2.at(a % k, b % k);
    };
  };
  return build(s1->name + "x" + s2->name, s1->size * s2->size, s1->one * k + s2->one,
               lift(s1->add, s2->add), lift(s1->mul, s2->mul));
}

ModulePtr regular_module(const SemiringPtr& ring, std::string name) {
  Semimodule m;
  m.name = name.empty() ? ring->name : std::move(name);
  m.ring = ring;
  m.size = ring->size;
  m.add = ring->add;
  m.action = ring->mul;
  return make_semimodule(std::move(m));
}

ModulePtr natural_action_module(const SemiringPtr& ring, const Table& add, std::string name) {
  const std::size_t n = add.rows();
  const std::size_t k = ring->size;
  if (add.cols() != n || n == 0) throw StructureError("addition table must be square");
  // multiples[m][i] = i-fold sum of m
  std::vector<Index> act(n * k);
  for (Index m = 0; m < n; ++m) {
    Index acc = 0;
    for (Index s = 0; s < k; ++s) {
      act[m * k + s] = acc;
      acc = add.at(acc, m);
    }
  }
  Semimodule mod;
  mod.name = std::move(name);
  mod.ring = ring;
  mod.size = n;
  mod.add = add;
  mod.action = Table(n, k, std::move(act));
  return make_semimodule(std::move(mod));
}

ModulePtr chain_module(const SemiringPtr& ring, std::size_t n, std::string name) {
  return natural_action_module(ring, tabulate(n, n, [](Index a, Index b) { return std::max(a, b); }),
                               name.empty() ? "C" + std::to_string(n) : std::move(name));
}

ModulePtr saturating_module(const SemiringPtr& ring, std::size_t k, std::string name) {
  const auto cap = static_cast<Index>(k);
  return natural_action_module(
      ring, tabulate(k + 1, k + 1, [cap](Index a, Index b) { return std::min(a + b, cap); }),
      name.empty() ? "Sat" + std::to_string(k) : std::move(name));
}

ModulePtr cyclic_group_module(const SemiringPtr& ring, std::size_t n, std::string name) {
  const auto m = static_cast<Index>(n);
  return natural_action_module(ring, tabulate(n, n, [m](Index a, Index b) { return (a + b) % m; }),
                               name.empty() ? "Z" + std::to_string(n) : std::move(name));
}

const Fixtures& fixtures() {
  static const Fixtures f = [] {
    Fixtures x;
    x.boolean = make_boolean();
    x.z2 = make_zmod(2);
    x.z4 = make_zmod(4);
    x.t2 = make_saturating_naturals(2);
    x.t3 = make_saturating_naturals(3);
    x.c3 = chain_module(x.t2, 3, "C3");
    x.t2_monoid = regular_module(x.t2, "T2");
    x.b_monoid = chain_module(x.t2, 2, "B");
    x.z2_module = regular_module(x.z2, "Z2");
    return x;
  }();
  return f;
}

}  // namespace semimod
