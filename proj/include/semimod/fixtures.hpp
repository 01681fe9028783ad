#pragma once

// Named small semirings and semimodules.

#include "semimod/core.hpp"

namespace semimod {

/// B = ({0,1}, or, and).
SemiringPtr make_boolean();

/// Z/n as a ring, n >= 2.
SemiringPtr make_zmod(std::size_t n);

/// T_k = {0..k} with a+b = min(a+b,k) and a*b = min(ab,k), k >= 1.
/// Finite truncation of the naturals.
SemiringPtr make_saturating_naturals(std::size_t k);

/// N_min truncated at k: carrier {0..k, top}, addition min (top neutral),
/// multiplication saturating + (0 neutral, top absorbing). Index 0 is top,
/// index i+1 is the value i.
SemiringPtr make_truncated_minplus(std::size_t k);

/// Quotient of the naturals by x ~ y iff x = y or x, y >= t and x = y mod p.
/// Index i is the class of i; carrier size t + p. Requires t + p >= 2.
SemiringPtr make_cyclic_naturals(std::size_t t, std::size_t p);

/// A cyclic quotient of the naturals through which every commutative monoid
/// with at most n elements is a semimodule: t = n, p = lcm(1..n).
SemiringPtr make_naturals_for_modules(std::size_t n);

/// Componentwise product; index a*|S2| + b.
SemiringPtr make_product(const SemiringPtr& s1, const SemiringPtr& s2);

/// S as a right module over itself.
ModulePtr regular_module(const SemiringPtr& ring, std::string name = {});

/// Commutative monoid with action m*s = s-fold sum of m, for semirings whose
/// elements are all sums of 1 (index i = i-fold sum of 1). Throws AxiomError
/// if the induced action is not a valid semimodule action.
ModulePtr natural_action_module(const SemiringPtr& ring, const Table& add, std::string name);

/// ({0..n-1}, max) over `ring` with the natural action.
ModulePtr chain_module(const SemiringPtr& ring, std::size_t n, std::string name = {});

/// ({0..k}, saturating +) over `ring` with the natural action.
ModulePtr saturating_module(const SemiringPtr& ring, std::size_t k, std::string name = {});

/// Z/n under addition over `ring` with the natural action.
ModulePtr cyclic_group_module(const SemiringPtr& ring, std::size_t n, std::string name = {});

/// Shared named fixtures.
struct Fixtures {
  SemiringPtr boolean;  // B
  SemiringPtr z2;
  SemiringPtr z4;
  SemiringPtr t2;
  SemiringPtr t3;
  ModulePtr c3;          // ({0,1,2}, max) over T2
  ModulePtr t2_monoid;   // T2 regular
  ModulePtr b_monoid;    // ({0,1}, or) over T2
  ModulePtr z2_module;   // Z2 regular
};

const Fixtures& fixtures();

}  // namespace semimod
