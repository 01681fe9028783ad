#pragma once

// Commutative diagrams, declarative lemma statements and their verifiers.
//
// A diagram binds role names (L1, f1, alpha2, ...) to semimodules and
// morphisms. Three shapes are supported:
//
//   ladder3   L1 -f1-> M1 -g1-> N1          columns alpha1 alpha2 alpha3
//             L2 -f2-> M2 -g2-> N2
//
//   ladder5   U1 -d1-> L1 -f1-> M1 -g1-> N1 -h1-> V1
//             U2 -d2-> L2 -f2-> M2 -g2-> N2 -h2-> V2
//             columns gamma alpha1 alpha2 alpha3 delta
//
//   grid3     rows Li -fi-> Mi -gi-> Ni for i = 1, 2, 3
//             columns alpha1..3 (row 1 to 2) and beta1..3 (row 2 to 3)

#include <map>

#include "semimod/exactness.hpp"

namespace semimod {

enum class Shape { ladder3, ladder5, grid3 };

std::string to_string(Shape s);

struct ShapeInfo {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::string>> objects;      // rows x cols
  std::vector<std::vector<std::string>> horizontals;  // rows x (cols-1)
  std::vector<std::vector<std::string>> verticals;    // (rows-1) x cols
};

const ShapeInfo& shape_info(Shape s);
/// Source and target object roles of an arrow role.
std::pair<std::string, std::string> endpoints(Shape s, const std::string& arrow_role);
bool is_object_role(Shape s, const std::string& role);
bool is_arrow_role(Shape s, const std::string& role);

struct Square {
  std::string top, right, left, bottom;  // right∘top = bottom∘left
};
std::vector<Square> squares(Shape s);

struct Diagram {
  std::string name;
  Shape shape = Shape::ladder3;
  std::map<std::string, ModulePtr> objects;
  std::map<std::string, Morphism> arrows;
  /// Declared tags such as "alpha2 i-uniform", "M1 cancellative" or
  /// "exact f1 g1"; each is re-verified by the verifiers.
  std::vector<std::string> hypotheses;

  /// Objects are taken from the arrows' endpoints. Throws ParameterError on
  /// unknown roles, StructureError on disagreeing endpoints.
  static Diagram from_arrows(Shape shape, std::map<std::string, Morphism> arrows,
                             std::string name = {});

  bool complete() const;
  const Morphism& arrow(const std::string& role) const;
  const ModulePtr& object(const std::string& role) const;
};

/// Throws StructureError when a bound arrow disagrees with its bound objects.
void check_structure(const Diagram& d);

/// First failing bound square, as a hypothesis flag.
Flag commutes(const Diagram& d, const Square& sq);

enum class Property {
  injective,
  surjective,
  isomorphism,
  k_uniform,
  i_uniform,
  uniform,
  semi_mono,
  semi_epi,
  cancellative,
};

std::string to_string(Property p);
std::optional<Property> parse_property(std::string_view text);
Flag evaluate(Property p, const Morphism& f);

struct Claim {
  enum class Kind { arrow, module_cancellative, exact, all_of, iff, negation };

  Kind kind = Kind::arrow;
  std::string a;  // arrow or object role; first arrow for exact
  std::string b;  // second arrow for exact
  Property property = Property::injective;
  std::vector<Claim> parts;
  std::string text;

  static Claim arrow_has(std::string role, Property p);
  static Claim cancellative_object(std::string role);
  static Claim exact_at(std::string f, std::string g, std::string at);
  static Claim all(std::vector<Claim> parts, std::string text = {});
  static Claim equivalent(Claim left, Claim right);
  static Claim negation(Claim c);

  /// Every role the claim reads.
  std::vector<std::string> roles() const;
};

Flag evaluate(const Claim& c, const Diagram& d);

/// Parses a declared hypothesis tag; throws ParameterError.
Claim parse_tag(Shape shape, const std::string& tag);

struct Lemma {
  std::string id;
  Shape shape;
  std::string statement;
  std::vector<Claim> hypotheses;
  std::vector<Claim> conclusions;
};

/// Every statement the verifiers know, in a fixed order.
const std::vector<Lemma>& lemma_catalog();
/// Throws ParameterError for unknown ids.
const Lemma& find_lemma(const std::string& id);

enum class Verdict { verified, refuted, hypothesis_failed };
std::string to_string(Verdict v);

struct Check {
  std::string description;
  Flag result;
};

struct Certificate {
  std::string lemma;
  std::string diagram;
  Verdict verdict = Verdict::hypothesis_failed;
  std::vector<Check> hypotheses;
  std::vector<Check> conclusions;
  std::string message;
};

/// Checks squares, declared tags and the lemma hypotheses from the raw
/// tables, then the conclusions.
Certificate verify(const Lemma& lemma, const Diagram& d);
Certificate verify(const std::string& lemma_id, const Diagram& d);

/// Hypothesis checks only; used by generators.
bool hypotheses_hold(const Lemma& lemma, const Diagram& d);

Certificate verify_lemma_short(const Diagram& d, int clause);
/// clause is one of "1a", "1b", "2a", "2b", "3", "3s" (3 with alpha2 i-uniform).
Certificate verify_lemma_diagram(const Diagram& d, const std::string& clause);
Certificate verify_cor_short5(const Diagram& d, int clause);
Certificate verify_short_five(const Diagram& d);
/// clause is one of "1a", "1b", "2", "2s", "3".
Certificate verify_5_details(const Diagram& d, const std::string& clause);
Certificate verify_five(const Diagram& d, int clause);
/// direction is "first-from-third", "third-from-first" or "both".
Certificate verify_nine(const Diagram& d, const std::string& direction = "both");
/// clause is "1", "2" or "2s".
Certificate verify_9_1(const Diagram& d, const std::string& clause);
Certificate verify_9_3(const Diagram& d, int clause);

struct SnakeOptions {
  /// Order in which candidate m1 in M1 and l2 in L2 are tried when building
  /// delta; empty means index order.
  std::vector<Index> m1_order;
  std::vector<Index> l2_order;
  /// Require alpha2 only k-uniform instead of uniform; used to probe the
  /// necessity of that hypothesis.
  bool weak_alpha2 = false;
};

struct SnakeResult {
  Verdict verdict = Verdict::hypothesis_failed;
  std::string message;
  std::vector<Check> hypotheses;
  /// Columns are exact (all alpha uniform) rather than only the weaker set.
  bool strong_hypotheses = false;

  ModulePtr ker1, ker2, ker3, coker1, coker2, coker3;
  std::optional<Subsemimodule> ker_alpha1, ker_alpha2, ker_alpha3;
  std::optional<QuotientModule> coker_alpha1, coker_alpha2, coker_alpha3;
  Morphism f_k, g_k, f_c, g_c, delta;
  /// Clause checks; a clause whose extra hypothesis fails is reported as
  /// not applicable and does not affect the verdict.
  struct Clause {
    std::string id;
    bool applicable = true;
    Check check;
  };
  std::vector<Clause> clauses;
};

SnakeResult snake(const Diagram& d, const SnakeOptions& options = {});

std::string describe(const Certificate& c);
std::string describe(const SnakeResult& r);

}  // namespace semimod
