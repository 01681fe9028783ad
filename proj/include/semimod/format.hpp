#pragma once

// Line-oriented workspace files.
//
//   # comment
//   semiring T2 size=3
//   add: 0,1,2; 1,2,2; 2,2,2
//   mul: 0,0,0; 0,1,2; 0,2,2
//   end
//   module C3 over=T2 size=3
//   add: 0,1,2; 1,1,2; 2,2,2
//   act: 0,0,0; 0,1,1; 0,2,2      (optional when the action is forced)
//   end
//   sub L of=C3 members=0,1
//   end
//   morphism f from=C3 to=C3 map=0,1,1
//   end
//   sequence s arrows=f,g
//   end
//   diagram d
//   row 1: A f B g C
//   row 2: X u Y v Z
//   col 1: A a X
//   hyp: alpha2 i-uniform
//   end
//
// A semiring may carry `one: <i>` (default 1). Diagram rows and columns name
// workspace modules and morphisms; roles follow from their positions.

#include <map>

#include "semimod/diagram.hpp"

namespace semimod {

struct ParseIssue {
  enum class Kind { syntax, reference, axiom, structure };
  Kind kind = Kind::syntax;
  std::string file;
  std::size_t line = 0;
  std::string message;
};

std::string to_string(ParseIssue::Kind k);
std::string to_string(const ParseIssue& issue);

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<ParseIssue> issues);
  const std::vector<ParseIssue>& issues() const { return issues_; }

 private:
  std::vector<ParseIssue> issues_;
};

struct NamedSub {
  std::string name;
  Subsemimodule sub;
};

struct NamedSequence {
  std::string name;
  Sequence sequence;
};

class Workspace {
 public:
  /// Each add_* throws ParameterError on a duplicate name.
  void add_semiring(SemiringPtr s);
  void add_module(ModulePtr m);
  void add_sub(std::string name, Subsemimodule sub);
  void add_morphism(Morphism f);
  void add_sequence(std::string name, Sequence seq);
  void add_diagram(Diagram d);

  const std::vector<SemiringPtr>& semirings() const { return semirings_; }
  const std::vector<ModulePtr>& modules() const { return modules_; }
  const std::vector<NamedSub>& subs() const { return subs_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const std::vector<NamedSequence>& sequences() const { return sequences_; }
  const std::vector<Diagram>& diagrams() const { return diagrams_; }

  /// Lookups throw ParameterError for unknown names.
  const SemiringPtr& semiring(const std::string& name) const;
  const ModulePtr& module(const std::string& name) const;
  const Subsemimodule& sub(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const Sequence& sequence(const std::string& name) const;
  const Diagram& diagram(const std::string& name) const;

  bool has_semiring(const std::string& name) const;
  bool has_module(const std::string& name) const;
  bool has_morphism(const std::string& name) const;

  /// Names, tables and references agree.
  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  std::vector<SemiringPtr> semirings_;
  std::vector<ModulePtr> modules_;
  std::vector<NamedSub> subs_;
  std::vector<Morphism> morphisms_;
  std::vector<NamedSequence> sequences_;
  std::vector<Diagram> diagrams_;
};

/// Parses and validates; throws ParseError listing every located issue.
Workspace parse_workspace(std::string_view text, const std::string& file = "<input>");
/// Files are read in order into one workspace; later files may refer to
/// earlier ones. Throws ParseError (an unreadable file is a syntax issue).
Workspace parse_files(const std::vector<std::string>& paths);

std::string serialize(const Workspace& ws);

/// Workspace holding the given diagrams and everything they reference, with
/// names made unique and file-safe.
Workspace workspace_from_diagrams(const std::vector<Diagram>& diagrams);

}  // namespace semimod
