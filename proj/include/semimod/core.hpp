#pragma once

// Finite semirings, finite right semimodules and subsemimodules.
//
// Every carrier is {0, ..., n-1} with index 0 reserved for the additive
// zero. Operation tables are dense and row-major. All structures are
// immutable once built and are shared through shared_ptr<const T>.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semimod {

using Index = std::uint32_t;

inline constexpr Index kZero = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table dimensions or entries do not describe a total operation.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A builder or command received an out-of-range parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. g∘f ≠ 0).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something that is a theorem failed to hold; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, std::vector<Index> cells);

  Index at(Index r, Index c) const { return cells_[std::size_t{r} * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Index> row(Index r) const {
    return {cells_.data() + std::size_t{r} * cols_, cols_};
  }
  const std::vector<Index>& cells() const { return cells_; }

  /// Copy with a single cell replaced; used to build mutation fixtures.
  Table with_cell(Index r, Index c, Index value) const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Index> cells_;
};

struct Semiring {
  std::string name;
  std::size_t size = 0;
  Table add;
  Table mul;
  Index one = 1;

  Index plus(Index a, Index b) const { return add.at(a, b); }
  Index times(Index a, Index b) const { return mul.at(a, b); }
};

using SemiringPtr = std::shared_ptr<const Semiring>;

/// Right S-semimodule: commutative monoid (M,+,0) with action M × S → M.
struct Semimodule {
  std::string name;
  SemiringPtr ring;
  std::size_t size = 0;
  Table add;
  Table action;  // size × ring->size

  Index plus(Index a, Index b) const { return add.at(a, b); }
  Index act(Index m, Index s) const { return action.at(m, s); }
};

using ModulePtr = std::shared_ptr<const Semimodule>;

/// Table equality, names ignored.
bool same_structure(const Semiring& a, const Semiring& b);
bool same_structure(const Semimodule& a, const Semimodule& b);

struct Violation {
  std::string axiom;
  std::vector<Index> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view axiom) const;
  std::string summary() const;
};

/// Raised by the make_* constructors when the candidate violates an axiom.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, ValidationReport report)
      : Error(what + ": " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks every semiring axiom on the full tables and reports each failure
/// with a witness. Throws StructureError when the tables are not total.
ValidationReport validate_semiring(const Semiring& candidate);

/// Same for semimodules. The semiring is assumed valid.
ValidationReport validate_semimodule(const Semimodule& candidate);

SemiringPtr make_semiring(Semiring candidate);
ModulePtr make_semimodule(Semimodule candidate);

/// The zero module {0} over `ring`; one shared instance per semiring.
ModulePtr zero_module(const SemiringPtr& ring);

struct Element {
  ModulePtr module;
  Index index = 0;
};

/// m is cancellable iff m + a = m + b implies a = b. On failure the
/// returned pair (a, b) has a ≠ b and m + a = m + b.
std::optional<std::pair<Index, Index>> cancellation_failure(const Semimodule& module,
                                                            Index m);
bool is_cancellable(const Semimodule& module, Index m);
bool is_cancellable(const Element& m);
std::optional<Index> first_non_cancellable(const Semimodule& module);
bool is_cancellative_module(const Semimodule& module);

class Subsemimodule {
 public:
  /// Sorts and deduplicates `members`; throws AxiomError if the set is not
  /// closed or misses zero, StructureError on out-of-range indices.
  static Subsemimodule make(ModulePtr parent, std::vector<Index> members);
  static Subsemimodule whole(ModulePtr parent);
  static Subsemimodule zero(ModulePtr parent);

  const ModulePtr& parent() const { return parent_; }
  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index m) const { return m < mask_.size() && mask_[m]; }
  bool is_whole() const { return members_.size() == parent_->size; }
  bool is_zero() const { return members_.size() == 1; }

  /// Position of a member inside the materialized module (see as_module).
  Index local_index(Index m) const;

  friend bool operator==(const Subsemimodule& a, const Subsemimodule& b);

 private:
  Subsemimodule(ModulePtr parent, std::vector<Index> members);

  ModulePtr parent_;
  std::vector<Index> members_;
  std::vector<bool> mask_;
};

ValidationReport validate_subsemimodule(const Semimodule& parent,
                                        std::span<const Index> members);

bool is_subset(const Subsemimodule& a, const Subsemimodule& b);

/// Smallest subsemimodule containing `generators`.
Subsemimodule generated_by(const ModulePtr& parent, std::span<const Index> generators);

/// All subsemimodules, ordered by member list.
std::vector<Subsemimodule> enumerate_subsemimodules(const ModulePtr& parent);

/// The subsemimodule as a standalone module; member k of the sorted member
/// list becomes index k.
ModulePtr as_module(const Subsemimodule& sub, std::string name = {});

/// { m | m + x1 = x2 for some x1, x2 in X }.
Subsemimodule subtractive_closure(const Subsemimodule& x);
bool is_subtractive(const Subsemimodule& x);

std::string format_elements(std::span<const Index> elements);

}  // namespace semimod
