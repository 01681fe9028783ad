#include "semimod/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "semimod/enumerate.hpp"

namespace semimod {

std::string to_string(ParseIssue::Kind k) {
  switch (k) {
    case ParseIssue::Kind::syntax: return "syntax";
    case ParseIssue::Kind::reference: return "reference";
    case ParseIssue::Kind::axiom: return "axiom";
    case ParseIssue::Kind::structure: return "structure";
  }
  return "?";
}

std::string to_string(const ParseIssue& issue) {
  return issue.file + ":" + std::to_string(issue.line) + ": " + to_string(issue.kind) +
         " error: " + issue.message;
}

namespace {

std::string join_issues(const std::vector<ParseIssue>& issues) {
  std::string out;
  for (const auto& i : issues) out += (out.empty() ? "" : "\n") + to_string(i);
  return out;
}

template <class T>
const T* find_named(const std::vector<T>& items, const std::string& name) {
  for (const auto& x : items) {
    if (x->name == name) return &x;
  }
  return nullptr;
}

}  // namespace

ParseError::ParseError(std::vector<ParseIssue> issues)
    : Error(join_issues(issues)), issues_(std::move(issues)) {}

void Workspace::add_semiring(SemiringPtr s) {
  if (has_semiring(s->name)) throw ParameterError("duplicate semiring " + s->name);
  semirings_.push_back(std::move(s));
}

void Workspace::add_module(ModulePtr m) {
  if (has_module(m->name)) throw ParameterError("duplicate module " + m->name);
  modules_.push_back(std::move(m));
}

void Workspace::add_sub(std::string name, Subsemimodule sub) {
  for (const auto& s : subs_) {
    if (s.name == name) throw ParameterError("duplicate sub " + name);
  }
  subs_.push_back({std::move(name), std::move(sub)});
}

void Workspace::add_morphism(Morphism f) {
  if (has_morphism(f.name())) throw ParameterError("duplicate morphism " + f.name());
  morphisms_.push_back(std::move(f));
}

void Workspace::add_sequence(std::string name, Sequence seq) {
  for (const auto& s : sequences_) {
    if (s.name == name) throw ParameterError("duplicate sequence " + name);
  }
  sequences_.push_back({std::move(name), std::move(seq)});
}

void Workspace::add_diagram(Diagram d) {
  for (const auto& x : diagrams_) {
    if (x.name == d.name) throw ParameterError("duplicate diagram " + d.name);
  }
  diagrams_.push_back(std::move(d));
}

const SemiringPtr& Workspace::semiring(const std::string& name) const {
  if (auto p = find_named(semirings_, name)) return *p;
  throw ParameterError("unknown semiring " + name);
}

const ModulePtr& Workspace::module(const std::string& name) const {
  if (auto p = find_named(modules_, name)) return *p;
  throw ParameterError("unknown module " + name);
}

const Subsemimodule& Workspace::sub(const std::string& name) const {
  for (const auto& s : subs_) {
    if (s.name == name) return s.sub;
  }
  throw ParameterError("unknown sub " + name);
}

const Morphism& Workspace::morphism(const std::string& name) const {
  for (const auto& f : morphisms_) {
    if (f.name() == name) return f;
  }
  throw ParameterError("unknown morphism " + name);
}

const Sequence& Workspace::sequence(const std::string& name) const {
  for (const auto& s : sequences_) {
    if (s.name == name) return s.sequence;
  }
  throw ParameterError("unknown sequence " + name);
}

const Diagram& Workspace::diagram(const std::string& name) const {
  for (const auto& d : diagrams_) {
    if (d.name == name) return d;
  }
  throw ParameterError("unknown diagram " + name);
}

bool Workspace::has_semiring(const std::string& name) const {
  return find_named(semirings_, name) != nullptr;
}

bool Workspace::has_module(const std::string& name) const {
  return find_named(modules_, name) != nullptr;
}

bool Workspace::has_morphism(const std::string& name) const {
  return std::any_of(morphisms_.begin(), morphisms_.end(),
                     [&](const Morphism& f) { return f.name() == name; });
}

bool operator==(const Workspace& a, const Workspace& b) {
  auto same_rings = std::equal(
      a.semirings_.begin(), a.semirings_.end(), b.semirings_.begin(), b.semirings_.end(),
      [](const SemiringPtr& x, const SemiringPtr& y) {
        return x->name == y->name && x->one == y->one && same_structure(*x, *y);
      });
  auto same_modules = std::equal(
      a.modules_.begin(), a.modules_.end(), b.modules_.begin(), b.modules_.end(),
      [](const ModulePtr& x, const ModulePtr& y) {
        return x->name == y->name && x->ring->name == y->ring->name && same_structure(*x, *y);
      });
  auto same_subs = std::equal(a.subs_.begin(), a.subs_.end(), b.subs_.begin(), b.subs_.end(),
                              [](const NamedSub& x, const NamedSub& y) {
                                return x.name == y.name &&
                                       x.sub.parent()->name == y.sub.parent()->name &&
                                       x.sub.members() == y.sub.members();
                              });
  auto same_arrow = [](const Morphism& x, const Morphism& y) {
    return x.name() == y.name() && x.domain()->name == y.domain()->name &&
           x.codomain()->name == y.codomain()->name && x.map() == y.map();
  };
  auto same_morphisms = std::equal(a.morphisms_.begin(), a.morphisms_.end(),
                                   b.morphisms_.begin(), b.morphisms_.end(), same_arrow);
  auto same_sequences = std::equal(
      a.sequences_.begin(), a.sequences_.end(), b.sequences_.begin(), b.sequences_.end(),
      [&](const NamedSequence& x, const NamedSequence& y) {
        return x.name == y.name &&
               std::equal(x.sequence.arrows().begin(), x.sequence.arrows().end(),
                          y.sequence.arrows().begin(), y.sequence.arrows().end(), same_arrow);
      });
  auto same_diagrams = std::equal(
      a.diagrams_.begin(), a.diagrams_.end(), b.diagrams_.begin(), b.diagrams_.end(),
      [&](const Diagram& x, const Diagram& y) {
        if (x.name != y.name || x.shape != y.shape || x.hypotheses != y.hypotheses) return false;
        if (x.objects.size() != y.objects.size() || x.arrows.size() != y.arrows.size()) return false;
        for (const auto& [role, m] : x.objects) {
          auto it = y.objects.find(role);
          if (it == y.objects.end() || it->second->name != m->name) return false;
        }
        for (const auto& [role, f] : x.arrows) {
          auto it = y.arrows.find(role);
          if (it == y.arrows.end() || !same_arrow(f, it->second)) return false;
        }
        return true;
      });
  return same_rings && same_modules && same_subs && same_morphisms && same_sequences &&
         same_diagrams;
}

namespace {

struct Located {
  ParseIssue::Kind kind;
  std::size_t line;
  std::string message;
};

// Thrown inside block handlers and turned into ParseIssues.
struct BlockFailure {
  Located where;
};

[[noreturn]] void fail(ParseIssue::Kind kind, std::size_t line, std::string message) {
  throw BlockFailure{{kind, line, std::move(message)}};
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool valid_name(const std::string& name) {
  return !name.empty() && name.find_first_of("=,;:#") == std::string::npos;
}

Index parse_index(const std::string& text, std::size_t line) {
  Index v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    fail(ParseIssue::Kind::syntax, line, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::vector<Index> parse_list(const std::string& text, std::size_t line) {
  std::vector<Index> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_index(item, line));
  return out;
}

Table parse_table(const std::string& text, std::size_t rows, std::size_t cols, std::size_t line,
                  const std::string& what) {
  const auto row_texts = split(text, ';');
  if (row_texts.size() != rows) {
    fail(ParseIssue::Kind::syntax, line,
         what + " table has " + std::to_string(row_texts.size()) + " rows, expected " +
             std::to_string(rows));
  }
  std::vector<Index> cells;
  for (const auto& r : row_texts) {
    auto row = parse_list(r, line);
    if (row.size() != cols) {
      fail(ParseIssue::Kind::syntax, line,
           what + " table row has " + std::to_string(row.size()) + " entries, expected " +
               std::to_string(cols));
    }
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Table(rows, cols, std::move(cells));
}

struct BodyLine {
  std::size_t line;
  std::string key;
  std::string value;
};

struct Block {
  std::size_t line = 0;
  std::string keyword;
  std::string name;
  std::map<std::string, std::string> attrs;
  std::vector<BodyLine> body;
};

const std::string& attr(const Block& b, const std::string& key) {
  auto it = b.attrs.find(key);
  if (it == b.attrs.end()) {
    fail(ParseIssue::Kind::syntax, b.line, b.keyword + " " + b.name + " is missing " + key + "=");
  }
  return it->second;
}

std::size_t size_attr(const Block& b) {
  auto n = parse_index(attr(b, "size"), b.line);
  if (n == 0) fail(ParseIssue::Kind::syntax, b.line, "size must be positive");
  return n;
}

void check_attrs(const Block& b, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : b.attrs) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      fail(ParseIssue::Kind::syntax, b.line, "unknown attribute " + k + " for " + b.keyword);
    }
  }
}

void check_body(const Block& b, std::initializer_list<const char*> allowed) {
  for (const auto& l : b.body) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return l.key == a; })) {
      fail(ParseIssue::Kind::syntax, l.line, "unexpected '" + l.key + ":' in " + b.keyword);
    }
  }
}

const BodyLine* body_line(const Block& b, const std::string& key, bool required) {
  const BodyLine* found = nullptr;
  for (const auto& l : b.body) {
    if (l.key != key) continue;
    if (found) fail(ParseIssue::Kind::syntax, l.line, "repeated '" + key + ":'");
    found = &l;
  }
  if (!found && required) {
    fail(ParseIssue::Kind::syntax, b.line, b.keyword + " " + b.name + " needs '" + key + ":'");
  }
  return found;
}

template <class Fn>
auto lookup(const Block& b, const std::string& what, const std::string& name, Fn&& fn) {
  try {
    return fn(name);
  } catch (const ParameterError&) {
    fail(ParseIssue::Kind::reference, b.line, what + " " + name + " is not defined");
  }
}

template <class Fn>
auto checked(std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const AxiomError& e) {
    fail(ParseIssue::Kind::axiom, line, e.what());
  } catch (const StructureError& e) {
    fail(ParseIssue::Kind::structure, line, e.what());
  } catch (const ParameterError& e) {
    fail(ParseIssue::Kind::syntax, line, e.what());
  }
}

void build_semiring(Workspace& ws, const Block& b) {
  check_attrs(b, {"size"});
  check_body(b, {"add", "mul", "one"});
  const auto n = size_attr(b);
  Semiring s;
  s.name = b.name;
  s.size = n;
  s.add = parse_table(body_line(b, "add", true)->value, n, n, body_line(b, "add", true)->line, "add");
  s.mul = parse_table(body_line(b, "mul", true)->value, n, n, body_line(b, "mul", true)->line, "mul");
  if (auto one = body_line(b, "one", false)) s.one = parse_index(one->value, one->line);
  auto ring = checked(b.line, [&] { return make_semiring(std::move(s)); });
  ws.add_semiring(std::move(ring));
}

void build_module(Workspace& ws, const Block& b) {
  check_attrs(b, {"over", "size"});
  check_body(b, {"add", "act"});
  const auto n = size_attr(b);
  const auto ring = lookup(b, "semiring", attr(b, "over"),
                           [&](const std::string& x) { return ws.semiring(x); });
  Semimodule m;
  m.name = b.name;
  m.ring = ring;
  m.size = n;
  const auto* add = body_line(b, "add", true);
  m.add = parse_table(add->value, n, n, add->line, "add");
  if (const auto* act = body_line(b, "act", false)) {
    m.action = parse_table(act->value, n, ring->size, act->line, "act");
  } else if (has_natural_indexing(*ring)) {
    std::vector<Index> cells(n * ring->size);
    for (Index x = 0; x < n; ++x) {
      Index acc = 0;
      for (Index s = 0; s < ring->size; ++s) {
        cells[x * ring->size + s] = acc;
        acc = checked(add->line, [&] {
          if (acc >= n || x >= n) throw StructureError("addition entry out of range");
          return m.add.at(acc, x);
        });
      }
    }
    m.action = Table(n, ring->size, std::move(cells));
  } else {
    fail(ParseIssue::Kind::syntax, b.line, "module " + b.name + " needs 'act:' over " + ring->name);
  }
  ws.add_module(checked(b.line, [&] { return make_semimodule(std::move(m)); }));
}

void build_sub(Workspace& ws, const Block& b) {
  check_attrs(b, {"of", "members"});
  check_body(b, {});
  const auto parent = lookup(b, "module", attr(b, "of"),
                             [&](const std::string& x) { return ws.module(x); });
  auto members = parse_list(attr(b, "members"), b.line);
  ws.add_sub(b.name, checked(b.line, [&] { return Subsemimodule::make(parent, members); }));
}

void build_morphism(Workspace& ws, const Block& b) {
  check_attrs(b, {"from", "to", "map"});
  check_body(b, {});
  auto get = [&](const std::string& x) { return ws.module(x); };
  const auto from = lookup(b, "module", attr(b, "from"), get);
  const auto to = lookup(b, "module", attr(b, "to"), get);
  auto map = parse_list(attr(b, "map"), b.line);
  ws.add_morphism(checked(b.line, [&] { return Morphism::make(from, to, map, b.name); }));
}

void build_sequence(Workspace& ws, const Block& b) {
  check_attrs(b, {"arrows"});
  check_body(b, {});
  std::vector<Morphism> arrows;
  for (const auto& name : split(attr(b, "arrows"), ',')) {
    arrows.push_back(
        lookup(b, "morphism", name, [&](const std::string& x) { return ws.morphism(x); }));
  }
  ws.add_sequence(b.name, checked(b.line, [&] { return Sequence::make(arrows, b.name); }));
}

void build_diagram(Workspace& ws, const Block& b) {
  check_attrs(b, {});
  std::map<std::size_t, std::pair<std::size_t, std::vector<std::string>>> rows, cols;
  std::vector<std::string> hyps;
  for (const auto& l : b.body) {
    auto key = words(l.key);
    if (l.key == "hyp") {
      hyps.push_back(l.value);
      continue;
    }
    if (key.size() != 2 || (key[0] != "row" && key[0] != "col")) {
      fail(ParseIssue::Kind::syntax, l.line, "unexpected '" + l.key + ":' in diagram");
    }
    auto idx = parse_index(key[1], l.line);
    auto& target = key[0] == "row" ? rows : cols;
    if (!target.emplace(idx, std::pair{l.line, words(l.value)}).second) {
      fail(ParseIssue::Kind::syntax, l.line, "repeated " + l.key);
    }
  }
  const std::size_t nrows = rows.size();
  const std::size_t ncols = rows.empty() ? 0 : (rows.begin()->second.second.size() + 1) / 2;
  Shape shape;
  if (nrows == 2 && ncols == 3) {
    shape = Shape::ladder3;
  } else if (nrows == 2 && ncols == 5) {
    shape = Shape::ladder5;
  } else if (nrows == 3 && ncols == 3) {
    shape = Shape::grid3;
  } else {
    fail(ParseIssue::Kind::structure, b.line,
         "diagram " + b.name + " is " + std::to_string(nrows) + " rows of " +
             std::to_string(ncols) + " objects; expected 2x3, 2x5 or 3x3");
  }
  const auto& info = shape_info(shape);
  Diagram d;
  d.name = b.name;
  d.shape = shape;
  auto module_named = [&](const std::string& x) { return ws.module(x); };
  auto morphism_named = [&](const std::string& x) { return ws.morphism(x); };
  std::size_t r = 0;
  for (const auto& [idx, entry] : rows) {
    const auto& [line, toks] = entry;
    if (idx != r + 1) fail(ParseIssue::Kind::syntax, line, "rows must be numbered 1, 2, ...");
    if (toks.size() != 2 * ncols - 1) {
      fail(ParseIssue::Kind::structure, line, "row " + std::to_string(idx) + " has wrong length");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      d.objects[info.objects[r][c]] = lookup(b, "module", toks[2 * c], module_named);
      if (c + 1 < ncols) {
        d.arrows[info.horizontals[r][c]] = lookup(b, "morphism", toks[2 * c + 1], morphism_named);
      }
    }
    ++r;
  }
  if (cols.size() != ncols) {
    fail(ParseIssue::Kind::structure, b.line,
         "diagram " + b.name + " needs " + std::to_string(ncols) + " col lines");
  }
  std::size_t c = 0;
  for (const auto& [idx, entry] : cols) {
    const auto& [line, toks] = entry;
    if (idx != c + 1) fail(ParseIssue::Kind::syntax, line, "cols must be numbered 1, 2, ...");
    if (toks.size() != 2 * nrows - 1) {
      fail(ParseIssue::Kind::structure, line, "col " + std::to_string(idx) + " has wrong length");
    }
    for (std::size_t rr = 0; rr < nrows; ++rr) {
      const auto m = lookup(b, "module", toks[2 * rr], module_named);
      if (m != d.objects.at(info.objects[rr][c])) {
        fail(ParseIssue::Kind::structure, line,
             "col " + std::to_string(idx) + " names " + toks[2 * rr] + " where the rows have " +
                 d.objects.at(info.objects[rr][c])->name);
      }
      if (rr + 1 < nrows) {
        d.arrows[info.verticals[rr][c]] = lookup(b, "morphism", toks[2 * rr + 1], morphism_named);
      }
    }
    ++c;
  }
  checked(b.line, [&] {
    check_structure(d);
    return 0;
  });
  for (const auto& h : hyps) {
    try {
      parse_tag(shape, h);
    } catch (const ParameterError& e) {
      fail(ParseIssue::Kind::syntax, b.line, e.what());
    }
  }
  d.hypotheses = std::move(hyps);
  ws.add_diagram(std::move(d));
}

void parse_into(Workspace& ws, std::string_view text, const std::string& file,
                std::vector<ParseIssue>& issues) {
  std::vector<std::string> lines;
  for (const auto& l : split(text, '\n')) lines.push_back(l);
  auto issue = [&](ParseIssue::Kind kind, std::size_t line, std::string msg) {
    issues.push_back({kind, file, line, std::move(msg)});
  };

  std::optional<Block> current;
  auto finish = [&](Block& b) {
    try {
      if (b.keyword == "semiring") build_semiring(ws, b);
      else if (b.keyword == "module") build_module(ws, b);
      else if (b.keyword == "sub") build_sub(ws, b);
      else if (b.keyword == "morphism") build_morphism(ws, b);
      else if (b.keyword == "sequence") build_sequence(ws, b);
      else build_diagram(ws, b);
    } catch (const BlockFailure& f) {
      issue(f.where.kind, f.where.line, f.where.message);
    } catch (const ParameterError& e) {
      issue(ParseIssue::Kind::syntax, b.line, e.what());
    }
  };

  static const std::set<std::string> keywords = {"semiring", "module", "sub",
                                                 "morphism", "sequence", "diagram"};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string line = lines[i];
    if (auto hash = line.find('#'); hash != std::string::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (!current) {
      auto toks = words(line);
      if (!keywords.count(toks[0])) {
        issue(ParseIssue::Kind::syntax, lineno, "expected a block header, got '" + toks[0] + "'");
        continue;
      }
      Block b;
      b.line = lineno;
      b.keyword = toks[0];
      if (toks.size() < 2 || !valid_name(toks[1]) || toks[1].find('=') != std::string::npos) {
        issue(ParseIssue::Kind::syntax, lineno, b.keyword + " needs a name");
        b.name = "?";
      } else {
        b.name = toks[1];
      }
      for (std::size_t t = 2; t < toks.size(); ++t) {
        auto eq = toks[t].find('=');
        if (eq == std::string::npos || eq == 0) {
          issue(ParseIssue::Kind::syntax, lineno, "expected key=value, got '" + toks[t] + "'");
          continue;
        }
        b.attrs[toks[t].substr(0, eq)] = toks[t].substr(eq + 1);
      }
      current = std::move(b);
      continue;
    }
    if (line == "end") {
      if (current->name != "?") finish(*current);
      current.reset();
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      issue(ParseIssue::Kind::syntax, lineno, "expected 'key: value' or 'end'");
      continue;
    }
    current->body.push_back({lineno, trim(line.substr(0, colon)), trim(line.substr(colon + 1))});
  }
  if (current) {
    issue(ParseIssue::Kind::syntax, current->line,
          current->keyword + " " + current->name + " is not closed by 'end'");
  }
}

std::string list_text(const std::vector<Index>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string table_text(const Table& t) {
  std::string out;
  for (Index r = 0; r < t.rows(); ++r) {
    auto row = t.row(r);
    out += (r ? "; " : "") + list_text({row.begin(), row.end()});
  }
  return out;
}

std::string safe_name(const std::string& raw) {
  std::string out;
  for (char ch : raw) {
    out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '-')
               ? ch
               : '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "x" : out;
}

}  // namespace

Workspace parse_workspace(std::string_view text, const std::string& file) {
  Workspace ws;
  std::vector<ParseIssue> issues;
  parse_into(ws, text, file, issues);
  if (!issues.empty()) throw ParseError(std::move(issues));
  return ws;
}

Workspace parse_files(const std::vector<std::string>& paths) {
  Workspace ws;
  std::vector<ParseIssue> issues;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      issues.push_back({ParseIssue::Kind::syntax, path, 0, "cannot read file"});
      continue;
    }
    std::ostringstream text;
    text << in.rdbuf();
    parse_into(ws, text.str(), path, issues);
  }
  if (!issues.empty()) throw ParseError(std::move(issues));
  return ws;
}

std::string serialize(const Workspace& ws) {
  std::ostringstream out;
  for (const auto& s : ws.semirings()) {
    out << "semiring " << s->name << " size=" << s->size << "\n";
    out << "add: " << table_text(s->add) << "\n";
    out << "mul: " << table_text(s->mul) << "\n";
    if (s->one != 1) out << "one: " << s->one << "\n";
    out << "end\n\n";
  }
  for (const auto& m : ws.modules()) {
    out << "module " << m->name << " over=" << m->ring->name << " size=" << m->size << "\n";
    out << "add: " << table_text(m->add) << "\n";
    out << "act: " << table_text(m->action) << "\n";
    out << "end\n\n";
  }
  for (const auto& s : ws.subs()) {
    out << "sub " << s.name << " of=" << s.sub.parent()->name
        << " members=" << list_text(s.sub.members()) << "\nend\n\n";
  }
  for (const auto& f : ws.morphisms()) {
    out << "morphism " << f.name() << " from=" << f.domain()->name << " to=" << f.codomain()->name
        << " map=" << list_text(f.map()) << "\nend\n\n";
  }
  for (const auto& s : ws.sequences()) {
    out << "sequence " << s.name << " arrows=";
    const auto& arrows = s.sequence.arrows();
    for (std::size_t i = 0; i < arrows.size(); ++i) out << (i ? "," : "") << arrows[i].name();
    out << "\nend\n\n";
  }
  for (const auto& d : ws.diagrams()) {
    const auto& info = shape_info(d.shape);
    out << "diagram " << d.name << "\n";
    for (std::size_t r = 0; r < info.rows; ++r) {
      out << "row " << r + 1 << ":";
      for (std::size_t c = 0; c < info.cols; ++c) {
        out << " " << d.object(info.objects[r][c])->name;
        if (c + 1 < info.cols) out << " " << d.arrow(info.horizontals[r][c]).name();
      }
      out << "\n";
    }
    for (std::size_t c = 0; c < info.cols; ++c) {
      out << "col " << c + 1 << ":";
      for (std::size_t r = 0; r < info.rows; ++r) {
        out << " " << d.object(info.objects[r][c])->name;
        if (r + 1 < info.rows) out << " " << d.arrow(info.verticals[r][c]).name();
      }
      out << "\n";
    }
    for (const auto& h : d.hypotheses) out << "hyp: " << h << "\n";
    out << "end\n\n";
  }
  return out.str();
}

Workspace workspace_from_diagrams(const std::vector<Diagram>& diagrams) {
  Workspace ws;
  std::map<const Semiring*, SemiringPtr> rings;
  std::map<const Semimodule*, ModulePtr> modules;
  std::set<std::string> used;
  auto fresh = [&](std::string base) {
    std::string name = base;
    for (int k = 2; used.count(name); ++k) name = base + "_" + std::to_string(k);
    used.insert(name);
    return name;
  };
  auto ring_of = [&](const SemiringPtr& s) {
    auto& slot = rings[s.get()];
    if (!slot) {
      auto copy = *s;
      copy.name = fresh(safe_name(s->name));
      slot = std::make_shared<const Semiring>(std::move(copy));
      ws.add_semiring(slot);
    }
    return slot;
  };
  auto module_of = [&](const ModulePtr& m) {
    auto& slot = modules[m.get()];
    if (!slot) {
      auto copy = *m;
      copy.ring = ring_of(m->ring);
      copy.name = fresh(copy.ring->name + "_" + safe_name(m->name));
      slot = std::make_shared<const Semimodule>(std::move(copy));
      ws.add_module(slot);
    }
    return slot;
  };
  for (const auto& d : diagrams) {
    Diagram out;
    out.name = fresh(safe_name(d.name));
    out.shape = d.shape;
    out.hypotheses = d.hypotheses;
    for (const auto& [role, m] : d.objects) out.objects[role] = module_of(m);
    for (const auto& [role, f] : d.arrows) {
      auto g = Morphism::unchecked(module_of(f.domain()), module_of(f.codomain()), f.map(),
                                   fresh(out.name + "." + role));
      ws.add_morphism(g);
      out.arrows[role] = g;
    }
    ws.add_diagram(std::move(out));
  }
  return ws;
}

}  // namespace semimod
