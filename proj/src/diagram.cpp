#include "semimod/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace semimod {

namespace {

ShapeInfo make_info(std::vector<std::vector<std::string>> objects,
                    std::vector<std::vector<std::string>> horizontals,
                    std::vector<std::vector<std::string>> verticals) {
  ShapeInfo info;
  info.rows = objects.size();
  info.cols = objects.front().size();
  info.objects = std::move(objects);
  info.horizontals = std::move(horizontals);
  info.verticals = std::move(verticals);
  return info;
}

const ShapeInfo kLadder3 = make_info({{"L1", "M1", "N1"}, {"L2", "M2", "N2"}},
                                     {{"f1", "g1"}, {"f2", "g2"}},
                                     {{"alpha1", "alpha2", "alpha3"}});
const ShapeInfo kLadder5 =
    make_info({{"U1", "L1", "M1", "N1", "V1"}, {"U2", "L2", "M2", "N2", "V2"}},
              {{"d1", "f1", "g1", "h1"}, {"d2", "f2", "g2", "h2"}},
              {{"gamma", "alpha1", "alpha2", "alpha3", "delta"}});
const ShapeInfo kGrid3 = make_info({{"L1", "M1", "N1"}, {"L2", "M2", "N2"}, {"L3", "M3", "N3"}},
                                   {{"f1", "g1"}, {"f2", "g2"}, {"f3", "g3"}},
                                   {{"alpha1", "alpha2", "alpha3"}, {"beta1", "beta2", "beta3"}});

const char* property_name(Property p) {
  switch (p) {
    case Property::injective: return "injective";
    case Property::surjective: return "surjective";
    case Property::isomorphism: return "isomorphism";
    case Property::k_uniform: return "k-uniform";
    case Property::i_uniform: return "i-uniform";
    case Property::uniform: return "uniform";
    case Property::semi_mono: return "semi-mono";
    case Property::semi_epi: return "semi-epi";
    case Property::cancellative: return "cancellative";
  }
  return "?";
}

Flag same_members(const Subsemimodule& a, const Subsemimodule& b) {
  for (Index m : a.members()) {
    if (!b.contains(m)) return Flag::no(element_witness(m));
  }
  for (Index m : b.members()) {
    if (!a.contains(m)) return Flag::no(element_witness(m));
  }
  return Flag::yes();
}

// Lemma catalog helpers.
Claim P(const std::string& role, Property p) { return Claim::arrow_has(role, p); }
Claim C(const std::string& role) { return Claim::cancellative_object(role); }
Claim E(const std::string& f, const std::string& g, const std::string& at) {
  return Claim::exact_at(f, g, at);
}
Claim ALL(std::vector<Claim> parts, std::string text = {}) {
  return Claim::all(std::move(parts), std::move(text));
}
Claim IFF(Claim a, Claim b) { return Claim::equivalent(std::move(a), std::move(b)); }

constexpr auto inj = Property::injective;
constexpr auto surj = Property::surjective;
constexpr auto iso = Property::isomorphism;
constexpr auto kuni = Property::k_uniform;
constexpr auto iuni = Property::i_uniform;
constexpr auto uni = Property::uniform;
constexpr auto smono = Property::semi_mono;
constexpr auto sepi = Property::semi_epi;
constexpr auto canc = Property::cancellative;

template <class... Vs>
std::vector<Claim> cat(std::vector<Claim> base, Vs... more) {
  (base.push_back(std::move(more)), ...);
  return base;
}

std::vector<Lemma> build_catalog() {
  using S = Shape;
  std::vector<Lemma> out;

  // short: columns compared through the rows.
  const std::vector<Claim> short_cols{P("alpha1", surj), P("alpha3", inj)};
  out.push_back({"short:1", S::ladder3, "alpha2 surjective, first row exact => second row exact",
                 cat(short_cols, P("alpha2", surj), E("f1", "g1", "M1")), {E("f2", "g2", "M2")}});
  out.push_back({"short:2", S::ladder3, "alpha2 injective, second row exact => first row exact",
                 cat(short_cols, P("alpha2", inj), E("f2", "g2", "M2")), {E("f1", "g1", "M1")}});
  out.push_back({"short:3", S::ladder3, "alpha2 iso => (first row exact iff second row exact)",
                 cat(short_cols, P("alpha2", iso)),
                 {IFF(E("f1", "g1", "M1"), E("f2", "g2", "M2"))}});

  // diagram: exact rows.
  const std::vector<Claim> rows{E("f1", "g1", "M1"), E("f2", "g2", "M2")};
  out.push_back({"diagram:1a", S::ladder3, "g1, alpha1 surjective, alpha2 injective => alpha3 injective",
                 cat(rows, P("g1", surj), P("alpha1", surj), P("alpha2", inj)), {P("alpha3", inj)}});
  out.push_back({"diagram:1b", S::ladder3,
                 "f2 injective, alpha3 semi-mono, alpha2 surjective => alpha1 surjective",
                 cat(rows, P("f2", inj), P("alpha3", smono), P("alpha2", surj)),
                 {P("alpha1", surj)}});
  out.push_back({"diagram:2a", S::ladder3,
                 "f2, alpha1, alpha3 semi-mono => alpha2 semi-mono",
                 cat(rows, P("f2", smono), P("alpha1", smono), P("alpha3", smono)),
                 {P("alpha2", smono)}});
  out.push_back({"diagram:2b", S::ladder3,
                 "f2 semi-mono, f1 and alpha2 cancellative, alpha1, alpha3, f2 injective => alpha2 "
                 "injective",
                 cat(rows, P("f2", smono), P("f1", canc), P("alpha2", canc), P("alpha1", inj),
                     P("alpha3", inj), P("f2", inj)),
                 {P("alpha2", inj)}});
  out.push_back({"diagram:3", S::ladder3, "alpha1, alpha3, g1 surjective => alpha2 semi-epi",
                 cat(rows, P("alpha1", surj), P("alpha3", surj), P("g1", surj)),
                 {P("alpha2", sepi)}});
  out.push_back({"diagram:3s", S::ladder3,
                 "alpha1, alpha3, g1 surjective, alpha2 i-uniform => alpha2 surjective",
                 cat(rows, P("alpha1", surj), P("alpha3", surj), P("g1", surj), P("alpha2", iuni)),
                 {P("alpha2", surj)}});

  // cor-short5: L1 -> M1 -> N1 -> 0 and 0 -> L2 -> M2 -> N2 exact.
  const std::vector<Claim> half_short{E("f1", "g1", "M1"), P("g1", surj), P("f2", inj),
                                      E("f2", "g2", "M2"), C("M1"), C("M2")};
  out.push_back({"cor-short5:1", S::ladder3,
                 "alpha2 iso => (alpha1 surjective iff alpha3 injective)",
                 cat(half_short, P("alpha2", iso)), {IFF(P("alpha1", surj), P("alpha3", inj))}});
  out.push_back({"cor-short5:2", S::ladder3,
                 "alpha2 i-uniform, alpha1 and alpha3 iso => alpha2 iso",
                 cat(half_short, P("alpha2", iuni), P("alpha1", iso), P("alpha3", iso)),
                 {P("alpha2", iso)}});

  // short-five.
  const std::vector<Claim> short_rows{P("f1", inj), E("f1", "g1", "M1"), P("g1", surj),
                                      P("f2", inj), E("f2", "g2", "M2"), P("g2", surj),
                                      C("M1"),      C("M2")};
  out.push_back({"short-five", S::ladder3,
                 "alpha1, alpha3 iso => (alpha2 i-uniform iff alpha2 iso)",
                 cat(short_rows, P("alpha1", iso), P("alpha3", iso)),
                 {IFF(P("alpha2", iuni), P("alpha2", iso))}});

  // 5-details: exact rows of length five.
  const std::vector<Claim> rows5{E("d1", "f1", "L1"), E("f1", "g1", "M1"), E("g1", "h1", "N1"),
                                 E("d2", "f2", "L2"), E("f2", "g2", "M2"), E("g2", "h2", "N2")};
  out.push_back({"5-details:1a", S::ladder5,
                 "gamma surjective, alpha1 injective, alpha3 semi-mono => alpha2 semi-mono",
                 cat(rows5, P("gamma", surj), P("alpha1", inj), P("alpha3", smono)),
                 {P("alpha2", smono)}});
  out.push_back({"5-details:1b", S::ladder5,
                 "gamma surjective, f1 and alpha2 cancellative, alpha1, alpha3 injective => alpha2 "
                 "injective",
                 cat(rows5, P("gamma", surj), P("f1", canc), P("alpha2", canc), P("alpha1", inj),
                     P("alpha3", inj)),
                 {P("alpha2", inj)}});
  out.push_back({"5-details:2", S::ladder5,
                 "delta semi-mono, alpha1, alpha3 surjective => alpha2 semi-epi",
                 cat(rows5, P("delta", smono), P("alpha1", surj), P("alpha3", surj)),
                 {P("alpha2", sepi)}});
  out.push_back({"5-details:2s", S::ladder5,
                 "delta semi-mono, alpha1, alpha3 surjective, alpha2 i-uniform => alpha2 surjective",
                 cat(rows5, P("delta", smono), P("alpha1", surj), P("alpha3", surj),
                     P("alpha2", iuni)),
                 {P("alpha2", surj)}});
  out.push_back({"5-details:3", S::ladder5,
                 "f1, alpha2 cancellative, gamma surjective, delta injective, alpha1, alpha3 iso "
                 "=> alpha2 injective and semi-epi",
                 cat(rows5, P("f1", canc), P("alpha2", canc), P("gamma", surj), P("delta", inj),
                     P("alpha1", iso), P("alpha3", iso)),
                 {P("alpha2", inj), P("alpha2", sepi)}});

  // five.
  const std::vector<Claim> five_base =
      cat(rows5, P("gamma", surj), P("delta", inj), C("M1"), C("M2"));
  out.push_back({"five:1", S::ladder5, "alpha1, alpha3 injective => alpha2 injective",
                 cat(five_base, P("alpha1", inj), P("alpha3", inj)), {P("alpha2", inj)}});
  out.push_back({"five:2", S::ladder5,
                 "alpha2 i-uniform, alpha1, alpha3 surjective => alpha2 surjective",
                 cat(five_base, P("alpha2", iuni), P("alpha1", surj), P("alpha3", surj)),
                 {P("alpha2", surj)}});
  out.push_back({"five:3", S::ladder5, "alpha2 i-uniform, alpha1, alpha3 iso => alpha2 iso",
                 cat(five_base, P("alpha2", iuni), P("alpha1", iso), P("alpha3", iso)),
                 {P("alpha2", iso)}});

  // 9-1, 9-3 and nine on the 3x3 grid.
  const std::vector<Claim> cols_mid{E("alpha1", "beta1", "L2"), E("alpha2", "beta2", "M2"),
                                    E("alpha3", "beta3", "N2"), E("f2", "g2", "M2")};
  const std::vector<Claim> cols_top = cat(cols_mid, P("alpha2", inj), P("alpha3", inj));
  const std::vector<Claim> cols_bottom = cat(cols_mid, P("beta1", surj), P("beta2", surj));
  out.push_back({"9-1:1", S::grid3, "f3 injective, f2 cancellative => first row exact",
                 cat(cols_top, P("f3", inj), P("f2", canc)), {E("f1", "g1", "M1")}});
  out.push_back({"9-1:2", S::grid3,
                 "g2, beta1 surjective, third row exact => g1 semi-epi",
                 cat(cols_top, P("g2", surj), P("beta1", surj), E("f3", "g3", "M3")),
                 {P("g1", sepi)}});
  out.push_back({"9-1:2s", S::grid3,
                 "g2, beta1 surjective, third row exact, g1 i-uniform => g1 surjective",
                 cat(cols_top, P("g2", surj), P("beta1", surj), E("f3", "g3", "M3"),
                     P("g1", iuni)),
                 {P("g1", surj)}});
  out.push_back({"9-3:1", S::grid3, "g1 surjective, f3 i-uniform => third row exact",
                 cat(cols_bottom, P("g1", surj), P("f3", iuni)), {E("f3", "g3", "M3")}});
  out.push_back({"9-3:2", S::grid3,
                 "f2, alpha3 injective, alpha2 cancellative, first row exact => f3 injective",
                 cat(cols_bottom, P("f2", inj), P("alpha3", inj), P("alpha2", canc),
                     E("f1", "g1", "M1")),
                 {P("f3", inj)}});

  const std::vector<Claim> nine_base =
      cat(cols_mid, P("alpha2", inj), P("alpha3", inj), P("beta1", surj), P("beta2", surj),
          P("f2", inj), P("g2", surj), C("M2"), P("f3", iuni), P("g1", iuni));
  auto first_row = [] { return ALL({E("f1", "g1", "M1"), P("g1", surj)}, "first row exact"); };
  auto third_row = [] { return ALL({P("f3", inj), E("f3", "g3", "M3")}, "third row exact"); };
  out.push_back({"nine", S::grid3, "first row exact iff third row exact", nine_base,
                 {IFF(first_row(), third_row())}});
  out.push_back({"nine:first-from-third", S::grid3, "third row exact => first row exact",
                 cat(nine_base, third_row()), {first_row()}});
  out.push_back({"nine:third-from-first", S::grid3, "first row exact => third row exact",
                 cat(nine_base, first_row()), {third_row()}});

  // snake hypotheses; conclusions are computed by snake().
  out.push_back({"snake", S::ladder3,
                 "kernel-cokernel sequence with connecting morphism",
                 {E("f1", "g1", "M1"), P("g1", surj), P("f2", inj), E("f2", "g2", "M2"),
                  P("alpha1", kuni), P("alpha3", kuni), P("alpha2", uni)},
                 {}});
  return out;
}

Certificate certificate_for(const std::string& id, const Diagram& d) { return verify(id, d); }

}  // namespace

std::string to_string(Shape s) {
  switch (s) {
    case Shape::ladder3: return "ladder3";
    case Shape::ladder5: return "ladder5";
    case Shape::grid3: return "grid3";
  }
  return "?";
}

const ShapeInfo& shape_info(Shape s) {
  switch (s) {
    case Shape::ladder3: return kLadder3;
    case Shape::ladder5: return kLadder5;
    case Shape::grid3: return kGrid3;
  }
  throw ParameterError("unknown shape");
}

std::pair<std::string, std::string> endpoints(Shape s, const std::string& role) {
  const auto& info = shape_info(s);
  for (std::size_t r = 0; r < info.rows; ++r) {
    for (std::size_t c = 0; c + 1 < info.cols; ++c) {
      if (info.horizontals[r][c] == role) return {info.objects[r][c], info.objects[r][c + 1]};
    }
  }
  for (std::size_t r = 0; r + 1 < info.rows; ++r) {
    for (std::size_t c = 0; c < info.cols; ++c) {
      if (info.verticals[r][c] == role) return {info.objects[r][c], info.objects[r + 1][c]};
    }
  }
  throw ParameterError("no arrow role " + role + " in shape " + to_string(s));
}

bool is_object_role(Shape s, const std::string& role) {
  for (const auto& row : shape_info(s).objects) {
    if (std::find(row.begin(), row.end(), role) != row.end()) return true;
  }
  return false;
}

bool is_arrow_role(Shape s, const std::string& role) {
  const auto& info = shape_info(s);
  for (const auto* lines : {&info.horizontals, &info.verticals}) {
    for (const auto& row : *lines) {
      if (std::find(row.begin(), row.end(), role) != row.end()) return true;
    }
  }
  return false;
}

std::vector<Square> squares(Shape s) {
  const auto& info = shape_info(s);
  std::vector<Square> out;
  for (std::size_t r = 0; r + 1 < info.rows; ++r) {
    for (std::size_t c = 0; c + 1 < info.cols; ++c) {
      out.push_back({info.horizontals[r][c], info.verticals[r][c + 1], info.verticals[r][c],
                     info.horizontals[r + 1][c]});
    }
  }
  return out;
}

Diagram Diagram::from_arrows(Shape shape, std::map<std::string, Morphism> arrows,
                             std::string name) {
  Diagram d;
  d.name = std::move(name);
  d.shape = shape;
  for (const auto& [role, f] : arrows) {
    auto [src, dst] = endpoints(shape, role);
    for (const auto& [obj, mod] : {std::pair{src, f.domain()}, std::pair{dst, f.codomain()}}) {
      auto [it, inserted] = d.objects.emplace(obj, mod);
      if (!inserted && !same_module(it->second, mod)) {
        throw StructureError("arrow " + role + " disagrees with object " + obj);
      }
    }
  }
  d.arrows = std::move(arrows);
  return d;
}

bool Diagram::complete() const {
  const auto& info = shape_info(shape);
  for (const auto* lines : {&info.horizontals, &info.verticals}) {
    for (const auto& row : *lines) {
      for (const auto& role : row) {
        if (!arrows.count(role)) return false;
      }
    }
  }
  return true;
}

const Morphism& Diagram::arrow(const std::string& role) const {
  auto it = arrows.find(role);
  if (it == arrows.end()) throw StructureError("diagram " + name + " has no arrow " + role);
  return it->second;
}

const ModulePtr& Diagram::object(const std::string& role) const {
  auto it = objects.find(role);
  if (it == objects.end()) throw StructureError("diagram " + name + " has no object " + role);
  return it->second;
}

void check_structure(const Diagram& d) {
  for (const auto& [role, f] : d.arrows) {
    auto [src, dst] = endpoints(d.shape, role);
    auto s = d.objects.find(src);
    auto t = d.objects.find(dst);
    if ((s != d.objects.end() && !same_module(s->second, f.domain())) ||
        (t != d.objects.end() && !same_module(t->second, f.codomain()))) {
      throw StructureError("arrow " + role + " does not run " + src + " -> " + dst);
    }
  }
}

Flag commutes(const Diagram& d, const Square& sq) {
  const auto& top = d.arrow(sq.top);
  const auto& right = d.arrow(sq.right);
  const auto& left = d.arrow(sq.left);
  const auto& bottom = d.arrow(sq.bottom);
  for (Index x = 0; x < top.map().size(); ++x) {
    if (right(top(x)) != bottom(left(x))) return Flag::no(element_witness(x));
  }
  return Flag::yes();
}

std::string to_string(Property p) { return property_name(p); }

std::optional<Property> parse_property(std::string_view text) {
  for (auto p : {inj, surj, iso, kuni, iuni, uni, smono, sepi, canc}) {
    if (text == property_name(p)) return p;
  }
  return std::nullopt;
}

Flag evaluate(Property p, const Morphism& f) {
  switch (p) {
    case Property::injective: return injective(f);
    case Property::surjective: return surjective(f);
    case Property::isomorphism: return isomorphism(f);
    case Property::k_uniform: return k_uniform(f);
    case Property::i_uniform: return i_uniform(f);
    case Property::uniform: return uniform(f);
    case Property::semi_mono: return semi_mono(f);
    case Property::semi_epi: return semi_epi(f);
    case Property::cancellative: return cancellative_morphism(f);
  }
  throw ParameterError("unknown property");
}

Claim Claim::arrow_has(std::string role, Property p) {
  Claim c;
  c.kind = Kind::arrow;
  c.text = role + " " + property_name(p);
  c.a = std::move(role);
  c.property = p;
  return c;
}

Claim Claim::cancellative_object(std::string role) {
  Claim c;
  c.kind = Kind::module_cancellative;
  c.text = role + " cancellative";
  c.a = std::move(role);
  return c;
}

Claim Claim::exact_at(std::string f, std::string g, std::string at) {
  Claim c;
  c.kind = Kind::exact;
  c.text = "exact at " + at;
  c.a = std::move(f);
  c.b = std::move(g);
  return c;
}

Claim Claim::all(std::vector<Claim> parts, std::string text) {
  Claim c;
  c.kind = Kind::all_of;
  if (text.empty()) {
    for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? " and " : "") + parts[i].text;
  }
  c.text = std::move(text);
  c.parts = std::move(parts);
  return c;
}

Claim Claim::equivalent(Claim left, Claim right) {
  Claim c;
  c.kind = Kind::iff;
  c.text = "(" + left.text + ") iff (" + right.text + ")";
  c.parts = {std::move(left), std::move(right)};
  return c;
}

Claim Claim::negation(Claim inner) {
  Claim c;
  c.kind = Kind::negation;
  c.text = "not (" + inner.text + ")";
  c.parts = {std::move(inner)};
  return c;
}

std::vector<std::string> Claim::roles() const {
  std::vector<std::string> out;
  if (!a.empty()) out.push_back(a);
  if (!b.empty()) out.push_back(b);
  for (const auto& p : parts) {
    auto inner = p.roles();
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

Flag evaluate(const Claim& c, const Diagram& d) {
  switch (c.kind) {
    case Claim::Kind::arrow: return evaluate(c.property, d.arrow(c.a));
    case Claim::Kind::module_cancellative: return cancellative_module(*d.object(c.a));
    case Claim::Kind::exact: return exact_at(d.arrow(c.a), d.arrow(c.b));
    case Claim::Kind::all_of:
      for (const auto& part : c.parts) {
        auto f = evaluate(part, d);
        if (!f) return Flag::no(part.text + ": " + f.witness);
      }
      return Flag::yes();
    case Claim::Kind::iff: {
      auto left = evaluate(c.parts[0], d);
      auto right = evaluate(c.parts[1], d);
      if (left.holds == right.holds) return Flag::yes();
      const auto& failing = left.holds ? right : left;
      return Flag::no(std::string(left.holds ? "left holds, right fails" : "right holds, left fails") +
                      " (" + failing.witness + ")");
    }
    case Claim::Kind::negation:
      return evaluate(c.parts[0], d).holds ? Flag::no(c.parts[0].text + " holds") : Flag::yes();
  }
  throw ParameterError("unknown claim kind");
}

Claim parse_tag(Shape shape, const std::string& tag) {
  std::istringstream in(tag);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() == 1 && words[0] == "commutes") return Claim::all({}, "squares commute");
  if (words.size() == 3 && words[0] == "exact" && is_arrow_role(shape, words[1]) &&
      is_arrow_role(shape, words[2]) && endpoints(shape, words[1]).second ==
                                            endpoints(shape, words[2]).first) {
    return Claim::exact_at(words[1], words[2], endpoints(shape, words[1]).second);
  }
  if (words.size() == 2) {
    if (words[1] == "cancellative" && is_object_role(shape, words[0])) {
      return Claim::cancellative_object(words[0]);
    }
    if (auto p = parse_property(words[1]); p && is_arrow_role(shape, words[0])) {
      return Claim::arrow_has(words[0], *p);
    }
  }
  throw ParameterError("unrecognized hypothesis tag '" + tag + "' for shape " + to_string(shape));
}

const std::vector<Lemma>& lemma_catalog() {
  static const std::vector<Lemma> catalog = build_catalog();
  return catalog;
}

const Lemma& find_lemma(const std::string& id) {
  for (const auto& l : lemma_catalog()) {
    if (l.id == id) return l;
  }
  throw ParameterError("unknown lemma " + id);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::hypothesis_failed: return "hypothesis-failed";
  }
  return "?";
}

namespace {

std::vector<Check> gate_checks(const std::vector<Claim>& hypotheses, const Diagram& d,
                               bool stop_early) {
  if (!d.complete()) {
    for (const auto& row : shape_info(d.shape).horizontals) {
      for (const auto& r : row) {
        if (!d.arrows.count(r)) throw StructureError("diagram " + d.name + " lacks arrow " + r);
      }
    }
    for (const auto& row : shape_info(d.shape).verticals) {
      for (const auto& r : row) {
        if (!d.arrows.count(r)) throw StructureError("diagram " + d.name + " lacks arrow " + r);
      }
    }
  }
  check_structure(d);
  std::vector<Check> out;
  auto push = [&](std::string desc, Flag f) {
    bool bad = !f.holds;
    out.push_back({std::move(desc), std::move(f)});
    return bad && stop_early;
  };
  for (const auto& sq : squares(d.shape)) {
    if (push("square " + sq.top + "/" + sq.right + " commutes", commutes(d, sq))) return out;
  }
  for (const auto& tag : d.hypotheses) {
    auto claim = parse_tag(d.shape, tag);
    if (push(claim.text, evaluate(claim, d))) return out;
  }
  for (const auto& h : hypotheses) {
    if (push(h.text, evaluate(h, d))) return out;
  }
  return out;
}

const Check* first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks) {
    if (!c.result.holds) return &c;
  }
  return nullptr;
}

}  // namespace

Certificate verify(const Lemma& lemma, const Diagram& d) {
  if (d.shape != lemma.shape) {
    throw StructureError("lemma " + lemma.id + " needs shape " + to_string(lemma.shape) +
                         ", diagram " + d.name + " is " + to_string(d.shape));
  }
  Certificate c;
  c.lemma = lemma.id;
  c.diagram = d.name;
  c.hypotheses = gate_checks(lemma.hypotheses, d, false);
  if (const auto* bad = first_failure(c.hypotheses)) {
    c.verdict = Verdict::hypothesis_failed;
    c.message = "hypothesis " + bad->description + " violated by " + bad->result.witness;
    return c;
  }
  for (const auto& concl : lemma.conclusions) {
    c.conclusions.push_back({concl.text, evaluate(concl, d)});
  }
  if (const auto* bad = first_failure(c.conclusions)) {
    c.verdict = Verdict::refuted;
    c.message = "conclusion " + bad->description + " fails at " + bad->result.witness;
  } else {
    c.verdict = Verdict::verified;
    c.message = "all conclusions hold";
  }
  return c;
}

Certificate verify(const std::string& lemma_id, const Diagram& d) {
  return verify(find_lemma(lemma_id), d);
}

bool hypotheses_hold(const Lemma& lemma, const Diagram& d) {
  auto checks = gate_checks(lemma.hypotheses, d, true);
  return first_failure(checks) == nullptr;
}

Certificate verify_lemma_short(const Diagram& d, int clause) {
  if (clause < 1 || clause > 3) throw ParameterError("Lemma short has clauses 1-3");
  return certificate_for("short:" + std::to_string(clause), d);
}

Certificate verify_lemma_diagram(const Diagram& d, const std::string& clause) {
  return certificate_for("diagram:" + clause, d);
}

Certificate verify_cor_short5(const Diagram& d, int clause) {
  return certificate_for("cor-short5:" + std::to_string(clause), d);
}

Certificate verify_short_five(const Diagram& d) { return certificate_for("short-five", d); }

Certificate verify_5_details(const Diagram& d, const std::string& clause) {
  return certificate_for("5-details:" + clause, d);
}

Certificate verify_five(const Diagram& d, int clause) {
  return certificate_for("five:" + std::to_string(clause), d);
}

Certificate verify_nine(const Diagram& d, const std::string& direction) {
  if (direction == "both") return certificate_for("nine", d);
  return certificate_for("nine:" + direction, d);
}

Certificate verify_9_1(const Diagram& d, const std::string& clause) {
  return certificate_for("9-1:" + clause, d);
}

Certificate verify_9_3(const Diagram& d, int clause) {
  return certificate_for("9-3:" + std::to_string(clause), d);
}

namespace {

// Restriction of f to kernels: Ker(a) -> Ker(b), both materialized.
std::optional<Morphism> restrict_to_kernels(const Morphism& f, const Subsemimodule& from,
                                            const ModulePtr& from_module,
                                            const Subsemimodule& to, const ModulePtr& to_module,
                                            std::string name) {
  std::vector<Index> map(from.size());
  for (Index i = 0; i < from.size(); ++i) {
    Index v = f(from.members()[i]);
    if (!to.contains(v)) return std::nullopt;
    map[i] = to.local_index(v);
  }
  return Morphism::unchecked(from_module, to_module, std::move(map), std::move(name));
}

std::vector<Index> order_or_identity(const std::vector<Index>& order, std::size_t n) {
  if (order.empty()) {
    std::vector<Index> out(n);
    for (Index i = 0; i < n; ++i) out[i] = i;
    return out;
  }
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (Index i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != n || sorted[i] != i) throw ParameterError("choice order is not a permutation");
  }
  return order;
}

}  // namespace

SnakeResult snake(const Diagram& d, const SnakeOptions& options) {
  if (d.shape != Shape::ladder3) throw StructureError("snake needs a ladder3 diagram");
  SnakeResult r;
  auto hypotheses = find_lemma("snake").hypotheses;
  if (options.weak_alpha2) {
    for (auto& h : hypotheses) {
      if (h.kind == Claim::Kind::arrow && h.a == "alpha2") h = Claim::arrow_has("alpha2", kuni);
    }
  }
  r.hypotheses = gate_checks(hypotheses, d, false);
  if (const auto* bad = first_failure(r.hypotheses)) {
    r.verdict = Verdict::hypothesis_failed;
    r.message = "hypothesis " + bad->description + " violated by " + bad->result.witness;
    return r;
  }
  const auto& f1 = d.arrow("f1");
  const auto& g1 = d.arrow("g1");
  const auto& f2 = d.arrow("f2");
  const auto& g2 = d.arrow("g2");
  const auto& a1 = d.arrow("alpha1");
  const auto& a2 = d.arrow("alpha2");
  const auto& a3 = d.arrow("alpha3");
  r.strong_hypotheses = uniform(a1).holds && uniform(a2).holds && uniform(a3).holds;

  r.ker_alpha1 = kernel(a1);
  r.ker_alpha2 = kernel(a2);
  r.ker_alpha3 = kernel(a3);
  r.ker1 = as_module(*r.ker_alpha1, "Ker(alpha1)");
  r.ker2 = as_module(*r.ker_alpha2, "Ker(alpha2)");
  r.ker3 = as_module(*r.ker_alpha3, "Ker(alpha3)");
  r.coker_alpha1 = quotient(image(a1), "Coker(alpha1)");
  r.coker_alpha2 = quotient(image(a2), "Coker(alpha2)");
  r.coker_alpha3 = quotient(image(a3), "Coker(alpha3)");
  r.coker1 = r.coker_alpha1->quotient;
  r.coker2 = r.coker_alpha2->quotient;
  r.coker3 = r.coker_alpha3->quotient;

  auto add_clause = [&](std::string id, bool applicable, std::string desc, Flag f) {
    r.clauses.push_back({std::move(id), applicable, {std::move(desc), std::move(f)}});
  };
  auto finish = [&] {
    for (const auto& c : r.clauses) {
      if (c.applicable && !c.check.result.holds) {
        r.verdict = Verdict::refuted;
        r.message = "clause " + c.id + " fails: " + c.check.description + " at " +
                    c.check.result.witness;
        return r;
      }
    }
    r.verdict = Verdict::verified;
    r.message = "all applicable clauses hold";
    return r;
  };

  // Clause 1: induced maps exist, commute and are unique.
  auto fk = restrict_to_kernels(f1, *r.ker_alpha1, r.ker1, *r.ker_alpha2, r.ker2, "f_K");
  auto gk = restrict_to_kernels(g1, *r.ker_alpha2, r.ker2, *r.ker_alpha3, r.ker3, "g_K");
  auto fc = descend(*r.coker_alpha1, compose(r.coker_alpha2->projection, f2));
  auto gc = descend(*r.coker_alpha2, compose(r.coker_alpha3->projection, g2));
  add_clause("1", true, "f_K exists", fk ? Flag::yes() : Flag::no("f1 leaves Ker(alpha2)"));
  add_clause("1", true, "g_K exists", gk ? Flag::yes() : Flag::no("g1 leaves Ker(alpha3)"));
  add_clause("1", true, "f_C exists", fc ? Flag::yes() : Flag::no("f2 not constant on classes"));
  add_clause("1", true, "g_C exists", gc ? Flag::yes() : Flag::no("g2 not constant on classes"));
  if (!fk || !gk || !fc || !gc) return finish();
  r.f_k = *fk;
  r.g_k = *gk;
  r.f_c = fc->named("f_C");
  r.g_c = gc->named("g_C");

  const auto incl1 = inclusion(*r.ker_alpha1, r.ker1);
  const auto incl2 = inclusion(*r.ker_alpha2, r.ker2);
  const auto incl3 = inclusion(*r.ker_alpha3, r.ker3);
  auto count_kernel_lifts = [](const ModulePtr& from, const ModulePtr& to, const Morphism& to_incl,
                               const Morphism& target) {
    std::size_t n = 0;
    for (const auto& h : enumerate_hom(from, to)) n += compose(to_incl, h) == target;
    return n;
  };
  auto count_cokernel_descents = [](const QuotientModule& from, const QuotientModule& to,
                                    const Morphism& target) {
    std::size_t n = 0;
    for (const auto& h : enumerate_hom(from.quotient, to.quotient)) {
      n += compose(h, from.projection) == target;
    }
    return n;
  };
  auto unique = [](std::size_t n) {
    return n == 1 ? Flag::yes() : Flag::no(std::to_string(n) + " candidate maps");
  };
  add_clause("1", true, "f_K unique",
             unique(count_kernel_lifts(r.ker1, r.ker2, incl2, compose(f1, incl1))));
  add_clause("1", true, "g_K unique",
             unique(count_kernel_lifts(r.ker2, r.ker3, incl3, compose(g1, incl2))));
  add_clause("1", true, "f_C unique",
             unique(count_cokernel_descents(*r.coker_alpha1, *r.coker_alpha2,
                                            compose(r.coker_alpha2->projection, f2))));
  add_clause("1", true, "g_C unique",
             unique(count_cokernel_descents(*r.coker_alpha2, *r.coker_alpha3,
                                            compose(r.coker_alpha3->projection, g2))));

  // Clauses 2 and 3.
  add_clause("2", cancellative_morphism(f1).holds, "kernel row exact at Ker(alpha2)",
             exact_at(r.f_k, r.g_k));
  add_clause("3", i_uniform(r.f_c).holds, "cokernel row exact at Coker(alpha2)",
             exact_at(r.f_c, r.g_c));

  // Clause 4: delta by the choice procedure, checked against every choice.
  const auto m1_order = order_or_identity(options.m1_order, d.object("M1")->size);
  const auto l2_order = order_or_identity(options.l2_order, d.object("L2")->size);
  const auto& k3 = *r.ker_alpha3;
  const auto& c1 = *r.coker_alpha1;
  std::vector<Index> delta_map(k3.size(), 0);
  Flag well_defined = Flag::yes();
  for (Index k = 0; k < k3.size(); ++k) {
    const Index n1 = k3.members()[k];
    std::set<Index> classes;
    std::optional<Index> first;
    for (Index m1 : m1_order) {
      if (g1(m1) != n1) continue;
      for (Index l2 : l2_order) {
        if (f2(l2) != a2(m1)) continue;
        Index cls = c1.congruence.class_of(l2);
        if (!first) first = cls;
        classes.insert(cls);
      }
    }
    if (!first) {
      if (well_defined) well_defined = Flag::no(element_witness(n1) + " has no choice");
      continue;
    }
    delta_map[k] = *first;
    if (classes.size() > 1 && well_defined) {
      well_defined = Flag::no(element_witness(n1) + " reaches " + std::to_string(classes.size()) +
                              " classes");
    }
  }
  add_clause("4", true, "delta well defined", well_defined);
  r.delta = Morphism::unchecked(r.ker3, r.coker1, std::move(delta_map), "delta");
  auto linear = validate_morphism(*r.ker3, *r.coker1, r.delta.map());
  add_clause("4", true, "delta linear",
             linear.ok() ? Flag::yes() : Flag::no(linear.violations.front().axiom));
  if (!well_defined || !linear.ok()) return finish();

  add_clause("4", true, "Ker(delta) = closure(g_K(Ker(alpha2)))",
             same_members(kernel(r.delta), subtractive_closure(image(r.g_k))));
  add_clause("4", true, "delta(Ker(alpha3)) = Ker(f_C)",
             same_members(image(r.delta), kernel(r.f_c)));
  add_clause("4", true, "delta k-uniform", k_uniform(r.delta));

  // Clause 5.
  const bool five = cancellative_morphism(a2).holds && i_uniform(r.g_k).holds;
  add_clause("5", five, "exact at Ker(alpha3)", exact_at(r.g_k, r.delta));
  add_clause("5", five, "exact at Coker(alpha1)", exact_at(r.delta, r.f_c));
  return finish();
}

std::string describe(const Certificate& c) {
  std::ostringstream out;
  out << "lemma " << c.lemma << " on " << c.diagram << ": " << to_string(c.verdict) << "\n";
  for (const auto& h : c.hypotheses) {
    out << "  hypothesis " << h.description << ": "
        << (h.result.holds ? "ok" : "FAILS (" + h.result.witness + ")") << "\n";
  }
  for (const auto& k : c.conclusions) {
    out << "  conclusion " << k.description << ": "
        << (k.result.holds ? "ok" : "FAILS (" + k.result.witness + ")") << "\n";
  }
  out << c.message << "\n";
  return out.str();
}

std::string describe(const SnakeResult& r) {
  std::ostringstream out;
  out << "snake: " << to_string(r.verdict) << "\n";
  if (r.verdict == Verdict::hypothesis_failed) {
    out << r.message << "\n";
    return out.str();
  }
  out << "  all columns uniform: " << (r.strong_hypotheses ? "yes" : "no") << "\n";
  if (r.coker_alpha1 && r.ker_alpha3 && r.delta.map().size() == r.ker_alpha3->size()) {
    out << "  delta: Ker(alpha3) -> Coker(alpha1)\n";
    for (Index k = 0; k < r.delta.map().size(); ++k) {
      out << "    " << r.ker_alpha3->members()[k] << " -> "
          << format_elements(r.coker_alpha1->congruence.members_of(r.delta(k))) << "\n";
    }
  }
  for (const auto& c : r.clauses) {
    out << "  clause " << c.id << " " << c.check.description << ": "
        << (!c.applicable ? "n/a" : c.check.result.holds ? "ok" : "FAILS (" + c.check.result.witness + ")")
        << "\n";
  }
  out << r.message << "\n";
  return out.str();
}

}  // namespace semimod
