#include "alexcalc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "alexcalc/error.hpp"

namespace alexcalc {

namespace {

constexpr long kMaxGenus = 4096;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

// Tokens separated by blanks; a double-quoted run is part of its token.
std::vector<std::string> tokenize_record(std::string_view line, const std::string& where) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool any = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      any = true;
      continue;
    }
    if (!quoted && (ch == ' ' || ch == '\t' || ch == '\r')) {
      if (any) out.push_back(std::move(cur));
      cur.clear();
      any = false;
      continue;
    }
    cur.push_back(ch);
    any = true;
  }
  if (quoted) throw Error(ErrorCode::CatalogError, where + ": unterminated quote");
  if (any) out.push_back(std::move(cur));
  return out;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& where) {
  std::vector<std::int64_t> out;
  for (const std::string& item : split(text, ',')) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::CatalogError, where + ": bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::optional<long> parse_positive(std::string_view text) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

struct Record {
  std::string kind;
  std::string name;
  std::map<std::string, std::string> fields;
  std::string where;
};

Record parse_record(std::string_view line, const std::string& where) {
  auto tokens = tokenize_record(line, where);
  if (tokens.size() < 2) throw Error(ErrorCode::CatalogError, where + ": expected '<kind> <name> ...'");
  Record r{tokens[0], tokens[1], {}, where};
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::CatalogError, where + ": expected key=value, got '" + tokens[i] + "'");
    const std::string key = tokens[i].substr(0, eq);
    if (!r.fields.emplace(key, tokens[i].substr(eq + 1)).second)
      throw Error(ErrorCode::CatalogError, where + ": duplicate key '" + key + "'");
  }
  return r;
}

void set_flag(AtomFlags& flags, std::string_view item, const std::string& where) {
  const bool value = item.empty() || item[0] != '!';
  if (!value) item.remove_prefix(1);
  if (item == "prime") flags.prime = value;
  else if (item == "irreducible") flags.irreducible = value;
  else if (item == "simply_connected") flags.simply_connected = value;
  else if (item == "has_nonseparating_p2") flags.has_nonseparating_p2 = value;
  else if (item == "orientable") flags.orientable = value;
  else if (item == "amphichiral") flags.amphichiral = value;
  else throw Error(ErrorCode::CatalogError, where + ": unknown flag '" + std::string(item) + "'");
}

std::vector<SingularSite> make_sites(const std::string& list, const std::string& where) {
  std::vector<SingularSite> sites;
  std::set<std::string> seen;
  for (auto& id : split(list, ',')) {
    if (id.empty()) throw Error(ErrorCode::CatalogError, where + ": empty site id");
    if (!seen.insert(id).second) throw Error(ErrorCode::CatalogError, where + ": duplicate site '" + id + "'");
    sites.push_back({id, std::nullopt, std::nullopt});
  }
  return sites;
}

AtomSpec atom_from_record(const Record& r) {
  AtomSpec a;
  a.name = r.name;
  const auto& f = r.fields;
  static const std::set<std::string> known = {"sites", "h1", "gens", "rels", "w1", "blacks", "edges",
                                              "cover", "ocover", "flags", "note"};
  for (const auto& [key, value] : f) {
    if (known.count(key) || key.rfind("image.", 0) == 0 || key.rfind("word.", 0) == 0) continue;
    throw Error(ErrorCode::CatalogError, r.where + ": unknown atom key '" + key + "'");
  }
  if (auto it = f.find("sites"); it != f.end()) a.sites = make_sites(it->second, r.where);
  a.flags.manifold = a.sites.empty();
  if (auto it = f.find("h1"); it != f.end()) {
    try {
      a.h1 = AbelianGroup::parse(it->second);
    } catch (const Error& e) {
      throw Error(ErrorCode::CatalogError, r.where + ": " + e.what());
    }
  }
  if (auto it = f.find("flags"); it != f.end())
    for (const auto& item : split(it->second, ',')) set_flag(a.flags, item, r.where);
  if (auto it = f.find("cover"); it != f.end()) a.cover = split(it->second, '+');
  if (auto it = f.find("ocover"); it != f.end()) a.orientation_cover = split(it->second, '+');
  if (auto it = f.find("note"); it != f.end()) a.note = it->second;

  auto site_of = [&](const std::string& key, std::size_t prefix) -> SingularSite& {
    const std::string id = key.substr(prefix);
    for (auto& s : a.sites)
      if (s.id == id) return s;
    throw Error(ErrorCode::CatalogError, r.where + ": '" + key + "' names no site");
  };

  if (auto it = f.find("gens"); it != f.end()) {
    Pi1Data pi;
    pi.presentation.generators = split(it->second, ',');
    try {
      if (auto rt = f.find("rels"); rt != f.end())
        for (const auto& w : split(rt->second, ',')) pi.presentation.relators.push_back(pi.presentation.parse_word(w));
      pi.w1.assign(pi.presentation.generators.size(), 0);
      if (auto wt = f.find("w1"); wt != f.end())
        for (const auto& g : split(wt->second, ',')) pi.w1[pi.presentation.generator_index(g)] = 1;
      for (const auto& [key, value] : f)
        if (key.rfind("word.", 0) == 0) site_of(key, 5).pi1_word = pi.presentation.parse_word(value);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CatalogError) throw;
      throw Error(ErrorCode::CatalogError, r.where + ": " + e.what());
    }
    a.pi1 = std::move(pi);
  } else if (f.count("rels") || f.count("w1")) {
    throw Error(ErrorCode::CatalogError, r.where + ": rels/w1 require gens");
  }
  for (const auto& [key, value] : f) {
    if (key.rfind("image.", 0) == 0) site_of(key, 6).h1_image = parse_ints(value, r.where);
    if (key.rfind("word.", 0) == 0 && !a.pi1) throw Error(ErrorCode::CatalogError, r.where + ": word.* requires gens");
  }

  if (f.count("blacks") || f.count("edges")) {
    ColoredGraph g;
    try {
      if (auto it = f.find("blacks"); it != f.end())
        for (const auto& b : split(it->second, ',')) g.add_vertex(b, VertexColor::Black);
      for (const auto& s : a.sites) g.add_vertex(s.id, VertexColor::White);
      if (auto it = f.find("edges"); it != f.end())
        for (const auto& e : split(it->second, ',')) {
          const auto dash = e.find('-');
          if (dash == std::string::npos) throw Error(ErrorCode::CatalogError, "edge '" + e + "' lacks '-'");
          g.add_edge(std::string_view(e).substr(0, dash), std::string_view(e).substr(dash + 1));
        }
    } catch (const Error& e) {
      throw Error(ErrorCode::CatalogError, r.where + ": graph: " + e.what());
    }
    a.graph = std::move(g);
  }
  return a;
}

BlockSpec block_from_record(const Record& r) {
  BlockSpec b;
  b.name = r.name;
  const auto& f = r.fields;
  static const std::set<std::string> known = {"boundary", "sites", "fixed", "quotient", "dcover", "note"};
  for (const auto& [key, value] : f)
    if (!known.count(key)) throw Error(ErrorCode::CatalogError, r.where + ": unknown block key '" + key + "'");
  auto it = f.find("boundary");
  if (it == f.end()) throw Error(ErrorCode::CatalogError, r.where + ": block needs boundary=");
  std::size_t label = 0;
  for (const auto& k : split(it->second, ',')) {
    try {
      b.boundary.push_back({parse_boundary_kind(k), "b" + std::to_string(++label)});
    } catch (const Error& e) {
      throw Error(ErrorCode::CatalogError, r.where + ": " + e.what());
    }
  }
  if (auto s = f.find("sites"); s != f.end()) b.singular_sites = make_sites(s->second, r.where);
  if (auto s = f.find("fixed"); s != f.end()) {
    auto v = parse_positive(s->second);
    if (!v || *v < 0) throw Error(ErrorCode::CatalogError, r.where + ": bad fixed count");
    b.fixed_point_count = static_cast<std::size_t>(*v);
  }
  if (auto s = f.find("quotient"); s != f.end()) {
    if (s->second == "none") b.quotient = QuotientKind::None;
    else if (s->second == "branched") b.quotient = QuotientKind::Branched;
    else if (s->second == "punctured") b.quotient = QuotientKind::Punctured;
    else throw Error(ErrorCode::CatalogError, r.where + ": bad quotient kind '" + s->second + "'");
  }
  if (auto s = f.find("dcover"); s != f.end()) b.double_cover = s->second;
  if (auto s = f.find("note"); s != f.end()) b.involution_note = s->second;
  return b;
}

std::string genus_arg(std::string_view head, long g) { return std::string(head) + "(" + std::to_string(g) + ")"; }

// Splits "head(a,b)" at top-level commas.
std::optional<std::pair<std::string, std::vector<std::string>>> split_call(const std::string& name) {
  const auto open = name.find('(');
  if (open == std::string::npos || open == 0 || name.back() != ')') return std::nullopt;
  std::vector<std::string> args;
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < name.size(); ++i) {
    const char ch = name[i];
    if (ch == '(') ++depth;
    if (ch == ')' && --depth < 0) return std::nullopt;
    if (ch == ',' && depth == 0) {
      args.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  if (depth != 0) return std::nullopt;
  args.push_back(std::move(cur));
  return std::make_pair(name.substr(0, open), std::move(args));
}

std::vector<SingularSite> suffixed(const std::vector<SingularSite>& sites, std::string_view suffix) {
  std::vector<SingularSite> out;
  for (const auto& s : sites) out.push_back({s.id + std::string(suffix), std::nullopt, std::nullopt});
  return out;
}

// Component along which a block is doubled or glued: the only one, or the
// only one that is not a projective plane.
const BoundaryComponent& gluing_component(const BlockSpec& b) {
  if (b.boundary.size() == 1) return b.boundary.front();
  const BoundaryComponent* found = nullptr;
  for (const auto& c : b.boundary) {
    if (c.kind == BoundaryKind::ProjectivePlane) continue;
    if (found) throw Error(ErrorCode::AmbiguousBoundary, "block '" + b.name + "' has several non-P2 boundary components");
    found = &c;
  }
  if (!found) throw Error(ErrorCode::AmbiguousBoundary, "block '" + b.name + "' has only projective-plane boundary");
  return *found;
}

}  // namespace

std::string_view to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Sphere: return "S2";
    case BoundaryKind::ProjectivePlane: return "P2";
    case BoundaryKind::Torus: return "T2";
    case BoundaryKind::KleinBottle: return "Kl";
  }
  return "?";
}

BoundaryKind parse_boundary_kind(std::string_view text) {
  if (text == "S2") return BoundaryKind::Sphere;
  if (text == "P2") return BoundaryKind::ProjectivePlane;
  if (text == "T2") return BoundaryKind::Torus;
  if (text == "Kl") return BoundaryKind::KleinBottle;
  throw Error(ErrorCode::SyntaxError, "unknown boundary kind '" + std::string(text) + "'");
}

const SingularSite* AtomSpec::site(std::string_view id) const {
  for (const auto& s : sites)
    if (s.id == id) return &s;
  return nullptr;
}

std::size_t BlockSpec::count(BoundaryKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(boundary.begin(), boundary.end(), [&](const BoundaryComponent& c) { return c.kind == kind; }));
}

std::string ClosedSpace::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) out += " # ";
    out += summands[i]->name;
  }
  return out;
}

std::string compact_name(std::string_view name) {
  std::string out;
  for (char ch : name)
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  return out;
}

const Catalog& Catalog::builtin() {
  static const Catalog instance = [] {
    Catalog c;
    c.merge_text(builtin_catalog_text(), "<builtin>");
    return c;
  }();
  return instance;
}

void Catalog::check_fresh(const std::string& name) const {
  if (atoms_.count(name) || blocks_.count(name) || aliases_.count(name))
    throw Error(ErrorCode::CatalogError, "name '" + name + "' is already defined");
  if (split_call(name)) {
    const auto head = split_call(name)->first;
    if (head == "cap" || head == "double" || head == "glue" || head == "Xg" || head == "FgxS1")
      throw Error(ErrorCode::CatalogError, "name '" + name + "' collides with a constructor");
  }
}

void Catalog::validate_atom(const AtomSpec& a) const {
  const std::string where = "atom '" + a.name + "'";
  auto fail = [&](const std::string& why) { return Error(ErrorCode::CatalogError, where + ": " + why); };
  if (a.sites.size() % 2 != 0) throw fail("odd number of singular sites (" + std::to_string(a.sites.size()) + ")");
  if (a.flags.manifold != a.sites.empty()) throw fail("manifold flag disagrees with the site list");
  if (a.flags.irreducible == true && a.flags.prime == false) throw fail("irreducible but not prime");
  if (a.flags.prime == true && a.flags.irreducible == false && a.name != "S2xS1" && a.name != "S2~S1" &&
      a.flags.has_nonseparating_p2 != true)
    throw fail("prime and reducible requires S2xS1, S2~S1 or a non-separating P2");
  if (!a.sites.empty() && a.flags.orientable == true) throw fail("a space with singular points has non-orientable manifold part");
  if (a.h1) {
    for (const auto& s : a.sites) {
      if (!s.h1_image) continue;
      if (s.h1_image->size() != a.h1->generator_count()) throw fail("image of site '" + s.id + "' has the wrong length");
      // The link is P2, so the class has order dividing 2.
      for (std::size_t i = 0; i < s.h1_image->size(); ++i) {
        const std::int64_t c = (*s.h1_image)[i];
        const bool ok = i < a.h1->rank ? c == 0 : (2 * c) % a.h1->torsion[i - a.h1->rank] == 0;
        if (!ok) throw fail("image of site '" + s.id + "' does not have order dividing 2");
      }
    }
  } else {
    for (const auto& s : a.sites)
      if (s.h1_image) throw fail("site images need h1");
  }
  if (a.graph) {
    const ColoredGraph& g = *a.graph;
    std::size_t whites = 0;
    for (const auto& v : g.vertices()) {
      if (v.color != VertexColor::White) continue;
      ++whites;
      if (!a.site(v.id)) throw fail("white vertex '" + v.id + "' is not a site");
    }
    if (whites != a.sites.size()) throw fail("graph whites do not match the sites");
    if (!g.satisfies_degree_law()) throw fail("graph violates the degree law");
  }
  if (a.pi1) {
    const auto& p = a.pi1->presentation;
    if (a.h1 && abelianize(p) != *a.h1)
      throw fail("abelianized presentation gives " + abelianize(p).to_string() + ", declared " + a.h1->to_string());
    if (!a.sites.empty() && std::none_of(a.pi1->w1.begin(), a.pi1->w1.end(), [](int x) { return x != 0; }))
      throw fail("singular atom needs a non-trivial orientation character");
    for (const auto& r : p.relators) {
      int parity = 0;
      for (const auto& l : r) parity ^= a.pi1->w1[l.generator];
      if (parity) throw fail("relator '" + p.format_word(r) + "' has odd orientation character");
    }
    for (const auto& s : a.sites) {
      if (!s.pi1_word) continue;
      int parity = 0;
      for (const auto& l : *s.pi1_word) parity ^= a.pi1->w1[l.generator];
      if (!parity) throw fail("peripheral class of site '" + s.id + "' preserves orientation");
    }
  }
  if (a.flags.manifold && !a.cover.empty()) throw fail("manifolds have no branched cover");
}

void Catalog::validate_block(const BlockSpec& b) const {
  const std::string where = "block '" + b.name + "'";
  auto fail = [&](const std::string& why) { return Error(ErrorCode::CatalogError, where + ": " + why); };
  if (b.boundary.empty()) throw fail("empty boundary");
  const std::size_t planes = b.count(BoundaryKind::ProjectivePlane);
  if ((b.singular_sites.size() + planes) % 2 != 0) throw fail("capping would leave an odd number of singular points");
  switch (b.quotient) {
    case QuotientKind::Branched:
      if (b.fixed_point_count != b.singular_sites.size()) throw fail("fixed-point count differs from the site count");
      break;
    case QuotientKind::Punctured:
      if (!b.singular_sites.empty() || b.fixed_point_count != planes)
        throw fail("punctured quotient needs one boundary plane per fixed point and no sites");
      break;
    case QuotientKind::None:
      if (b.fixed_point_count != 0) throw fail("fixed points without a quotient");
      break;
  }
}

void Catalog::add_atom(AtomSpec spec) {
  check_fresh(spec.name);
  validate_atom(spec);
  std::string name = spec.name;
  atoms_.emplace(std::move(name), std::make_shared<const AtomSpec>(std::move(spec)));
}

void Catalog::add_block(BlockSpec spec) {
  check_fresh(spec.name);
  validate_block(spec);
  std::string name = spec.name;
  blocks_.emplace(std::move(name), std::make_shared<const BlockSpec>(std::move(spec)));
}

void Catalog::merge_text(std::string_view text, std::string_view origin) {
  Catalog next = *this;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = std::string(origin) + ":" + std::to_string(lineno);
    Record r = parse_record(line, where);
    try {
      if (r.kind == "atom") {
        next.add_atom(atom_from_record(r));
      } else if (r.kind == "block") {
        next.add_block(block_from_record(r));
      } else if (r.kind == "alias") {
        auto it = r.fields.find("expr");
        if (it == r.fields.end()) throw Error(ErrorCode::CatalogError, "alias needs expr=");
        next.check_fresh(r.name);
        next.aliases_.emplace(r.name, it->second);
      } else {
        throw Error(ErrorCode::CatalogError, "unknown record kind '" + r.kind + "'");
      }
    } catch (const Error& e) {
      const std::string msg = e.what();
      throw Error(ErrorCode::CatalogError, msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
    }
  }
  // Cross references are checked once every record is in.
  for (const auto& [name, atom] : next.atoms_) {
    for (const auto* list : {&atom->cover, &atom->orientation_cover})
      for (const auto& c : *list) {
        AtomPtr target;
        try {
          target = next.atom(c);
        } catch (const Error&) {
          throw Error(ErrorCode::CatalogError, "atom '" + name + "': cover summand '" + c + "' is unknown");
        }
        if (!target->flags.manifold)
          throw Error(ErrorCode::CatalogError, "atom '" + name + "': cover summand '" + c + "' is singular");
      }
  }
  *this = std::move(next);
}

void Catalog::merge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::CatalogError, "cannot read catalog file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  merge_text(buf.str(), path);
}

ClosedSpace Catalog::single(AtomPtr atom) const { return ClosedSpace{{std::move(atom)}}; }

Resolved Catalog::resolve(std::string_view raw) const {
  const std::string name = compact_name(raw);
  if (auto it = atoms_.find(name); it != atoms_.end()) return single(it->second);
  if (auto it = blocks_.find(name); it != blocks_.end()) return it->second;
  if (aliases_.count(name)) throw Error(ErrorCode::UnknownName, "'" + name + "' is an expression alias, not a catalog entry");
  auto call = split_call(name);
  if (!call) throw Error(ErrorCode::UnknownName, "unknown catalog name '" + name + "'");
  const auto& [head, args] = *call;
  auto want_block = [&](const std::string& arg) -> BlockPtr {
    Resolved r = resolve(arg);
    if (auto* b = std::get_if<BlockPtr>(&r)) return *b;
    throw Error(ErrorCode::NotClosed, "'" + arg + "' is closed; " + head + "(.) needs a block");
  };
  if (head == "cap" && args.size() == 1) return cap_off(*want_block(args[0]));
  if (head == "double" && args.size() == 1) return double_along(*want_block(args[0]));
  if (head == "glue" && args.size() == 2) return glue(*want_block(args[0]), *want_block(args[1]));
  if ((head == "Xg" || head == "FgxS1") && args.size() == 1) {
    auto g = parse_positive(args[0]);
    if (!g) throw Error(ErrorCode::InvalidGenus, "genus '" + args[0] + "' is not an integer");
    return single(head == "Xg" ? xg_atom(*g) : fgxs1_atom(*g));
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog name '" + name + "'");
}

std::variant<AtomPtr, BlockPtr> Catalog::lookup(std::string_view name) const {
  Resolved r = resolve(name);
  if (auto* b = std::get_if<BlockPtr>(&r)) return *b;
  const auto& closed = std::get<ClosedSpace>(r);
  if (closed.summands.size() != 1)
    throw Error(ErrorCode::UnknownName, "'" + std::string(name) + "' is the composite " + closed.to_string());
  return closed.summands.front();
}

AtomPtr Catalog::atom(std::string_view name) const {
  Resolved r;
  try {
    r = resolve(name);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownName) throw Error(ErrorCode::UnknownAtom, e.what());
    throw;
  }
  if (std::holds_alternative<BlockPtr>(r))
    throw Error(ErrorCode::NotClosed, "'" + std::string(name) + "' is a block with boundary");
  const auto& closed = std::get<ClosedSpace>(r);
  if (closed.summands.size() != 1)
    throw Error(ErrorCode::UnknownAtom, "'" + std::string(name) + "' is the composite " + closed.to_string());
  return closed.summands.front();
}

BlockPtr Catalog::block(std::string_view name) const {
  Resolved r = resolve(name);
  if (auto* b = std::get_if<BlockPtr>(&r)) return *b;
  throw Error(ErrorCode::UnknownName, "'" + std::string(name) + "' is not a block");
}

bool Catalog::has_atom(std::string_view name) const { return atoms_.count(compact_name(name)) > 0; }

std::optional<std::string> Catalog::alias(std::string_view name) const {
  if (auto it = aliases_.find(compact_name(name)); it != aliases_.end()) return it->second;
  return std::nullopt;
}

Resolved Catalog::cap_off(const BlockSpec& b) const {
  const std::size_t planes = b.count(BoundaryKind::ProjectivePlane);
  if (planes == 0) throw Error(ErrorCode::NoProjectivePlaneBoundary, "block '" + b.name + "' has no P2 boundary to cap");
  static const std::map<std::string, std::string, std::less<>> table = {
      {"geminus", "B(pt)"},          {"quadripus", "B(S4)"},      {"octopod", "T3/beta"},
      {"bipod", "capped-bipod"},     {"tetrapod", "capped-tetrapod"}, {"K(P2)", "Susp(P2)"},
  };
  if (auto it = table.find(b.name); it != table.end() && !b.opaque) return resolve(it->second);

  std::vector<SingularSite> sites = suffixed(b.singular_sites, "");
  for (std::size_t i = 1; i <= planes; ++i) sites.push_back({"c" + std::to_string(i), std::nullopt, std::nullopt});
  std::vector<BoundaryComponent> rest;
  for (const auto& c : b.boundary)
    if (c.kind != BoundaryKind::ProjectivePlane) rest.push_back(c);
  const std::string name = "cap(" + b.name + ")";
  if (rest.empty()) {
    AtomSpec a;
    a.name = name;
    a.sites = std::move(sites);
    a.flags.manifold = false;
    a.flags.orientable = false;
    a.opaque = true;
    return single(std::make_shared<const AtomSpec>(std::move(a)));
  }
  BlockSpec out;
  out.name = name;
  out.boundary = std::move(rest);
  out.singular_sites = std::move(sites);
  out.fixed_point_count = out.singular_sites.size();
  out.quotient = QuotientKind::Branched;
  out.double_cover = b.double_cover;
  out.opaque = true;
  return std::make_shared<const BlockSpec>(std::move(out));
}

ClosedSpace Catalog::double_along(const BlockSpec& b) const {
  static const std::map<std::string, std::vector<std::string>, std::less<>> table = {
      {"D3", {"S3"}},
      {"K(P2)", {"Susp(P2)"}},
      {"B(pt)", {"Susp(P2)", "Susp(P2)"}},
      {"B(S2)", {"Susp(P2)", "Susp(P2)"}},
      {"B(S4)", {"T3/beta"}},
  };
  if (auto it = table.find(b.name); it != table.end() && !b.opaque) {
    ClosedSpace out;
    for (const auto& n : it->second) out.summands.push_back(atom(n));
    return out;
  }
  gluing_component(b);  // throws AmbiguousBoundary
  if (b.boundary.size() > 1) {
    // Projective planes are capped before doubling along the remaining
    // component.
    Resolved capped = cap_off(b);
    return double_along(*std::get<BlockPtr>(capped));
  }
  AtomSpec a;
  a.name = "double(" + b.name + ")";
  a.sites = suffixed(b.singular_sites, "_1");
  for (auto& s : suffixed(b.singular_sites, "_2")) a.sites.push_back(s);
  a.flags.manifold = a.sites.empty();
  if (!a.flags.manifold) a.flags.orientable = false;
  a.opaque = true;
  return single(std::make_shared<const AtomSpec>(std::move(a)));
}

Resolved Catalog::glue(const BlockSpec& a, const BlockSpec& b) const {
  const BoundaryComponent& ca = gluing_component(a);
  const BoundaryComponent& cb = gluing_component(b);
  if (ca.kind != cb.kind)
    throw Error(ErrorCode::BoundaryMismatch, "cannot glue " + std::string(to_string(ca.kind)) + " boundary of '" + a.name +
                                                 "' to " + std::string(to_string(cb.kind)) + " boundary of '" + b.name + "'");
  const BlockSpec& first = a.name <= b.name ? a : b;
  const BlockSpec& second = a.name <= b.name ? b : a;
  static const std::map<std::pair<std::string, std::string>, std::vector<std::string>> table = {
      {{"D3", "D3"}, {"S3"}},
      {{"B(S2)", "D3"}, {"Susp(P2)"}},
      {{"K(P2)", "K(P2)"}, {"Susp(P2)"}},
      {{"B(pt)", "B(pt)"}, {"Susp(P2)", "Susp(P2)"}},
      {{"B(S2)", "B(S2)"}, {"Susp(P2)", "Susp(P2)"}},
      {{"B(S4)", "B(S4)"}, {"T3/beta"}},
      {{"quadripus", "quadripus"}, {"octopod"}},
  };
  if (!first.opaque && !second.opaque) {
    if (auto it = table.find({first.name, second.name}); it != table.end()) {
      if (it->second.size() == 1 && blocks_.count(it->second.front())) return resolve(it->second.front());
      ClosedSpace out;
      for (const auto& n : it->second) out.summands.push_back(atom(n));
      return out;
    }
  }
  const std::string name = "glue(" + first.name + "," + second.name + ")";
  const BoundaryComponent& c1 = &first == &a ? ca : cb;
  const BoundaryComponent& c2 = &first == &a ? cb : ca;
  std::vector<BoundaryComponent> rest;
  for (const auto& c : first.boundary)
    if (&c != &c1) rest.push_back(c);
  for (const auto& c : second.boundary)
    if (&c != &c2) rest.push_back(c);
  std::vector<SingularSite> sites = suffixed(first.singular_sites, "_1");
  for (auto& s : suffixed(second.singular_sites, "_2")) sites.push_back(s);
  if (rest.empty()) {
    AtomSpec out;
    out.name = name;
    out.sites = std::move(sites);
    out.flags.manifold = out.sites.empty();
    if (!out.flags.manifold) out.flags.orientable = false;
    out.opaque = true;
    return single(std::make_shared<const AtomSpec>(std::move(out)));
  }
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i].label = "b" + std::to_string(i + 1);
  BlockSpec out;
  out.name = name;
  out.boundary = std::move(rest);
  out.singular_sites = std::move(sites);
  out.fixed_point_count = out.singular_sites.size();
  out.quotient = QuotientKind::Branched;
  out.opaque = true;
  return std::make_shared<const BlockSpec>(std::move(out));
}

std::vector<GluingEntry> Catalog::enumerate_gluings() const {
  static const std::vector<std::string> basics = {"D3", "K(P2)", "B(pt)", "B(S2)", "B(S4)"};
  std::vector<GluingEntry> out;
  for (std::size_t i = 0; i < basics.size(); ++i)
    for (std::size_t j = i; j < basics.size(); ++j) {
      const BlockPtr a = block(basics[i]);
      const BlockPtr b = block(basics[j]);
      if (gluing_component(*a).kind != gluing_component(*b).kind) continue;
      out.push_back({basics[i], basics[j], glue(*a, *b)});
    }
  return out;
}

AtomPtr Catalog::xg_atom(long g) const {
  if (g < 1) throw Error(ErrorCode::InvalidGenus, "Xg needs genus >= 1, got " + std::to_string(g));
  if (g > kMaxGenus) throw Error(ErrorCode::InvalidGenus, "genus " + std::to_string(g) + " exceeds " + std::to_string(kMaxGenus));
  AtomSpec a;
  a.name = genus_arg("Xg", g);
  const long count = 4 * g + 2;
  ColoredGraph graph;
  graph.add_vertex("c", VertexColor::Black);
  graph.add_edge(0, 0);
  for (long i = 1; i <= count; ++i) {
    const std::string id = "x" + std::to_string(i);
    a.sites.push_back({id, std::nullopt, std::nullopt});
    graph.add_edge(0, graph.add_vertex(id, VertexColor::White));
  }
  a.graph = std::move(graph);
  a.flags.manifold = false;
  a.flags.prime = true;
  a.flags.irreducible = false;
  a.flags.has_nonseparating_p2 = true;
  a.flags.orientable = false;
  a.cover = {genus_arg("FgxS1", g), "S2xS1"};
  a.note = "quotient of FgxS1 by hyperelliptic involution times conjugation, two boundary planes identified";
  validate_atom(a);
  return std::make_shared<const AtomSpec>(std::move(a));
}

AtomPtr Catalog::fgxs1_atom(long g) const {
  if (g < 1) throw Error(ErrorCode::InvalidGenus, "FgxS1 needs genus >= 1, got " + std::to_string(g));
  if (g > kMaxGenus) throw Error(ErrorCode::InvalidGenus, "genus " + std::to_string(g) + " exceeds " + std::to_string(kMaxGenus));
  AtomSpec a;
  a.name = genus_arg("FgxS1", g);
  Pi1Data pi;
  auto& p = pi.presentation;
  for (long i = 1; i <= g; ++i) {
    p.generators.push_back("a" + std::to_string(i));
    p.generators.push_back("b" + std::to_string(i));
  }
  p.generators.push_back("t");
  const std::size_t t = p.generators.size() - 1;
  Word surface;
  for (std::size_t i = 0; i + 1 < t; i += 2) {
    surface.insert(surface.end(), {{i, 1}, {i + 1, 1}, {i, -1}, {i + 1, -1}});
    for (std::size_t x : {i, i + 1}) p.relators.push_back({{x, 1}, {t, 1}, {x, -1}, {t, -1}});
  }
  p.relators.push_back(surface);
  pi.w1.assign(p.generators.size(), 0);
  a.pi1 = std::move(pi);
  a.h1 = AbelianGroup{static_cast<std::size_t>(2 * g + 1), {}};
  a.flags.prime = true;
  a.flags.irreducible = true;
  a.flags.simply_connected = false;
  a.flags.has_nonseparating_p2 = false;
  a.flags.orientable = true;
  validate_atom(a);
  return std::make_shared<const AtomSpec>(std::move(a));
}

std::vector<std::string> Catalog::atom_names() const {
  std::vector<std::string> out;
  for (const auto& [n, a] : atoms_) out.push_back(n);
  return out;
}

std::vector<std::string> Catalog::block_names() const {
  std::vector<std::string> out;
  for (const auto& [n, b] : blocks_) out.push_back(n);
  return out;
}

std::vector<std::string> Catalog::alias_names() const {
  std::vector<std::string> out;
  for (const auto& [n, a] : aliases_) out.push_back(n);
  return out;
}

}  // namespace alexcalc
