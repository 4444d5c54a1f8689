#include "alexcalc/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "alexcalc/error.hpp"
#include "alexcalc/normalizer.hpp"

namespace alexcalc {

std::optional<ExprPtr> double_branched_cover(const SpaceExpr& e, const Catalog& catalog) {
  const Decomposition d = decompose(e);
  std::vector<AtomPtr> summands;
  std::size_t singular_clusters = 0;
  for (const auto& members : d.clusters()) {
    const AtomPtr& first = d.leaves[members.front()];
    if (members.size() == 1 && first->flags.manifold) continue;
    ++singular_clusters;
    for (std::size_t i : members) {
      const auto& a = d.leaves[i];
      if (a->cover.empty()) return std::nullopt;
      for (const auto& name : a->cover) summands.push_back(catalog.atom(name));
    }
  }
  if (singular_clusters == 0)
    throw Error(ErrorCode::ManifoldInput, "a manifold has no double branched cover with isolated fixed points");
  for (const auto& members : d.clusters()) {
    const AtomPtr& n = d.leaves[members.front()];
    if (members.size() != 1 || !n->flags.manifold) continue;
    if (!n->flags.orientable) return std::nullopt;
    if (*n->flags.orientable) {
      summands.push_back(n);
      summands.push_back(n);
    } else {
      if (n->orientation_cover.empty()) return std::nullopt;
      for (const auto& name : n->orientation_cover) summands.push_back(catalog.atom(name));
      summands.push_back(catalog.atom("S2xS1"));
    }
  }
  for (std::size_t i = 1; i < singular_clusters; ++i) summands.push_back(catalog.atom("S2xS1"));
  return sum_of(ClosedSpace{summands});
}

std::optional<AbelianGroup> cover_h1(const SpaceExpr& e, const Catalog& catalog) {
  const auto cover = double_branched_cover(e, catalog);
  if (!cover) return std::nullopt;
  AbelianGroup total;
  for (const auto& a : decompose(**cover).leaves) {
    if (!a->h1) return std::nullopt;
    total = direct_sum(total, *a->h1);
  }
  return total;
}

std::optional<bool> irreducibility_transfer(const SpaceExpr& e, const Catalog& catalog) {
  if (singular_count(e) == 0) {
    const auto leaves = decompose(e).leaves;
    if (std::all_of(leaves.begin(), leaves.end(), [](const AtomPtr& a) { return a->flags.manifold; }))
      return std::nullopt;
  }
  const std::optional<bool> own = is_irreducible(e, catalog);
  std::optional<bool> lifted;
  if (const auto cover = double_branched_cover(e, catalog)) lifted = is_irreducible(**cover, catalog);
  if (own && lifted && *own != *lifted)
    throw Error(ErrorCode::InconsistentFlags, std::string("space is ") + (*own ? "" : "not ") +
                                                  "irreducible but its double branched cover is " +
                                                  (*lifted ? "" : "not ") + "irreducible");
  return own ? own : lifted;
}

namespace {

std::string default_base(const std::string& name) {
  const auto dot = name.rfind('.');
  if (dot == std::string::npos || dot + 1 == name.size()) return name;
  const bool digits = std::all_of(name.begin() + static_cast<std::ptrdiff_t>(dot) + 1, name.end(),
                                  [](char c) { return c >= '0' && c <= '9'; });
  return digits ? name.substr(0, dot) : name;
}

}  // namespace

PieceCover parse_piece_cover(std::string_view text) {
  PieceCover pc;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty() || w[0][0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return Error(ErrorCode::SyntaxError, "cover line " + std::to_string(lineno) + ": " + why);
    };
    if (w[0] == "piece") {
      if ((w.size() != 4 && w.size() != 6) || w[2] != "sheets" || (w.size() == 6 && w[4] != "over"))
        throw fail("expected 'piece <name> sheets <n> [over <base>]'");
      CoverPiece p;
      p.name = w[1];
      try {
        std::size_t used = 0;
        p.sheets = std::stoi(w[3], &used);
        if (used != w[3].size()) throw fail("bad sheet count '" + w[3] + "'");
      } catch (const std::logic_error&) {
        throw fail("bad sheet count '" + w[3] + "'");
      }
      p.base = w.size() == 6 ? w[5] : default_base(p.name);
      pc.pieces.push_back(std::move(p));
    } else if (w[0] == "match") {
      if (w.size() != 3) throw fail("expected 'match <piece>.<boundary> <piece>.<boundary>'");
      pc.matches.emplace_back(w[1], w[2]);
    } else {
      throw fail("unknown directive '" + w[0] + "'");
    }
  }
  return pc;
}

std::string format_piece_cover(const PieceCover& pc) {
  std::ostringstream out;
  for (const auto& p : pc.pieces) {
    out << "piece " << p.name << " sheets " << p.sheets;
    if (p.base != default_base(p.name)) out << " over " << p.base;
    out << '\n';
  }
  for (const auto& [a, b] : pc.matches) out << "match " << a << ' ' << b << '\n';
  return out.str();
}

CoverVerdict check_two_sheeted(const PieceCover& pc) {
  auto no = [](std::string why) { return CoverVerdict{false, std::move(why)}; };
  if (pc.pieces.empty()) return no("no pieces");
  std::map<std::string, std::size_t> index;
  std::map<std::string, int> per_base;
  for (std::size_t i = 0; i < pc.pieces.size(); ++i) {
    const auto& p = pc.pieces[i];
    if (!index.emplace(p.name, i).second) return no("piece '" + p.name + "' declared twice");
    if (p.sheets != 1 && p.sheets != 2) return no("piece '" + p.name + "' has " + std::to_string(p.sheets) + " sheets");
    per_base[p.base] += p.sheets;
  }
  for (const auto& [base, total] : per_base)
    if (total != 2) return no("base piece '" + base + "' is covered with degree " + std::to_string(total));

  // Endpoints resolve to (piece, boundary); each may be used once.
  struct End {
    std::size_t piece;
    std::string label;
  };
  std::set<std::string> seen;
  std::vector<std::pair<End, End>> ends;
  for (const auto& [x, y] : pc.matches) {
    std::pair<End, End> m;
    for (auto [side, slot] : {std::pair{&x, &m.first}, std::pair{&y, &m.second}}) {
      const auto dot = side->rfind('.');
      if (dot == std::string::npos || dot == 0 || dot + 1 == side->size())
        return no("endpoint '" + *side + "' is not <piece>.<boundary>");
      auto it = index.find(side->substr(0, dot));
      if (it == index.end()) return no("endpoint '" + *side + "' names no piece");
      if (!seen.insert(*side).second) return no("boundary '" + *side + "' is matched twice");
      *slot = {it->second, side->substr(dot + 1)};
    }
    ends.push_back(std::move(m));
  }

  // A boundary of a one-sheeted piece maps with degree 1.  A two-sheeted
  // piece meeting one neighboring base through several boundaries maps each
  // with degree 1, through a single boundary with degree 2.
  std::map<std::pair<std::size_t, std::string>, int> toward;
  for (const auto& [a, b] : ends) {
    ++toward[{a.piece, pc.pieces[b.piece].base}];
    ++toward[{b.piece, pc.pieces[a.piece].base}];
  }
  auto degree = [&](const End& e, const End& other) {
    if (pc.pieces[e.piece].sheets == 1) return 1;
    return toward[{e.piece, pc.pieces[other.piece].base}] >= 2 ? 1 : 2;
  };
  std::map<std::pair<std::string, std::string>, int> across;
  for (const auto& [a, b] : ends) {
    const int da = degree(a, b), db = degree(b, a);
    if (da != db)
      return no("boundaries " + pc.pieces[a.piece].name + "." + a.label + " and " + pc.pieces[b.piece].name + "." +
                b.label + " map with degrees " + std::to_string(da) + " and " + std::to_string(db));
    const auto& ba = pc.pieces[a.piece].base;
    const auto& bb = pc.pieces[b.piece].base;
    if (ba != bb) across[{std::min(ba, bb), std::max(ba, bb)}] += da;
  }
  for (const auto& [bases, total] : across)
    if (total % 2 != 0)
      return no("surface between '" + bases.first + "' and '" + bases.second + "' is covered with odd degree");

  std::vector<std::size_t> parent(pc.pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : ends) parent[find(a.piece)] = find(b.piece);
  for (std::size_t i = 1; i < pc.pieces.size(); ++i)
    if (find(i) != find(0)) return no("total space is disconnected");
  return {true, ""};
}

bool verify_two_sheeted(const PieceCover& pc) { return check_two_sheeted(pc).ok; }

}  // namespace alexcalc
