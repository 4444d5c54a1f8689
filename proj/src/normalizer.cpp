#include "alexcalc/normalizer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "alexcalc/cover.hpp"
#include "alexcalc/error.hpp"
#include "alexcalc/homology.hpp"
#include "alexcalc/io.hpp"
#include "alexcalc/p2graph.hpp"

namespace alexcalc {

namespace {

constexpr std::string_view kSphere = "S3";
constexpr std::string_view kSuspension = "Susp(P2)";
constexpr std::string_view kProductBundle = "S2xS1";
constexpr std::string_view kTwistedBundle = "S2~S1";

struct WorkJoint {
  std::size_t a;
  std::string sa;
  std::size_t b;
  std::string sb;
  bool alive = true;
};

struct Work {
  std::vector<AtomPtr> atoms;
  std::vector<bool> alive;
  std::vector<WorkJoint> joints;

  std::vector<std::size_t> incident(std::size_t node) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < joints.size(); ++j)
      if (joints[j].alive && (joints[j].a == node || joints[j].b == node)) out.push_back(j);
    return out;
  }

  bool non_orientable() const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (alive[i] && (!atoms[i]->flags.manifold || atoms[i]->flags.orientable == false)) return true;
    return false;
  }
};

struct Candidate {
  Rule rule;
  std::size_t node;
};

std::vector<Candidate> candidates(const Work& w) {
  std::vector<Candidate> out;
  const bool twisted = w.non_orientable();
  for (std::size_t i = 0; i < w.atoms.size(); ++i) {
    if (!w.alive[i]) continue;
    const auto& name = w.atoms[i]->name;
    if (name == kSphere) out.push_back({Rule::DropSphere, i});
    else if (name == kSuspension && !w.incident(i).empty()) out.push_back({Rule::AbsorbSuspension, i});
    else if (name == kProductBundle && twisted) out.push_back({Rule::TwistBundle, i});
  }
  return out;
}

void apply(Work& w, const Candidate& c, const Catalog& catalog) {
  switch (c.rule) {
    case Rule::DropSphere:
      w.alive[c.node] = false;
      return;
    case Rule::TwistBundle:
      w.atoms[c.node] = catalog.atom(kTwistedBundle);
      return;
    case Rule::AbsorbSuspension: {
      const auto inc = w.incident(c.node);
      std::vector<std::pair<std::size_t, std::string>> ends;
      for (std::size_t j : inc) {
        auto& jt = w.joints[j];
        jt.alive = false;
        if (jt.a == c.node) ends.emplace_back(jt.b, jt.sb);
        else ends.emplace_back(jt.a, jt.sa);
      }
      // Two neighbors are reconnected; a single neighbor keeps its site free.
      if (ends.size() == 2) w.joints.push_back({ends[0].first, ends[0].second, ends[1].first, ends[1].second, true});
      w.alive[c.node] = false;
      return;
    }
  }
}

// Site classes that a graph automorphism may permute freely: whites with
// the same neighborhood and identical homology and peripheral data.
class TwinClasses {
 public:
  const std::vector<std::string>& of(const AtomSpec& a) {
    auto it = cache_.find(&a);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(&a, compute(a)).first->second;
  }

 private:
  static bool twins(const AtomSpec& a, const ColoredGraph& g, std::size_t si, std::size_t sj) {
    const auto& x = a.sites[si];
    const auto& y = a.sites[sj];
    if (x.h1_image != y.h1_image || x.pi1_word != y.pi1_word) return false;
    const std::size_t u = g.index_of(x.id), v = g.index_of(y.id);
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    if (auto p = std::find(nu.begin(), nu.end(), v); p != nu.end()) nu.erase(p);
    if (auto p = std::find(nv.begin(), nv.end(), u); p != nv.end()) nv.erase(p);
    return nu == nv;
  }

  static std::vector<std::string> compute(const AtomSpec& a) {
    std::vector<std::string> rep(a.sites.size());
    for (std::size_t i = 0; i < a.sites.size(); ++i) rep[i] = a.sites[i].id;
    if (!a.graph) return rep;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < a.sites.size(); ++i) {
      bool placed = false;
      for (auto& cls : classes) {
        if (std::all_of(cls.begin(), cls.end(), [&](std::size_t j) { return twins(a, *a.graph, i, j); })) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({i});
    }
    for (const auto& cls : classes) {
      std::string best = a.sites[cls.front()].id;
      for (std::size_t i : cls) best = std::min(best, a.sites[i].id);
      for (std::size_t i : cls) rep[i] = best;
    }
    return rep;
  }

  std::map<const AtomSpec*, std::vector<std::string>> cache_;
};

std::string framed(std::string_view s) { return std::to_string(s.size()) + ":" + std::string(s); }

struct CanonNode {
  AtomPtr atom;
  std::string entry_class;
  std::vector<std::pair<std::string, CanonNode>> children;  // (own class, child)
};

struct Encoded {
  std::string code;
  CanonNode node;
};

class ClusterCanonizer {
 public:
  ClusterCanonizer(const Work& w, TwinClasses& twins) : w_(w), twins_(twins) {}

  // Minimizes the rooted encoding over every root of the cluster tree.
  Encoded run(const std::vector<std::size_t>& members) {
    std::optional<Encoded> best;
    for (std::size_t root : members) {
      Encoded e = encode(root, w_.joints.size());
      if (!best || e.code < best->code) best = std::move(e);
    }
    return std::move(*best);
  }

 private:
  std::string class_of(std::size_t node, const std::string& site) {
    const AtomSpec& a = *w_.atoms[node];
    const auto& reps = twins_.of(a);
    for (std::size_t i = 0; i < a.sites.size(); ++i)
      if (a.sites[i].id == site) return reps[i];
    throw Error(ErrorCode::SiteNotFound, "site '" + site + "' vanished from '" + a.name + "'");
  }

  Encoded encode(std::size_t node, std::size_t via) {
    std::vector<std::pair<std::string, std::pair<std::string, CanonNode>>> parts;
    for (std::size_t j : w_.incident(node)) {
      if (j == via) continue;
      const auto& jt = w_.joints[j];
      const bool mine_a = jt.a == node;
      const std::size_t child = mine_a ? jt.b : jt.a;
      const std::string own = class_of(node, mine_a ? jt.sa : jt.sb);
      const std::string entry = class_of(child, mine_a ? jt.sb : jt.sa);
      Encoded sub = encode(child, j);
      sub.node.entry_class = entry;
      std::string code = "(" + framed(own) + framed(entry) + sub.code + ")";
      parts.push_back({std::move(code), {own, std::move(sub.node)}});
    }
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Encoded out;
    out.code = "[" + framed(w_.atoms[node]->name);
    out.node.atom = w_.atoms[node];
    for (auto& [code, child] : parts) {
      out.code += code;
      out.node.children.push_back(std::move(child));
    }
    out.code += "]";
    return out;
  }

  const Work& w_;
  TwinClasses& twins_;
};

ExprPtr render(const CanonNode& n, TwinClasses& twins, std::string* entry_site) {
  const AtomSpec& a = *n.atom;
  const auto& reps = twins.of(a);
  std::set<std::string> used;
  auto take = [&](const std::string& cls) {
    std::vector<std::string> members;
    for (std::size_t i = 0; i < a.sites.size(); ++i)
      if (reps[i] == cls && !used.count(a.sites[i].id)) members.push_back(a.sites[i].id);
    if (members.empty()) throw Error(ErrorCode::SiteAlreadyConsumed, "site class '" + cls + "' exhausted on '" + a.name + "'");
    const std::string pick = *std::min_element(members.begin(), members.end());
    used.insert(pick);
    return pick;
  };
  if (entry_site) *entry_site = take(n.entry_class);
  ExprPtr e = SpaceExpr::make_atom(n.atom);
  for (const auto& [own, child] : n.children) {
    const std::string mine = take(own);
    std::string theirs;
    ExprPtr sub = render(child, twins, &theirs);
    e = conn_sum_p2(e, {0, mine}, sub, {0, theirs});
  }
  return e;
}

}  // namespace

std::string NormalForm::to_string() const {
  std::vector<std::string> parts;
  for (const auto& c : clusters) parts.push_back(c.text);
  for (const auto& m : manifold_summands) parts.push_back(m);
  for (std::size_t i = 0; i < s2_bundle_count; ++i) parts.emplace_back(kTwistedBundle);
  if (parts.empty()) return std::string(kSphere);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " # ";
    out += parts[i];
  }
  return out;
}

ExprPtr NormalForm::to_expr(const Catalog& catalog) const {
  std::vector<ExprPtr> parts;
  for (const auto& c : clusters) parts.push_back(c.representative);
  for (const auto& m : manifold_atoms) parts.push_back(SpaceExpr::make_atom(m));
  for (std::size_t i = 0; i < s2_bundle_count; ++i) parts.push_back(SpaceExpr::make_atom(catalog.atom(kTwistedBundle)));
  if (parts.empty()) return SpaceExpr::make_atom(catalog.atom(kSphere));
  ExprPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conn_sum_s2(out, parts[i]);
  return out;
}

bool NormalForm::operator==(const NormalForm& other) const {
  if (manifold_summands != other.manifold_summands || s2_bundle_count != other.s2_bundle_count) return false;
  if (clusters.size() != other.clusters.size()) return false;
  for (std::size_t i = 0; i < clusters.size(); ++i)
    if (clusters[i].text != other.clusters[i].text) return false;
  return true;
}

NormalForm normal_form(const SpaceExpr& e, const Catalog& catalog, const NormalizeOptions& options) {
  const Decomposition d = decompose(e);
  Work w;
  w.atoms = d.leaves;
  w.alive.assign(d.leaves.size(), true);
  for (const auto& j : d.joints) w.joints.push_back({j.leaf_a, j.site_a, j.leaf_b, j.site_b, true});

  std::size_t fuel = options.fuel ? options.fuel : 4 * (d.leaves.size() + d.joints.size()) + 16;
  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);
  while (true) {
    const auto found = candidates(w);
    if (found.empty()) break;
    if (fuel == 0) throw Error(ErrorCode::FuelExhausted, "rewriting did not terminate within its fuel bound");
    --fuel;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(*rng);
    apply(w, found[pick], catalog);
    if (options.trace) options.trace->push_back(found[pick].rule);
  }

  // Components of the surviving joints.
  std::vector<std::size_t> comp(w.atoms.size(), w.atoms.size());
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < w.atoms.size(); ++i) {
    if (!w.alive[i] || comp[i] != w.atoms.size()) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = groups.size();
    groups.emplace_back();
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      groups.back().push_back(v);
      for (std::size_t j : w.incident(v)) {
        const std::size_t u = w.joints[j].a == v ? w.joints[j].b : w.joints[j].a;
        if (comp[u] == w.atoms.size()) {
          comp[u] = comp[i];
          stack.push_back(u);
        }
      }
    }
  }

  NormalForm nf;
  TwinClasses twins;
  std::vector<std::pair<std::string, AtomPtr>> manifolds;
  for (auto& members : groups) {
    std::sort(members.begin(), members.end());
    if (members.size() == 1 && w.atoms[members[0]]->flags.manifold) {
      const AtomPtr& a = w.atoms[members[0]];
      if (a->name == kTwistedBundle) ++nf.s2_bundle_count;
      else manifolds.emplace_back(a->name, a);
      continue;
    }
    Encoded enc = ClusterCanonizer(w, twins).run(members);
    Cluster c;
    for (std::size_t m : members) c.atoms.push_back(w.atoms[m]->name);
    std::sort(c.atoms.begin(), c.atoms.end());
    c.representative = render(enc.node, twins, nullptr);
    c.text = format_expr(*c.representative);
    auto g = graph_of(*c.representative);
    c.graph_label = g ? canonical_label(*g) : "?";
    nf.clusters.push_back(std::move(c));
  }
  std::sort(manifolds.begin(), manifolds.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [name, atom] : manifolds) {
    nf.manifold_summands.push_back(name);
    nf.manifold_atoms.push_back(atom);
  }
  std::sort(nf.clusters.begin(), nf.clusters.end(), [](const Cluster& x, const Cluster& y) {
    return std::tie(x.atoms, x.graph_label, x.text) < std::tie(y.atoms, y.graph_label, y.text);
  });
  return nf;
}

namespace {

void check_coherence(const SpaceExpr& e) {
  for (const auto& a : decompose(e).leaves)
    if (a->flags.irreducible == true && a->flags.prime == false)
      throw Error(ErrorCode::InconsistentFlags, "atom '" + a->name + "' is flagged irreducible but not prime");
}

// The single prime piece of a normal form, or nullptr when there are zero
// or several pieces; `pieces` receives their number.
AtomPtr sole_atom(const NormalForm& nf, const Catalog& catalog, std::size_t& pieces) {
  pieces = nf.clusters.size() + nf.manifold_summands.size() + nf.s2_bundle_count;
  if (pieces != 1) return nullptr;
  if (!nf.manifold_atoms.empty()) return nf.manifold_atoms.front();
  if (nf.s2_bundle_count) return catalog.atom(kTwistedBundle);
  const Cluster& c = nf.clusters.front();
  if (c.atoms.size() != 1) {
    pieces = c.atoms.size();
    return nullptr;
  }
  return c.representative->atom();
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
  return out;
}

std::string graph_summary(const ColoredGraph& g) {
  std::size_t blacks = 0;
  std::vector<std::size_t> pendants;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex(v).color != VertexColor::Black) continue;
    ++blacks;
    std::size_t p = 0;
    for (std::size_t u : g.neighbors(v))
      if (g.vertex(u).color == VertexColor::White) ++p;
    pendants.push_back(p);
  }
  std::sort(pendants.rbegin(), pendants.rend());
  std::string out = "blacks=" + std::to_string(blacks) + " whites=" + std::to_string(g.vertex_count() - blacks) +
                    " edges=" + std::to_string(g.edge_count()) + " pendants=";
  for (std::size_t i = 0; i < pendants.size(); ++i) out += (i ? "," : "") + std::to_string(pendants[i]);
  if (pendants.empty()) out += "-";
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : canonical_label(g)) h = (h ^ ch) * 1099511628211ull;
  return out + " label=" + hex64(h);
}

std::string orientation_text(bool o) { return o ? "orientable" : "non-orientable"; }

}  // namespace

std::optional<bool> is_prime(const SpaceExpr& e, const Catalog& catalog) {
  const NormalForm nf = normal_form(e, catalog);
  std::size_t pieces = 0;
  const AtomPtr a = sole_atom(nf, catalog, pieces);
  if (pieces == 0) return true;
  if (!a) return false;
  if (a->flags.prime) return a->flags.prime;
  if (a->flags.irreducible == true) return true;
  return std::nullopt;
}

std::optional<bool> is_irreducible(const SpaceExpr& e, const Catalog& catalog) {
  check_coherence(e);
  const NormalForm nf = normal_form(e, catalog);
  std::size_t pieces = 0;
  const AtomPtr a = sole_atom(nf, catalog, pieces);
  if (pieces == 0) return true;
  if (!a) return false;
  if (a->flags.irreducible) return a->flags.irreducible;
  if (a->flags.prime == false) return false;
  return std::nullopt;
}

std::optional<Certificate> distinguish(const SpaceExpr& a, const SpaceExpr& b, const Catalog& catalog) {
  const std::size_t na = singular_count(a), nb = singular_count(b);
  if (na != nb) return Certificate{"singular count", std::to_string(na), std::to_string(nb)};

  const auto oa = is_orientable(a), ob = is_orientable(b);
  if (oa && ob && *oa != *ob) return Certificate{"orientability", orientation_text(*oa), orientation_text(*ob)};

  const auto ha = h1(a), hb = h1(b);
  if (ha && hb && *ha != *hb) return Certificate{"H1", ha->to_string(), hb->to_string()};

  const auto ga = graph_of(*normal_form(a, catalog).to_expr(catalog));
  const auto gb = graph_of(*normal_form(b, catalog).to_expr(catalog));
  if (ga && gb && canonical_label(*ga) != canonical_label(*gb))
    return Certificate{"colored P2-graph", graph_summary(*ga), graph_summary(*gb)};

  if (na > 0) {
    const auto ca = cover_h1(a, catalog), cb = cover_h1(b, catalog);
    if (ca && cb && *ca != *cb) return Certificate{"cover H1", ca->to_string(), cb->to_string()};
  }
  return std::nullopt;
}

Equivalence equivalent(const SpaceExpr& a, const SpaceExpr& b, const Catalog& catalog) {
  if (normal_form(a, catalog) == normal_form(b, catalog)) return {Verdict::Yes, std::nullopt};
  if (auto cert = distinguish(a, b, catalog)) return {Verdict::No, std::move(cert)};
  return {Verdict::Unknown, std::nullopt};
}

}  // namespace alexcalc
