#include "alexcalc/expr.hpp"

#include <algorithm>
#include <numeric>

#include "alexcalc/error.hpp"

namespace alexcalc {

ExprPtr SpaceExpr::make_atom(AtomPtr atom) {
  if (!atom) throw Error(ErrorCode::UnknownAtom, "null atom");
  auto e = std::make_shared<SpaceExpr>();
  e->kind_ = Kind::Atom;
  for (const auto& s : atom->sites) e->available_.push_back({0, s.id});
  e->atom_ = std::move(atom);
  return e;
}

const SiteRef* SpaceExpr::resolve_site(const SiteRef& ref) const {
  for (const auto& s : available_)
    if (s == ref) return &s;
  return nullptr;
}

namespace {

// Distinguishes a missing site from one consumed further down the tree.
bool site_exists(const SpaceExpr& e, const SiteRef& ref) {
  switch (e.kind()) {
    case SpaceExpr::Kind::Atom:
      return ref.leaf == 0 && e.atom()->site(ref.site) != nullptr;
    default: {
      const std::size_t nl = e.left()->leaf_count();
      if (ref.leaf < nl) return site_exists(*e.left(), ref);
      return site_exists(*e.right(), {ref.leaf - nl, ref.site});
    }
  }
}

void check_site(const SpaceExpr& e, const SiteRef& ref, const char* side) {
  if (e.resolve_site(ref)) return;
  if (ref.leaf < e.leaf_count() && site_exists(e, ref))
    throw Error(ErrorCode::SiteAlreadyConsumed,
                std::string(side) + " site '" + ref.site + "' of leaf " + std::to_string(ref.leaf) + " is already consumed");
  throw Error(ErrorCode::SiteNotFound,
              std::string(side) + " operand has no site '" + ref.site + "' on leaf " + std::to_string(ref.leaf));
}

}  // namespace

ExprPtr conn_sum_s2(ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<SpaceExpr>();
  e->kind_ = SpaceExpr::Kind::SumS2;
  e->leaves_ = a->leaf_count() + b->leaf_count();
  e->available_ = a->available_sites();
  for (auto s : b->available_sites()) {
    s.leaf += a->leaf_count();
    e->available_.push_back(std::move(s));
  }
  e->left_ = std::move(a);
  e->right_ = std::move(b);
  return e;
}

ExprPtr conn_sum_p2(ExprPtr a, SiteRef sa, ExprPtr b, SiteRef sb) {
  check_site(*a, sa, "left");
  check_site(*b, sb, "right");
  auto e = std::make_shared<SpaceExpr>();
  e->kind_ = SpaceExpr::Kind::SumP2;
  e->leaves_ = a->leaf_count() + b->leaf_count();
  for (const auto& s : a->available_sites())
    if (!(s == sa)) e->available_.push_back(s);
  for (auto s : b->available_sites()) {
    if (s == sb) continue;
    s.leaf += a->leaf_count();
    e->available_.push_back(std::move(s));
  }
  e->left_ = std::move(a);
  e->right_ = std::move(b);
  e->left_site_ = std::move(sa);
  e->right_site_ = std::move(sb);
  return e;
}

ExprPtr sum_of(const ClosedSpace& space) {
  if (space.summands.empty()) throw Error(ErrorCode::UnknownAtom, "empty connected sum");
  ExprPtr out = SpaceExpr::make_atom(space.summands.front());
  for (std::size_t i = 1; i < space.summands.size(); ++i)
    out = conn_sum_s2(out, SpaceExpr::make_atom(space.summands[i]));
  return out;
}

std::size_t singular_count(const SpaceExpr& e) { return e.available_sites().size(); }

namespace {

void flatten(const SpaceExpr& e, Decomposition& out) {
  const std::size_t base = out.leaves.size();
  switch (e.kind()) {
    case SpaceExpr::Kind::Atom:
      out.leaves.push_back(e.atom());
      return;
    case SpaceExpr::Kind::SumS2:
      flatten(*e.left(), out);
      flatten(*e.right(), out);
      return;
    case SpaceExpr::Kind::SumP2:
      flatten(*e.left(), out);
      flatten(*e.right(), out);
      out.joints.push_back({base + e.left_site().leaf, e.left_site().site,
                            base + e.left()->leaf_count() + e.right_site().leaf, e.right_site().site});
      return;
  }
}

}  // namespace

Decomposition decompose(const SpaceExpr& e) {
  Decomposition out;
  flatten(e, out);
  return out;
}

std::vector<std::vector<std::size_t>> Decomposition::clusters() const {
  std::vector<std::size_t> parent(leaves.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& j : joints) parent[find(j.leaf_a)] = find(j.leaf_b);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(leaves.size(), leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] == leaves.size()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

std::optional<bool> is_orientable(const SpaceExpr& e) {
  const Decomposition d = decompose(e);
  bool unknown = false;
  for (const auto& a : d.leaves) {
    if (!a->flags.manifold) return false;
    if (!a->flags.orientable) unknown = true;
    else if (!*a->flags.orientable) return false;
  }
  if (unknown) return std::nullopt;
  return true;
}

}  // namespace alexcalc
