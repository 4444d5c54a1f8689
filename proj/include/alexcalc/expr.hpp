#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alexcalc/catalog.hpp"

namespace alexcalc {

class SpaceExpr;
using ExprPtr = std::shared_ptr<const SpaceExpr>;

// A singular site of an operand: leaf index counted left to right inside
// that operand, and the site id on the leaf's atom.
struct SiteRef {
  std::size_t leaf = 0;
  std::string site;
  bool operator==(const SiteRef&) const = default;
};

// Immutable expression tree over closed atoms.  Every node caches its leaf
// count and its unconsumed sites in left-to-right order.
class SpaceExpr {
 public:
  enum class Kind { Atom, SumS2, SumP2 };

  static ExprPtr make_atom(AtomPtr atom);

  Kind kind() const noexcept { return kind_; }
  const AtomPtr& atom() const noexcept { return atom_; }
  const ExprPtr& left() const noexcept { return left_; }
  const ExprPtr& right() const noexcept { return right_; }
  const SiteRef& left_site() const noexcept { return left_site_; }
  const SiteRef& right_site() const noexcept { return right_site_; }

  std::size_t leaf_count() const noexcept { return leaves_; }
  const std::vector<SiteRef>& available_sites() const noexcept { return available_; }

  // nullptr when the site is absent; throws SiteAlreadyConsumed when the
  // site exists on that leaf but was used by an inner #^.
  const SiteRef* resolve_site(const SiteRef& ref) const;

 private:
  friend ExprPtr conn_sum_s2(ExprPtr a, ExprPtr b);
  friend ExprPtr conn_sum_p2(ExprPtr a, SiteRef sa, ExprPtr b, SiteRef sb);

  Kind kind_ = Kind::Atom;
  AtomPtr atom_;
  ExprPtr left_, right_;
  SiteRef left_site_, right_site_;
  std::size_t leaves_ = 1;
  std::vector<SiteRef> available_;
};

ExprPtr conn_sum_s2(ExprPtr a, ExprPtr b);
// Throws SiteNotFound or SiteAlreadyConsumed.
ExprPtr conn_sum_p2(ExprPtr a, SiteRef sa, ExprPtr b, SiteRef sb);

// Folds summands with # from the left; a single S3 for an empty list.
ExprPtr sum_of(const ClosedSpace& space);

std::size_t singular_count(const SpaceExpr& e);

// Flat view: leaves in left-to-right order and one joint per #^, with leaf
// indices global to the whole expression.
struct Joint {
  std::size_t leaf_a;
  std::string site_a;
  std::size_t leaf_b;
  std::string site_b;
};

struct Decomposition {
  std::vector<AtomPtr> leaves;
  std::vector<Joint> joints;
  // Connected components under the joints, each sorted, ordered by first leaf.
  std::vector<std::vector<std::size_t>> clusters() const;
};

Decomposition decompose(const SpaceExpr& e);

// Tri-state predicates decided through the normal form and atom flags;
// nullopt is Unknown.  is_irreducible throws InconsistentFlags on an atom
// claiming irreducible but not prime.
std::optional<bool> is_prime(const SpaceExpr& e, const Catalog& catalog);
std::optional<bool> is_irreducible(const SpaceExpr& e, const Catalog& catalog);

// Orientability of the manifold part.
std::optional<bool> is_orientable(const SpaceExpr& e);

}  // namespace alexcalc
