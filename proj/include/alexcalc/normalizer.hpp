#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alexcalc/expr.hpp"

namespace alexcalc {

// A connected #^-assembly of singular atoms.
struct Cluster {
  std::vector<std::string> atoms;  // sorted multiset of atom names
  std::string graph_label;         // canonical label, "?" when unknown
  ExprPtr representative;          // canonical rebuild of the cluster
  std::string text;                // format_expr(representative)
};

struct NormalForm {
  std::vector<std::string> manifold_summands;  // sorted, never S3 or S2~S1
  std::size_t s2_bundle_count = 0;             // copies of S2~S1
  std::vector<Cluster> clusters;               // sorted by (atoms, graph_label, text)
  std::vector<AtomPtr> manifold_atoms;         // parallel to manifold_summands

  // Clusters, then manifold summands, then the S2~S1 copies, joined by " # ";
  // "S3" when everything cancelled.
  std::string to_string() const;
  ExprPtr to_expr(const Catalog& catalog) const;

  bool operator==(const NormalForm& other) const;
};

enum class Rule { DropSphere, AbsorbSuspension, TwistBundle };

struct NormalizeOptions {
  // Pick among applicable rewrites at random instead of first-found.
  std::optional<std::uint64_t> seed;
  // 0 picks a bound linear in the expression size.
  std::size_t fuel = 0;
  // Applied rewrites are appended here when non-null.
  std::vector<Rule>* trace = nullptr;
};

NormalForm normal_form(const SpaceExpr& e, const Catalog& catalog, const NormalizeOptions& options = {});

struct Certificate {
  std::string kind;  // "singular count", "orientability", "H1", "colored P2-graph", "cover H1"
  std::string left;
  std::string right;
};

// Runs singular count, orientability, H1, colored P2-graph and cover H1 in
// that order; the first differing invariant is returned.
std::optional<Certificate> distinguish(const SpaceExpr& a, const SpaceExpr& b, const Catalog& catalog);

enum class Verdict { Yes, No, Unknown };

struct Equivalence {
  Verdict verdict = Verdict::Unknown;
  std::optional<Certificate> certificate;  // set exactly when verdict is No
};

Equivalence equivalent(const SpaceExpr& a, const SpaceExpr& b, const Catalog& catalog);

}  // namespace alexcalc
