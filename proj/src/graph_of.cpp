#include "alexcalc/error.hpp"
#include "alexcalc/expr.hpp"
#include "alexcalc/p2graph.hpp"

namespace alexcalc {

std::optional<ColoredGraph> graph_of(const SpaceExpr& e) {
  const Decomposition d = decompose(e);
  ColoredGraph g;
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    const AtomSpec& a = *d.leaves[i];
    if (!a.graph) {
      if (a.flags.manifold) continue;  // no projective planes to cut along
      return std::nullopt;
    }
    g = disjoint_union(g, a.graph->prefixed(std::to_string(i) + ":"));
  }
  try {
    for (const auto& j : d.joints)
      join_whites(g, g.index_of(std::to_string(j.leaf_a) + ":" + j.site_a),
                  g.index_of(std::to_string(j.leaf_b) + ":" + j.site_b));
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!d.joints.empty() && has_degenerate_parallel_pair(g)) return std::nullopt;
  return g;
}

}  // namespace alexcalc
