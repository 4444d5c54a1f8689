#include "alexcalc/random_expr.hpp"

#include <algorithm>
#include <map>

namespace alexcalc {

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Joins random pairs until one expression remains.
template <typename Join>
ExprPtr fold_randomly(std::vector<ExprPtr> pool, std::mt19937_64& rng, Join join) {
  while (pool.size() > 1) {
    const std::size_t i = below(rng, pool.size());
    std::size_t j = below(rng, pool.size() - 1);
    if (j >= i) ++j;
    ExprPtr joined = join(pool[i], pool[j]);
    pool[std::min(i, j)] = std::move(joined);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
  }
  return pool.front();
}

}  // namespace

const std::vector<std::string>& random_atom_pool() {
  static const std::vector<std::string> pool = {
      "S3",       "S2xS1",        "S2~S1",           "T3", "HW", "MT(-I)", "FgxS1(1)", "Susp(P2)",
      "Susp(P2)", "T3/beta",      "capped-bipod",    "capped-tetrapod",   "Qa", "Qb", "Xg(1)", "Xg(2)",
  };
  return pool;
}

ExprPtr random_expr(std::mt19937_64& rng, const Catalog& catalog, const RandomExprOptions& options) {
  const auto& names = random_atom_pool();
  const std::size_t n = 1 + below(rng, std::max<std::size_t>(options.max_atoms, 1));
  std::vector<ExprPtr> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(SpaceExpr::make_atom(catalog.atom(names[below(rng, names.size())])));
  std::bernoulli_distribution coin(options.p2_bias);
  return fold_randomly(std::move(pool), rng, [&](const ExprPtr& a, const ExprPtr& b) {
    const auto& sa = a->available_sites();
    const auto& sb = b->available_sites();
    if (!sa.empty() && !sb.empty() && coin(rng)) return conn_sum_p2(a, sa[below(rng, sa.size())], b, sb[below(rng, sb.size())]);
    return conn_sum_s2(a, b);
  });
}

ExprPtr reassemble(const SpaceExpr& e, std::mt19937_64& rng) {
  const Decomposition d = decompose(e);
  struct Part {
    ExprPtr expr;
    std::vector<std::size_t> order;  // global leaf ids, left to right
  };
  std::vector<Part> parts;
  std::vector<std::size_t> part_of(d.leaves.size());
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    part_of[i] = parts.size();
    parts.push_back({SpaceExpr::make_atom(d.leaves[i]), {i}});
  }
  std::vector<Joint> joints = d.joints;
  std::shuffle(joints.begin(), joints.end(), rng);
  for (Joint j : joints) {
    if (below(rng, 2)) {
      std::swap(j.leaf_a, j.leaf_b);
      std::swap(j.site_a, j.site_b);
    }
    Part& left = parts[part_of[j.leaf_a]];
    Part& right = parts[part_of[j.leaf_b]];
    auto position = [](const Part& p, std::size_t leaf) {
      return static_cast<std::size_t>(std::find(p.order.begin(), p.order.end(), leaf) - p.order.begin());
    };
    left.expr = conn_sum_p2(left.expr, {position(left, j.leaf_a), j.site_a}, right.expr, {position(right, j.leaf_b), j.site_b});
    left.order.insert(left.order.end(), right.order.begin(), right.order.end());
    const std::size_t gone = part_of[j.leaf_b];
    for (std::size_t leaf : right.order) part_of[leaf] = part_of[j.leaf_a];
    parts[gone].expr.reset();
    parts[gone].order.clear();
  }
  std::vector<ExprPtr> summands;
  for (const auto& p : parts)
    if (p.expr) summands.push_back(p.expr);
  std::shuffle(summands.begin(), summands.end(), rng);
  return fold_randomly(std::move(summands), rng, [&](const ExprPtr& a, const ExprPtr& b) { return conn_sum_s2(a, b); });
}

}  // namespace alexcalc
