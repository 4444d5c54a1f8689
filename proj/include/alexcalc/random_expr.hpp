#pragma once

#include <random>
#include <string>
#include <vector>

#include "alexcalc/expr.hpp"

namespace alexcalc {

struct RandomExprOptions {
  std::size_t max_atoms = 12;
  // Chance that two operands which both have free sites are joined by #^.
  double p2_bias = 0.6;
};

// Closed catalog atoms drawn by random_expr; Susp(P2) is listed twice.
const std::vector<std::string>& random_atom_pool();

ExprPtr random_expr(std::mt19937_64& rng, const Catalog& catalog, const RandomExprOptions& options = {});

// Same leaves and joints as e, rebuilt with shuffled summand order, a fresh
// random bracketing, and a random order of the #^ joints inside each cluster.
ExprPtr reassemble(const SpaceExpr& e, std::mt19937_64& rng);

}  // namespace alexcalc
