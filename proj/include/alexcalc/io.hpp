#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "alexcalc/expr.hpp"

namespace alexcalc {

// Grammar, loosest binding first:
//   expr := term { "#" term }
//   term := primary { "#^{" site "," site "}" primary }
//   primary := NAME | "(" expr ")"
//   site := IDENT [ "@" INT ]
// Both operators associate to the left.  A NAME may carry one attached
// balanced parenthesised suffix: Susp(P2), glue(D3, B(S2)), Xg(3).  A site
// resolves to the k-th (default first) unconsumed occurrence of IDENT in its
// operand, counting leaves left to right.  Aliases are expanded in place.
ExprPtr parse_expr(std::string_view text, const Catalog& catalog);

// Canonical spacing; "@k" only where a bare IDENT would resolve elsewhere.
std::string format_expr(const SpaceExpr& e);

// Command-line surface; returns the process exit status (0 success, 1 domain
// error, 2 usage error).  args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alexcalc
