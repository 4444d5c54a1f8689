#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alexcalc/algebra.hpp"
#include "alexcalc/expr.hpp"

namespace alexcalc {

// Orientable double branched cover, assembled by
//   cover(X #^ Y) = cover(X) # cover(Y)
//   cover(X # Y)  = cover(X) # cover(Y) # S2xS1   (X, Y singular)
//   cover(X # N)  = cover(X) # N # N               (N orientable manifold)
//   cover(X # N)  = cover(X) # N' # S2xS1          (N non-orientable, N' its
//                                                  orientation cover)
// Throws ManifoldInput when e has no singular points; nullopt when a table
// entry is missing.
std::optional<ExprPtr> double_branched_cover(const SpaceExpr& e, const Catalog& catalog);

// H1 of double_branched_cover(e), summed from the cover atoms' declared H1.
std::optional<AbelianGroup> cover_h1(const SpaceExpr& e, const Catalog& catalog);

// Irreducibility of e, using that e is irreducible exactly when its cover
// is.  Unknown for manifolds and when neither side is decided; throws
// InconsistentFlags when both sides are decided and disagree.
std::optional<bool> irreducibility_transfer(const SpaceExpr& e, const Catalog& catalog);

// Combinatorial description of a two-sheeted covering assembled from pieces.
struct CoverPiece {
  std::string name;
  int sheets = 1;
  std::string base;  // base piece it covers
};

struct PieceCover {
  std::vector<CoverPiece> pieces;
  // Each side is "<piece>.<boundary>".
  std::vector<std::pair<std::string, std::string>> matches;
};

// Line format:
//   piece <name> sheets <n> [over <base>]
//   match <piece>.<boundary> <piece>.<boundary>
// '#' starts a comment line.  Without "over" the base is the name with a
// trailing ".<digits>" removed.  Throws SyntaxError.
PieceCover parse_piece_cover(std::string_view text);
std::string format_piece_cover(const PieceCover& pc);

struct CoverVerdict {
  bool ok = false;
  std::string reason;  // first failed check, empty when ok
};

CoverVerdict check_two_sheeted(const PieceCover& pc);
bool verify_two_sheeted(const PieceCover& pc);

}  // namespace alexcalc
