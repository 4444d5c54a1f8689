#pragma once

#include <optional>

#include "alexcalc/algebra.hpp"
#include "alexcalc/catalog.hpp"
#include "alexcalc/expr.hpp"

namespace alexcalc {

// H1 of the manifold part.  # contributes a direct sum; each #^ adds the
// relation identifying the images of the two consumed sites.  nullopt when
// an atom lacks H1 or a consumed site lacks its image.
std::optional<AbelianGroup> h1(const SpaceExpr& e);

// Van Kampen presentation of pi_1 of the manifold part: free product over #,
// amalgamation of the peripheral classes over #^.  The orientation
// character is carried along.  nullopt when some atom has no presentation.
std::optional<Pi1Data> fundamental_group(const SpaceExpr& e);

// Abelianization of fundamental_group; an independent route to h1.
std::optional<AbelianGroup> h1_via_pi1(const SpaceExpr& e);

// H1 of the orientation double cover of the manifold part, read off the
// index-two kernel of the orientation character.  For a space with singular
// points this is H1 of its double branched cover.  nullopt when the
// presentation is missing or the character is trivial.
std::optional<AbelianGroup> orientation_cover_h1(const SpaceExpr& e);

}  // namespace alexcalc
