#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "alexcalc/expr.hpp"

namespace alexcalc {

enum class SurgeryBase { S3, S2TwistS1 };

// p/q with q >= 0 and gcd(p, q) = 1; the trivial filling is 1/0.
struct Slope {
  std::int64_t p = 1;
  std::int64_t q = 0;
  bool operator==(const Slope&) const = default;
};

// Throws NonCoprimeSlope.
Slope normalize_slope(std::int64_t p, std::int64_t q);

// Placeholder marks a component whose existence is known but whose link
// data is not.
enum class FillingKind { SolidTorus, SolidKleinBottle, Placeholder };

struct Filling {
  FillingKind kind = FillingKind::SolidTorus;
  Slope slope;  // SolidTorus only
};

struct LinkComponent {
  std::string id;
  Filling filling;
};

struct SurgeryDescription {
  SurgeryBase base = SurgeryBase::S3;
  std::vector<LinkComponent> components;
  std::size_t bpt_sites = 0;
};

// Throws NonCoprimeSlope or IncompatibleFilling.
void validate(const SurgeryDescription& d);

// Line format:
//   base S3|S2~S1
//   component <id> torus <p>/<q> | kleinbottle | placeholder
//   bpt <count>
// Slopes are normalized on input.  Throws SyntaxError or NonCoprimeSlope.
SurgeryDescription parse_surgery(std::string_view text);
std::string format_surgery(const SurgeryDescription& d);

// Closed space obtained by the surgery; descriptions outside the known table
// become an opaque atom with 2 * bpt_sites singular points.
ExprPtr realize(const SurgeryDescription& d, const Catalog& catalog);

// Shape of a surgery presentation of e: an empty description for S3,
// otherwise one placeholder component with bpt_sites = singular_count(e) / 2.
// Throws OddSingularCount.
SurgeryDescription surgery_skeleton(const SpaceExpr& e, const Catalog& catalog);

// e as the boundary of a 4-dimensional space: a 4-manifold with one 2-handle
// per skeleton component, then one copy of Y = D2xD2/tau glued in for each
// B(pt) site.
struct FillingRecipe4D {
  std::size_t two_handles = 0;
  std::size_t y_pieces = 0;
  ExprPtr boundary_expr;
};

FillingRecipe4D filling_4d(ExprPtr e, const Catalog& catalog);

}  // namespace alexcalc
