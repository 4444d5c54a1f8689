#include <gtest/gtest.h>

#include <set>

#include "alexcalc/catalog.hpp"
#include "alexcalc/error.hpp"
#include "alexcalc/io.hpp"
#include "alexcalc/normalizer.hpp"
#include "oracles.hpp"

using namespace alexcalc;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Overflow;
}

std::string resolved_nf(const Resolved& r) {
  return normal_form(*sum_of(std::get<ClosedSpace>(r)), cat()).to_string();
}

}  // namespace

TEST(Catalog, LookupBlocks) {
  const BlockPtr s4 = cat().block("B(S4)");
  ASSERT_EQ(s4->boundary.size(), 1u);
  EXPECT_EQ(s4->boundary[0].kind, BoundaryKind::Torus);
  EXPECT_EQ(s4->singular_sites.size(), 4u);
  EXPECT_EQ(s4->double_cover.value_or(""), "T2xI");

  const BlockPtr oct = cat().block("octopod");
  EXPECT_EQ(oct->count(BoundaryKind::ProjectivePlane), 8u);
  EXPECT_EQ(oct->boundary.size(), 8u);
}

TEST(Catalog, LookupS3) {
  const AtomPtr s3 = cat().atom("S3");
  EXPECT_TRUE(s3->sites.empty());
  EXPECT_TRUE(s3->flags.manifold);
  ASSERT_TRUE(s3->h1);
  EXPECT_TRUE(s3->h1->is_trivial());
}

TEST(Catalog, UnknownNames) {
  EXPECT_EQ(code_of([] { cat().block("nothing"); }), ErrorCode::UnknownName);
  EXPECT_EQ(code_of([] { cat().atom("nothing"); }), ErrorCode::UnknownAtom);
  EXPECT_EQ(code_of([] { cat().resolve("cap(nothing)"); }), ErrorCode::UnknownName);
}

TEST(Catalog, CompactNameIgnoresSpaces) { EXPECT_EQ(compact_name("glue( D3 , B(S2) )"), "glue(D3,B(S2))"); }

TEST(Catalog, CapOff) {
  const Resolved geminus = cat().resolve("cap(geminus)");
  ASSERT_TRUE(std::holds_alternative<BlockPtr>(geminus));
  EXPECT_EQ(std::get<BlockPtr>(geminus)->name, "B(pt)");

  const Resolved quadripus = cat().resolve("cap(quadripus)");
  ASSERT_TRUE(std::holds_alternative<BlockPtr>(quadripus));
  EXPECT_EQ(std::get<BlockPtr>(quadripus)->name, "B(S4)");

  EXPECT_EQ(resolved_nf(cat().resolve("cap(octopod)")), "T3/beta");

  const Resolved bipod = cat().resolve("cap(bipod)");
  ASSERT_TRUE(std::holds_alternative<ClosedSpace>(bipod));
  const auto& s = std::get<ClosedSpace>(bipod).summands;
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0]->name, "capped-bipod");
  EXPECT_EQ(s[0]->flags.simply_connected, false);
  EXPECT_EQ(cat().atom("capped-tetrapod")->flags.simply_connected, false);
}

TEST(Catalog, CapNeedsProjectivePlanes) {
  EXPECT_EQ(code_of([] { cat().resolve("cap(D3)"); }), ErrorCode::NoProjectivePlaneBoundary);
}

TEST(Catalog, DoubleAlong) {
  EXPECT_EQ(resolved_nf(cat().resolve("double(B(pt))")), "Susp(P2) # Susp(P2)");
  EXPECT_EQ(resolved_nf(cat().resolve("double(B(S2))")), "Susp(P2) # Susp(P2)");
  EXPECT_EQ(resolved_nf(cat().resolve("double(B(S4))")), "T3/beta");
  EXPECT_EQ(resolved_nf(cat().resolve("double(D3)")), "S3");
  EXPECT_EQ(resolved_nf(cat().resolve("double(K(P2))")), "Susp(P2)");
}

TEST(Catalog, Glue) {
  EXPECT_EQ(resolved_nf(cat().resolve("glue(D3,D3)")), "S3");
  EXPECT_EQ(resolved_nf(cat().resolve("glue(K(P2),K(P2))")), "Susp(P2)");
  EXPECT_EQ(resolved_nf(cat().resolve("glue(D3,B(S2))")), "Susp(P2)");
  EXPECT_EQ(resolved_nf(cat().resolve("glue(B(S2),D3)")), "Susp(P2)");
  const Resolved q = cat().resolve("glue(quadripus,quadripus)");
  ASSERT_TRUE(std::holds_alternative<BlockPtr>(q));
  EXPECT_EQ(std::get<BlockPtr>(q)->name, "octopod");
}

TEST(Catalog, GlueMismatchedBoundaries) {
  EXPECT_EQ(code_of([] { cat().resolve("glue(D3,K(P2))"); }), ErrorCode::BoundaryMismatch);
}

TEST(Catalog, EnumerateGluingsSixEntriesFourClasses) {
  const auto list = cat().enumerate_gluings();
  ASSERT_EQ(list.size(), 6u);
  std::set<std::string> classes;
  for (const auto& g : list) classes.insert(resolved_nf(g.result));
  EXPECT_EQ(classes, (std::set<std::string>{"S3", "Susp(P2)", "Susp(P2) # Susp(P2)", "T3/beta"}));
  // Deterministic ordering.
  const auto again = cat().enumerate_gluings();
  for (std::size_t i = 0; i < list.size(); ++i) {
    EXPECT_EQ(list[i].left, again[i].left);
    EXPECT_EQ(list[i].right, again[i].right);
  }
}

TEST(Catalog, XgSingularCountMatchesPolygonOracle) {
  for (long g = 1; g <= 10; ++g) {
    const AtomPtr x = cat().xg_atom(g);
    EXPECT_EQ(x->sites.size(), oracle::xg_singular_points(static_cast<std::size_t>(g))) << g;
    EXPECT_EQ(x->sites.size(), static_cast<std::size_t>(4 * g + 2));
    EXPECT_EQ(x->flags.prime, true);
    EXPECT_EQ(x->flags.irreducible, false);
    EXPECT_EQ(x->flags.has_nonseparating_p2, true);
  }
}

TEST(Catalog, XgGenusBounds) {
  EXPECT_EQ(code_of([] { cat().xg_atom(0); }), ErrorCode::InvalidGenus);
  EXPECT_EQ(code_of([] { cat().xg_atom(-3); }), ErrorCode::InvalidGenus);
  EXPECT_EQ(code_of([] { cat().resolve("Xg(abc)"); }), ErrorCode::InvalidGenus);
  EXPECT_EQ(cat().resolve("Xg(2)").index(), 0u);
}

TEST(Catalog, QAliasExpands) {
  ASSERT_TRUE(cat().alias("Q"));
  EXPECT_EQ(singular_count(*parse_expr("Q", cat())), 4u);
}

TEST(CatalogMerge, AcceptsNewAtom) {
  Catalog c = cat();
  c.merge_text("atom Mine sites=a,b h1=Z/2 image.a=1 image.b=1 cover=S3 flags=prime,!orientable\n");
  EXPECT_EQ(c.atom("Mine")->sites.size(), 2u);
  EXPECT_EQ(singular_count(*parse_expr("Mine # Mine", c)), 4u);
}

TEST(CatalogMerge, RejectsOddParity) {
  Catalog c = cat();
  EXPECT_EQ(code_of([&] { c.merge_text("atom Odd sites=a,b,c flags=!orientable\n"); }), ErrorCode::CatalogError);
  // The failed merge left the catalog untouched.
  EXPECT_FALSE(c.has_atom("Odd"));
}

TEST(CatalogMerge, RejectsIncoherentFlags) {
  Catalog c = cat();
  // Irreducible but not prime.
  EXPECT_THROW(c.merge_text("atom Bad1 flags=!prime,irreducible,orientable\n"), Error);
  // Singular but orientable.
  EXPECT_THROW(c.merge_text("atom Bad2 sites=a,b flags=orientable\n"), Error);
  // Prime, not irreducible, without a non-separating P2 and not S2-bundle-like.
  EXPECT_THROW(c.merge_text("atom Bad3 sites=a,b flags=prime,!irreducible,!has_nonseparating_p2,!orientable\n"), Error);
}

TEST(CatalogMerge, RejectsBadReferencesAndDuplicates) {
  Catalog c = cat();
  EXPECT_THROW(c.merge_text("atom Bad sites=a,b cover=Nowhere flags=!orientable\n"), Error);
  EXPECT_THROW(c.merge_text("atom S3 flags=orientable\n"), Error);
  EXPECT_THROW(c.merge_text("atom Bad sites=a,a flags=!orientable\n"), Error);
  EXPECT_THROW(c.merge_text("atom Bad sites=a,b unknownkey=1\n"), Error);
  EXPECT_THROW(c.merge_text("widget Bad\n"), Error);
  EXPECT_THROW(c.merge_text("atom Bad note=\"unterminated\n"), Error);
}

TEST(CatalogMerge, RejectsInconsistentH1) {
  Catalog c = cat();
  // Declared H1 disagrees with the abelianized presentation.
  EXPECT_THROW(c.merge_text("atom Bad h1=Z/3 gens=a rels=a.a flags=orientable\n"), Error);
  // A site image of order other than two.
  EXPECT_THROW(c.merge_text("atom Bad sites=a,b h1=Z image.a=1 image.b=1 flags=!orientable\n"), Error);
}

TEST(CatalogMerge, RejectsGraphWithWrongWhites) {
  Catalog c = cat();
  EXPECT_THROW(c.merge_text("atom Bad sites=a,b blacks=x edges=x-a flags=!orientable\n"), Error);
}

TEST(CatalogMerge, BuiltinTextIsValid) {
  Catalog c;
  EXPECT_NO_THROW(c.merge_text(builtin_catalog_text()));
  EXPECT_EQ(c.atom_names(), cat().atom_names());
}

TEST(CatalogMerge, EveryBuiltinAtomSatisfiesParity) {
  for (const auto& name : cat().atom_names()) EXPECT_EQ(cat().atom(name)->sites.size() % 2, 0u) << name;
}
