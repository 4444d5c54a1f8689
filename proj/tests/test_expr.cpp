#include <gtest/gtest.h>

#include <random>

#include "alexcalc/error.hpp"
#include "alexcalc/io.hpp"
#include "alexcalc/normalizer.hpp"
#include "alexcalc/random_expr.hpp"

using namespace alexcalc;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

ExprPtr P(const std::string& s) { return parse_expr(s, cat()); }

ExprPtr atom(const std::string& name) { return SpaceExpr::make_atom(cat().atom(name)); }

ErrorCode parse_error(const std::string& s, SourceSpan* span = nullptr) {
  try {
    P(s);
  } catch (const Error& e) {
    if (span && e.span()) *span = *e.span();
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << s;
  return ErrorCode::Overflow;
}

}  // namespace

TEST(Parser, SumOfAtoms) {
  const ExprPtr e = P("Susp(P2) # S3");
  ASSERT_EQ(e->kind(), SpaceExpr::Kind::SumS2);
  EXPECT_EQ(e->left()->atom()->name, "Susp(P2)");
  EXPECT_EQ(e->right()->atom()->name, "S3");
}

TEST(Parser, LeftAssociativity) {
  const ExprPtr e = P("S3 # T3 # HW");
  ASSERT_EQ(e->kind(), SpaceExpr::Kind::SumS2);
  EXPECT_EQ(e->left()->kind(), SpaceExpr::Kind::SumS2);
  EXPECT_EQ(e->right()->atom()->name, "HW");
}

TEST(Parser, P2SumBindsTighter) {
  const ExprPtr e = P("T3 # Susp(P2) #^{north,south} Susp(P2)");
  ASSERT_EQ(e->kind(), SpaceExpr::Kind::SumS2);
  EXPECT_EQ(e->right()->kind(), SpaceExpr::Kind::SumP2);
  EXPECT_EQ(e->right()->left_site().site, "north");
  EXPECT_EQ(e->right()->right_site().site, "south");
}

TEST(Parser, SuperscriptNotation) {
  const ExprPtr x1 = P("Q #^{q1,q1} Q");
  EXPECT_EQ(x1->kind(), SpaceExpr::Kind::SumP2);
  EXPECT_EQ(singular_count(*x1), 6u);
}

TEST(Parser, CatalogConstructors) {
  EXPECT_EQ(P("cap(octopod)")->atom()->name, "T3/beta");
  EXPECT_EQ(P("cap( octopod )")->atom()->name, "T3/beta");
  EXPECT_EQ(singular_count(*P("Xg(3)")), 14u);
  EXPECT_EQ(singular_count(*P("double(B(pt))")), 4u);
}

TEST(Parser, Occurrences) {
  // Two Susp(P2) leaves: north@2 is the north point of the second one.
  const ExprPtr e = P("(Susp(P2) # Susp(P2)) #^{north@2,south} Susp(P2)");
  EXPECT_EQ(e->left_site().leaf, 1u);
  EXPECT_EQ(format_expr(*e), "(Susp(P2) # Susp(P2)) #^{north@2,south} Susp(P2)");
}

TEST(Parser, Errors) {
  SourceSpan span;
  EXPECT_EQ(parse_error("S3 #", &span), ErrorCode::SyntaxError);
  EXPECT_EQ(span.begin, 4u);
  EXPECT_EQ(parse_error("(S3"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("S3 )"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(""), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("Susp(P2) #^{north} Susp(P2)"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("Susp(P2) #^{north,south@0} Susp(P2)"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("Nope # S3", &span), ErrorCode::UnknownAtom);
  EXPECT_EQ(span.begin, 0u);
  EXPECT_EQ(span.end, 4u);
  EXPECT_EQ(parse_error("Susp(P2) #^{east,north} Susp(P2)", &span), ErrorCode::SiteNotFound);
  EXPECT_EQ(span.begin, 12u);
  EXPECT_EQ(parse_error("Susp(P2) #^{north@2,north} Susp(P2)"), ErrorCode::SiteNotFound);
  EXPECT_EQ(parse_error("(Susp(P2) #^{north,north} Susp(P2)) #^{north,north} Susp(P2)"), ErrorCode::SiteAlreadyConsumed);
  EXPECT_EQ(parse_error("B(pt) # S3"), ErrorCode::NotClosed);
  EXPECT_EQ(parse_error("Xg(0)"), ErrorCode::InvalidGenus);
}

TEST(Parser, FormatRoundTripsRandomExpressions) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    const ExprPtr e = random_expr(rng, cat());
    const std::string text = format_expr(*e);
    const ExprPtr back = P(text);
    ASSERT_EQ(format_expr(*back), text);
    EXPECT_EQ(back->leaf_count(), e->leaf_count());
    EXPECT_EQ(back->available_sites(), e->available_sites());
  }
}

TEST(Parser, FormatIsCanonicalSpacing) {
  EXPECT_EQ(format_expr(*P("S3#T3")), "S3 # T3");
  EXPECT_EQ(format_expr(*P("S3 # (T3 # HW)")), "S3 # (T3 # HW)");
  EXPECT_EQ(format_expr(*P("Susp(P2)#^{ north , south }Susp(P2)")), "Susp(P2) #^{north,south} Susp(P2)");
}

TEST(Expr, ConnSumS2WithSphere) {
  const ExprPtr e = conn_sum_s2(atom("S3"), atom("Susp(P2)"));
  EXPECT_EQ(normal_form(*e, cat()), normal_form(*atom("Susp(P2)"), cat()));
}

TEST(Expr, SiteCountsAdd) {
  EXPECT_EQ(singular_count(*conn_sum_s2(atom("Susp(P2)"), atom("Susp(P2)"))), 4u);
  EXPECT_EQ(singular_count(*atom("S3")), 0u);
  EXPECT_EQ(singular_count(*atom("Susp(P2)")), 2u);
}

TEST(Expr, ConnSumP2ConsumesTwoSites) {
  const ExprPtr e = conn_sum_p2(atom("Susp(P2)"), {0, "north"}, atom("Susp(P2)"), {0, "north"});
  EXPECT_EQ(singular_count(*e), 2u);
  EXPECT_EQ(normal_form(*e, cat()).to_string(), "Susp(P2)");
}

TEST(Expr, ConnSumP2Errors) {
  try {
    conn_sum_p2(atom("Susp(P2)"), {0, "west"}, atom("Susp(P2)"), {0, "north"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SiteNotFound);
  }
  const ExprPtr used = conn_sum_p2(atom("Susp(P2)"), {0, "north"}, atom("Susp(P2)"), {0, "north"});
  try {
    conn_sum_p2(used, {0, "north"}, atom("Susp(P2)"), {0, "north"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SiteAlreadyConsumed);
  }
  try {
    conn_sum_p2(atom("T3"), {0, "north"}, atom("Susp(P2)"), {0, "north"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SiteNotFound);
  }
}

TEST(Expr, DecomposeClusters) {
  const Decomposition d = decompose(*P("T3 # Susp(P2) #^{north,south} Susp(P2) # Susp(P2)"));
  ASSERT_EQ(d.leaves.size(), 4u);
  ASSERT_EQ(d.joints.size(), 1u);
  const auto clusters = d.clusters();
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_EQ(clusters[1], (std::vector<std::size_t>{1, 2}));
}

TEST(Expr, ParityOverRandomExpressions) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 10000; ++i) {
    const ExprPtr e = random_expr(rng, cat());
    ASSERT_EQ(singular_count(*e) % 2, 0u) << format_expr(*e);
    ASSERT_EQ(singular_count(*e), e->available_sites().size());
  }
}

TEST(Predicates, Prime) {
  EXPECT_EQ(is_prime(*atom("Susp(P2)"), cat()), true);
  EXPECT_EQ(is_prime(*atom("S3"), cat()), true);
  EXPECT_EQ(is_prime(*P("Susp(P2) # Susp(P2)"), cat()), false);
  EXPECT_EQ(is_prime(*P("Xg(1)"), cat()), true);
  EXPECT_EQ(is_prime(*P("T3 # S3"), cat()), true);
  EXPECT_EQ(is_prime(*P("Susp(P2) #^{north,north} Susp(P2)"), cat()), true);
}

TEST(Predicates, Irreducible) {
  EXPECT_EQ(is_irreducible(*atom("S2xS1"), cat()), false);
  EXPECT_EQ(is_irreducible(*P("Xg(2)"), cat()), false);
  EXPECT_EQ(is_irreducible(*atom("Susp(P2)"), cat()), true);
  EXPECT_EQ(is_irreducible(*P("T3 # HW"), cat()), false);
}

TEST(Predicates, IrreducibleRejectsIncoherentAtom) {
  AtomSpec bad;
  bad.name = "incoherent";
  bad.flags.prime = false;
  bad.flags.irreducible = true;
  try {
    is_irreducible(*SpaceExpr::make_atom(std::make_shared<const AtomSpec>(bad)), cat());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentFlags);
  }
}

TEST(Predicates, Orientable) {
  EXPECT_EQ(is_orientable(*atom("T3")), true);
  EXPECT_EQ(is_orientable(*atom("S2~S1")), false);
  EXPECT_EQ(is_orientable(*P("T3 # S2~S1")), false);
  EXPECT_EQ(is_orientable(*atom("Susp(P2)")), false);
}
