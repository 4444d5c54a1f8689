#include <gtest/gtest.h>

#include <random>

#include "alexcalc/algebra.hpp"
#include "alexcalc/error.hpp"
#include "oracles.hpp"

using namespace alexcalc;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

std::int64_t det_of(const IntMatrix& m) { return oracle::det(oracle::to_rows(m)); }

}  // namespace

TEST(SmithNormalForm, SmallDiagonal) {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.diagonal, (std::vector<std::int64_t>{1, 6}));
  EXPECT_EQ(s.rank, 2u);
}

TEST(SmithNormalForm, ZeroMatrix) {
  const SmithForm s = smith_normal_form(IntMatrix(3, 4));
  EXPECT_EQ(s.diagonal, (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(s.rank, 0u);
}

TEST(SmithNormalForm, Identity) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).diagonal, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(SmithNormalForm, EmptyMatrix) {
  EXPECT_TRUE(smith_normal_form(IntMatrix(0, 3)).diagonal.empty());
  EXPECT_TRUE(smith_normal_form(IntMatrix(2, 0)).diagonal.empty());
}

TEST(SmithNormalForm, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    const IntMatrix m = random_matrix(rng, rows, cols, 5);
    EXPECT_EQ(smith_normal_form(m).diagonal, oracle::determinantal_diagonal(oracle::to_rows(m), cols)) << "trial " << trial;
  }
}

TEST(SmithNormalForm, TransformsAreUnimodularAndDiagonalize) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    const IntMatrix m = random_matrix(rng, rows, cols, 5);
    const SmithForm s = smith_normal_form(m, true);
    ASSERT_TRUE(s.left && s.right);
    const IntMatrix d = *s.left * m * *s.right;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) EXPECT_EQ(d(r, c), r == c ? s.diagonal[r] : 0);
    EXPECT_EQ(std::llabs(det_of(*s.left)), 1);
    EXPECT_EQ(std::llabs(det_of(*s.right)), 1);
  }
}

TEST(SmithNormalForm, DivisibilityChain) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const SmithForm s = smith_normal_form(random_matrix(rng, 4, 4, 9));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      EXPECT_GE(s.diagonal[i], 0);
      if (s.diagonal[i + 1] != 0) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      if (s.diagonal[i] == 0) EXPECT_EQ(s.diagonal[i + 1], 0);
    }
  }
}

TEST(SmithNormalForm, OverflowIsReported) {
  // Coprime diagonal entries near 2^62: the invariant factor is their
  // product, which does not fit.
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  try {
    smith_normal_form(IntMatrix{{big, 0}, {0, big - 1}});
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Overflow);
  }
}

TEST(AbelianGroup, ParseAndPrint) {
  EXPECT_EQ(AbelianGroup::parse("0").to_string(), "0");
  EXPECT_EQ(AbelianGroup::parse("Z").rank, 1u);
  const AbelianGroup g = AbelianGroup::parse("Z^2 + Z/2");
  EXPECT_EQ(g.rank, 2u);
  EXPECT_EQ(g.torsion, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(AbelianGroup::parse("Z/4+Z/4"), AbelianGroup::parse("Z/4 + Z/4"));
  // Torsion renormalizes into a divisibility chain.
  EXPECT_EQ(AbelianGroup::parse("Z/2 + Z/3"), AbelianGroup::parse("Z/6"));
  EXPECT_EQ(AbelianGroup::parse(AbelianGroup::parse("Z^3 + Z/2 + Z/4").to_string()), AbelianGroup::parse("Z^3+Z/2+Z/4"));
}

TEST(AbelianGroup, RejectsGarbage) {
  EXPECT_THROW(AbelianGroup::parse("Q"), Error);
  EXPECT_THROW(AbelianGroup::parse("Z/0"), Error);
}

TEST(AbelianGroup, FromRelations) {
  IntMatrix rel(1, 2);
  rel(0, 0) = 2;
  rel(0, 1) = -2;
  EXPECT_EQ(AbelianGroup::from_relations(2, rel).to_string(), AbelianGroup::parse("Z + Z/2").to_string());
}

TEST(AbelianGroup, DirectSum) {
  EXPECT_EQ(direct_sum(AbelianGroup::parse("Z/2"), AbelianGroup::parse("Z/2")), AbelianGroup::parse("Z/2+Z/2"));
  EXPECT_EQ(direct_sum(AbelianGroup::parse("Z"), AbelianGroup::parse("0")), AbelianGroup::parse("Z"));
}

TEST(Presentation, WordsRoundTrip) {
  Presentation p{{"a", "b"}, {}};
  const Word w = p.parse_word("a.b'.a");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[1], (Letter{1, -1}));
  EXPECT_EQ(p.format_word(w), "a.b'.a");
  EXPECT_TRUE(p.parse_word("1").empty());
  EXPECT_EQ(inverse(w), p.parse_word("a'.b.a'"));
  EXPECT_THROW(p.parse_word("c"), Error);
}

TEST(Presentation, AbelianizeTorus) {
  Presentation t{{"a", "b"}, {}};
  t.relators.push_back(t.parse_word("a.b.a'.b'"));
  EXPECT_EQ(abelianize(t), AbelianGroup::parse("Z^2"));
}

TEST(Presentation, FreeProductOfCyclic) {
  Presentation c2{{"a"}, {}};
  c2.relators.push_back(c2.parse_word("a.a"));
  EXPECT_EQ(abelianize(free_product(c2, c2)), AbelianGroup::parse("Z/2+Z/2"));
}

TEST(Presentation, IndexTwoSubgroupOfKleinBottle) {
  // pi1(Kl) = <a, b | a b a^-1 b>, orientation character a -> 1, b -> 0; the
  // kernel is pi1(T2).
  Presentation k{{"a", "b"}, {}};
  k.relators.push_back(k.parse_word("a.b.a'.b"));
  EXPECT_EQ(abelianize(k), AbelianGroup::parse("Z+Z/2"));
  EXPECT_EQ(abelianize(index_two_subgroup(k, {1, 0})), AbelianGroup::parse("Z^2"));
}

TEST(Presentation, IndexTwoSubgroupOfCyclic) {
  // Z/2 has trivial kernel; Z has kernel 2Z.
  Presentation c2{{"a"}, {}};
  c2.relators.push_back(c2.parse_word("a.a"));
  EXPECT_TRUE(abelianize(index_two_subgroup(c2, {1})).is_trivial());
  Presentation z{{"t"}, {}};
  EXPECT_EQ(abelianize(index_two_subgroup(z, {1})), AbelianGroup::parse("Z"));
  EXPECT_THROW(index_two_subgroup(z, {0}), std::invalid_argument);
}
