#include <gtest/gtest.h>

#include "sl2green/labels.hpp"

using namespace sl2green;

TEST(PrimeContext, RejectsNonOddPrimes) {
  for (int p : {-3, 0, 1, 2, 4, 9, 15, 21}) EXPECT_THROW(PrimeContext{p}, DomainError) << p;
  for (int p : {3, 5, 7, 11, 13, 101}) EXPECT_NO_THROW(PrimeContext{p});
}

TEST(PrimeContext, WeightReduction) {
  const PrimeContext ctx(7);
  EXPECT_EQ(ctx.reduce_weight(-1), 5);
  EXPECT_EQ(ctx.reduce_weight(6), 0);
  EXPECT_EQ(ctx.reduce_weight(13), 1);
  EXPECT_EQ(ctx.half(), 3);
}

TEST(ULabel, ValidationReducesWeight) {
  const PrimeContext ctx(5);
  EXPECT_EQ(validate_ulabel(ctx, 6, 3), (ULabel{2, 3}));
  EXPECT_EQ(validate_ulabel(ctx, -1, 1), (ULabel{3, 1}));
  EXPECT_THROW(validate_ulabel(ctx, 0, 0), DomainError);
  EXPECT_THROW(validate_ulabel(ctx, 0, 6), DomainError);
}

TEST(WalkLabel, CanonicalCountIsHalfTheSquare) {
  for (int p : {3, 5, 7, 11, 13}) {
    const PrimeContext ctx(p);
    for (int i : {0, 1}) {
      const auto walks = canonical_walks(ctx, i);
      EXPECT_EQ(static_cast<int>(walks.size()), (p - 1) * (p - 1) / 2) << p;
      EXPECT_EQ(count_nonprojective_per_block(ctx), (p - 1) * (p - 1) / 2);
      for (const auto& w : walks) EXPECT_TRUE(is_canonical(ctx, w));
    }
  }
}

TEST(WalkLabel, LengthOneForcesMinusSign) {
  const PrimeContext ctx(5);
  EXPECT_EQ(canonicalize_walk(ctx, 0, 0, 1, 1), (WalkLabel{0, 0, 1, -1}));
}

TEST(WalkLabel, TypeTwoWalkIsReversed) {
  const PrimeContext ctx(7);
  // l + s > h and l < p-1-l-s: reversed with the sign flipped for even s.
  const WalkLabel w{0, 0, 4, -1};
  ASSERT_TRUE(is_type_two(ctx, w));
  EXPECT_EQ(canonicalize_walk(ctx, w), (WalkLabel{0, 2, 4, 1}));
  EXPECT_EQ(reversed_sign(3, 1), 1);
  EXPECT_EQ(reversed_sign(4, 1), -1);
}

TEST(WalkLabel, RangeChecks) {
  const PrimeContext ctx(5);
  EXPECT_THROW(check_walk_ranges(ctx, 2, 0, 1, -1), DomainError);
  EXPECT_THROW(check_walk_ranges(ctx, 0, 0, 0, -1), DomainError);
  EXPECT_THROW(check_walk_ranges(ctx, 0, 0, 1, 0), DomainError);
  EXPECT_THROW(check_walk_ranges(ctx, 0, 3, 2, 1), DomainError);
}

TEST(Labels, SimpleBlocks) {
  const PrimeContext ctx(7);
  EXPECT_EQ(g_block_of_simple(ctx, 1), 0);
  EXPECT_EQ(g_block_of_simple(ctx, 2), 1);
  EXPECT_EQ(g_block_of_simple(ctx, 7), 2);
  EXPECT_EQ(projective_cover_dim(ctx, 1), 7);
  EXPECT_EQ(projective_cover_dim(ctx, 3), 14);
  EXPECT_EQ(projective_cover_dim(ctx, 7), 7);
}

TEST(Decomposition, ArithmeticAndFormatting) {
  const PrimeContext ctx(5);
  BDecomposition d;
  d.add(ULabel{0, 3});
  d.add(ULabel{2, 5}, 2);
  EXPECT_EQ(d.dim(), 13);
  EXPECT_EQ(d.nonprojective_part(ctx).mult.size(), 1u);
  EXPECT_EQ(to_string(d), "U(0,3) + U(2,5)^2");
  GDecomposition g;
  g.add_projective(1);
  g.add_walk(WalkLabel{0, 0, 4, -1});
  EXPECT_EQ(to_string(g), "M(0,0,4,-1) + P(1)");
}
