#include <gtest/gtest.h>

#include "oracle_support.hpp"
#include "sl2green/borel.hpp"

using namespace sl2green;
using sl2green::testing::enumerate_theta;
using sl2green::testing::oracle_theta;

TEST(Theta, Examples) {
  const PrimeContext ctx(5);
  EXPECT_EQ(theta(ctx, 0, 5, 0), 3);
  EXPECT_EQ(theta(ctx, 2, 3, 2), oracle_theta(ctx, 2, 3, 2));
  EXPECT_EQ(theta(ctx, 2, 3, 2), 2);
  EXPECT_EQ(theta(ctx, 2, 3, 0), oracle_theta(ctx, 2, 3, 0));
  EXPECT_EQ(theta(ctx, 2, 3, 0), 1);
  // c is never reduced: S_4 is S_0.
  EXPECT_EQ(theta(ctx, 0, 5, 4), 0);
  EXPECT_EQ(theta(ctx, 0, 5, -4), 0);
}

TEST(Theta, MatchesEigenspaceOracle) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int a = 0; a <= p - 2; ++a)
      for (int b = 1; b <= p; ++b)
        for (int c = 0; c <= p - 2; ++c)
          ASSERT_EQ(theta(ctx, a, b, c), oracle_theta(ctx, a, b, c)) << p << " " << a << " " << b << " " << c;
  }
}

TEST(Theta, MatchesEnumeration) {
  for (int p : {3, 5, 7, 11, 13}) {
    const PrimeContext ctx(p);
    for (int a = 0; a <= p - 2; ++a)
      for (int b = 1; b <= p; ++b)
        for (int c = 0; c <= p - 2; ++c) ASSERT_EQ(theta(ctx, a, b, c), enumerate_theta(ctx, a, b, c));
  }
}

TEST(BCartan, SmallPrimes) {
  const PrimeContext p5(5);
  const auto& c = b_cartan(p5, 0);
  EXPECT_EQ(c.gamma, (IntMatrix{{3, 2}, {2, 3}}));
  EXPECT_EQ(c.delta, (RationalMatrix{{Rational(3, 5), Rational(-2, 5)}, {Rational(-2, 5), Rational(3, 5)}}));
  const PrimeContext p3(3);
  EXPECT_EQ(b_cartan(p3, 0).gamma, (IntMatrix{{3}}));
  EXPECT_EQ(b_cartan(p3, 0).delta, (RationalMatrix{{Rational(1, 3)}}));
}

TEST(BCartan, GammaFromOracleAndInverse) {
  for (int p : {5, 7}) {
    const PrimeContext ctx(p);
    for (int i : {0, 1}) {
      const auto& c = b_cartan(ctx, i);
      const int h = ctx.half();
      for (int r = 0; r < h; ++r)
        for (int col = 0; col < h; ++col)
          EXPECT_EQ(c.gamma[r][col], oracle_theta(ctx, i + 2 * col, p, i + 2 * r));
      EXPECT_EQ(multiply(to_rational(c.gamma), c.delta), identity_rational(h));
    }
  }
}

TEST(Omega2, ShiftsWeightByMinusTwo) {
  const PrimeContext ctx(5);
  EXPECT_EQ(omega2(ctx, ULabel{2, 3}), (ULabel{0, 3}));
  EXPECT_EQ(omega2(ctx, ULabel{0, 3}), (ULabel{2, 3}));
  ULabel u{0, 2};
  for (int k = 0; k < ctx.half(); ++k) u = omega2(ctx, u);
  EXPECT_EQ(u, (ULabel{0, 2}));
}

TEST(AlmostSplit, Examples) {
  const PrimeContext ctx(5);
  const auto s = almost_split(ctx, ULabel{0, 2});
  EXPECT_EQ(s.left, (ULabel{0, 2}));
  EXPECT_EQ(s.middle, (std::vector<ULabel>{{0, 3}, {2, 1}}));
  EXPECT_EQ(s.right, (ULabel{2, 2}));
  const auto t = almost_split(ctx, ULabel{0, 1});
  EXPECT_EQ(t.middle, (std::vector<ULabel>{{0, 2}}));
  EXPECT_EQ(t.right, (ULabel{2, 1}));
  const auto e = almost_split(ctx, ULabel{0, 4});
  EXPECT_NE(std::find(e.middle.begin(), e.middle.end(), ULabel{0, 5}), e.middle.end());
  EXPECT_NE(std::find(e.middle.begin(), e.middle.end(), ULabel{2, 3}), e.middle.end());
}

TEST(BBoundaries, Examples) {
  const PrimeContext p5(5);
  auto b = b_boundaries(p5, ULabel{0, 3});
  EXPECT_EQ(b.top_rim, (ULabel{0, 4}));
  EXPECT_EQ(b.top_distance, 1);
  EXPECT_EQ(b.simple_rim, (ULabel{0, 1}));
  EXPECT_EQ(b.simple_distance, 2);
  b = b_boundaries(p5, ULabel{2, 1});
  EXPECT_EQ(b.top_rim, (ULabel{2, 4}));
  EXPECT_EQ(b.top_distance, 3);
  EXPECT_EQ(b.simple_distance, 0);
  const PrimeContext p7(7);
  b = b_boundaries(p7, ULabel{4, 6});
  EXPECT_EQ(b.top_rim, (ULabel{4, 6}));
  EXPECT_EQ(b.top_distance, 0);
  EXPECT_EQ(b.simple_rim, (ULabel{2, 1}));
  EXPECT_EQ(b.simple_distance, 5);
}

TEST(BHookDistance, Examples) {
  const PrimeContext p5(5), p7(7);
  EXPECT_EQ(b_hook_distance(p5, 0, 2, BRim::Simple), 2);
  EXPECT_EQ(b_hook_distance(p5, 2, 0, BRim::Simple), 2);
  EXPECT_EQ(b_hook_distance(p7, 1, 5, BRim::Top), 4);
}

TEST(ProjectiveB, DecomposeFactorVector) {
  const PrimeContext ctx(5);
  BDecomposition d0, d2;
  d0.add(ULabel{0, 5});
  d2.add(ULabel{2, 5});
  EXPECT_EQ(decompose_projective_b(ctx, 0, {3, 2}), d0);
  EXPECT_EQ(decompose_projective_b(ctx, 0, {2, 3}), d2);
  EXPECT_THROW(decompose_projective_b(ctx, 0, {1, 0}), InconsistentData);
}

TEST(QuiverB, ArrowsAndOrbits) {
  for (int p : {3, 5, 7, 11}) {
    const PrimeContext ctx(p);
    std::size_t covered = 0;
    for (const auto& orbit : omega2_orbits(ctx)) {
      EXPECT_EQ(ctx.half() % static_cast<int>(orbit.size()), 0);
      covered += orbit.size();
    }
    EXPECT_EQ(covered, nonprojective_ulabels(ctx).size());
    for (const auto& [from, to] : b_quiver_arrows(ctx)) {
      EXPECT_LT(from.b, p);
      EXPECT_LT(to.b, p);
    }
  }
}
