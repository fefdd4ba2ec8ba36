#include <gtest/gtest.h>

#include "sl2green/oracle.hpp"

using namespace sl2green;
using namespace sl2green::oracle;

TEST(FpMatrix, InverseAndRank) {
  FpMatrix m(7, 2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 3;
  m.at(1, 0) = 1;
  m.at(1, 1) = 4;
  EXPECT_EQ(m * m.inverse(), FpMatrix::identity(7, 2));
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ((m - m).rank(), 0);
}

TEST(SL2, GroupOrder) {
  for (int p : {3, 5}) {
    const PrimeContext ctx(p);
    EXPECT_EQ(static_cast<int>(all_elements(ctx).size()), p * (p * p - 1));
  }
}

TEST(SimpleModules, ActionIsHomomorphism) {
  const PrimeContext ctx(5);
  for (int t = 1; t <= 5; ++t) EXPECT_NO_THROW(check_homomorphism(ctx, build_simple_g(ctx, t), 50, t));
  const auto v1 = build_simple_g(ctx, 1);
  EXPECT_EQ(v1.dim(), 1);
  EXPECT_EQ(v1.g, FpMatrix::identity(5, 1));
}

TEST(SimpleModules, UnipotentJordanBlock) {
  const PrimeContext ctx(5);
  const auto v3 = build_simple_g(ctx, 3);
  const auto n = v3.g - FpMatrix::identity(5, 3);
  EXPECT_EQ(n.rank(), 2);
  EXPECT_EQ((n * n).rank(), 1);
  EXPECT_EQ((n * n * n).rank(), 0);
}

TEST(SimpleModules, TorusEigenvalues) {
  const PrimeContext ctx(5);
  const auto v2 = build_simple_g(ctx, 2);
  const long long z = ctx.zeta(), zi = inv_mod(z, 5);
  for (long long e : {z, zi}) EXPECT_EQ((v2.lambda - FpMatrix::identity(5, 2).scaled(e)).rank(), 1);
}

TEST(BModules, BuildAndDecompose) {
  const PrimeContext ctx(5);
  const auto u1 = build_u(ctx, ULabel{0, 1});
  EXPECT_EQ(u1.dim(), 1);
  const auto u = build_u(ctx, ULabel{2, 3});
  EXPECT_NO_THROW(check_b_relations(ctx, u));
  BDecomposition just;
  just.add(ULabel{2, 3});
  EXPECT_EQ(decompose_b_module(ctx, u), just);
  // lambda eigenvalues zeta^2, zeta^4, zeta^6 = zeta^2.
  const long long z2 = 1LL * ctx.zeta() * ctx.zeta() % 5;
  EXPECT_EQ(3 - (u.lambda - FpMatrix::identity(5, 3).scaled(z2)).rank(), 2);
}

TEST(Restriction, SimplesAreUniserial) {
  for (int p : {3, 5, 7}) {
    const PrimeContext ctx(p);
    for (int t = 1; t <= p; ++t) {
      BDecomposition expect;
      expect.add(ULabel{ctx.reduce_weight(p - t), t});
      EXPECT_EQ(decompose_b_module(ctx, restrict(ctx, build_simple_g(ctx, t))), expect) << p << " " << t;
    }
  }
}

TEST(Induction, DimensionAndFactors) {
  const PrimeContext ctx(5);
  const auto x = induce(ctx, build_u(ctx, ULabel{0, 1}));
  EXPECT_EQ(x.dim(), 6);
  EXPECT_EQ(brauer_factors_g(ctx, x), (std::map<int, Multiplicity>{{1, 1}, {5, 1}}));
  EXPECT_EQ(restrict(ctx, x).dim(), 6);
  const auto y = induce(ctx, build_u(ctx, ULabel{2, 3}), Transversal::Alternative);
  EXPECT_EQ(restrict(ctx, y).dim(), 18);
}

TEST(BrauerFactors, Simples) {
  const PrimeContext ctx(7);
  for (int t = 1; t <= 7; ++t) {
    EXPECT_EQ(brauer_factors_g(ctx, build_simple_g(ctx, t)), (std::map<int, Multiplicity>{{t, 1}}));
  }
}

TEST(HomDim, SchurLemma) {
  const PrimeContext ctx(5);
  for (int s = 1; s <= 5; ++s)
    for (int t = 1; t <= 5; ++t)
      EXPECT_EQ(hom_dim(ctx, build_simple_g(ctx, s), build_simple_g(ctx, t)), s == t ? 1 : 0);
}
