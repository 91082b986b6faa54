#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "polycol/circle.hpp"

using namespace polycol;
using polycol::testing::gaussian;

namespace {

Rational rq(std::mt19937_64& rng, int bound, int den) {
  std::uniform_int_distribution<int> d(-bound * den, bound * den);
  return Rational(d(rng), den);
}

DominantFn random_fn(std::mt19937_64& rng) {
  return {gaussian(rq(rng, 2, 3), rq(rng, 2, 3)), gaussian(rq(rng, 2, 3), rq(rng, 2, 3)),
          AlgebraicNumber(rq(rng, 3, 2))};
}

}  // namespace

TEST(Circle, KnownRoots) {
  // f(z) = z + conj z = 2x vanishes at z = +-i.
  CircleFn f({AlgebraicNumber(0), AlgebraicNumber(1), AlgebraicNumber(0)});
  ASSERT_EQ(f.roots().size(), 2u);
  for (auto& r : f.roots()) {
    EXPECT_EQ(r.x, AlgebraicNumber(0));
    EXPECT_EQ(f.derivative_sign(r, 0), 0);
    EXPECT_NE(f.derivative_sign(r, 1), 0);
  }
  // 2x - 2 touches zero only at z = 1, a double root.
  CircleFn g({AlgebraicNumber(0), AlgebraicNumber(1), AlgebraicNumber(-2)});
  ASSERT_EQ(g.roots().size(), 1u);
  EXPECT_EQ(g.taylor_data(g.roots()[0]).order, 2);
  // Constant functions have no roots and one arc.
  CircleFn c({AlgebraicNumber(0), AlgebraicNumber(0), AlgebraicNumber(3)});
  EXPECT_TRUE(c.roots().empty());
  EXPECT_TRUE(c.constant());
  ASSERT_EQ(c.sign_arcs().size(), 1u);
  EXPECT_EQ(c.sign_arcs()[0].sign, 1);
  // z^2 + conj z^2 = 2 cos 2x: four roots, including none at z = -1.
  CircleFn q({AlgebraicNumber(1), AlgebraicNumber(0), AlgebraicNumber(0)});
  EXPECT_EQ(q.roots().size(), 4u);
}

TEST(Circle, RootAtMinusOne) {
  // 2x + 2 vanishes at z = -1 (the chart point at infinity).
  CircleFn f({AlgebraicNumber(0), AlgebraicNumber(1), AlgebraicNumber(2)});
  ASSERT_EQ(f.roots().size(), 1u);
  EXPECT_TRUE(f.roots()[0].at_infinity);
  EXPECT_EQ(f.sign_at_minus_one(), 0);
}

// Random dominant functions: at most four roots, exact vanishing, a nonzero
// derivative among the first three, and arcs alternate consistently.
TEST(Circle, RandomFunctionProperties) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    CircleFn f(random_fn(rng));
    const auto& rs = f.roots();
    EXPECT_LE(rs.size(), 4u);
    for (auto& r : rs) {
      EXPECT_EQ(f.derivative_sign(r, 0), 0);
      TaylorData td = f.taylor_data(r);
      EXPECT_GE(td.order, 1);
      EXPECT_FALSE(td.deriv.contains_zero());
      EXPECT_GT(td.eps1, 0);
    }
    auto arcs = f.sign_arcs();
    for (auto& a : arcs) {
      if (!a.sample_at_infinity) EXPECT_EQ(a.sign, f.sign_at(a.sample_t));
    }
    // Interval evaluation encloses the exact sign at the samples.
    auto enc = f.enclosure(128);
    for (auto& a : arcs) {
      if (a.sample_at_infinity || a.sign == 0) continue;
      Interval v = enc.eval(Interval(a.sample_t, 128), false);
      if (!v.contains_zero()) EXPECT_EQ(*v.sign(), a.sign);
    }
  }
}

TEST(Circle, RealComparisons) {
  auto s2 = AlgebraicNumber::roots_of(ZPoly{Integer(-2), 0, 1})[1];
  auto s3 = AlgebraicNumber::roots_of(ZPoly{Integer(-3), 0, 1})[1];
  EXPECT_TRUE(real_less(s2, s3));
  EXPECT_FALSE(real_less(s3, s2));
  Rational m = rational_between(s2, s3);
  EXPECT_GT(m * m, 2);
  EXPECT_LT(m * m, 3);
}
