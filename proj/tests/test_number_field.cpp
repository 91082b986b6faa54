#include <gtest/gtest.h>

#include <random>

#include "polycol/number_field.hpp"

using namespace polycol;

namespace {

std::vector<AlgebraicNumber> roots(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.push_back(x);
  return AlgebraicNumber::roots_of(ZPoly(v));
}

}  // namespace

TEST(NumberField, CommonFieldOfMixedGenerators) {
  auto s2 = roots({-2, 0, 1})[1], s3 = roots({-3, 0, 1})[1];
  auto i = roots({1, 0, 1});
  auto fb = build_field({s2, s3, i[0], i[1], AlgebraicNumber(Rational(1, 2))});
  EXPECT_EQ(fb.field->degree(), 8);
  EXPECT_TRUE(fb.field->has_conjugation());
  // Each image denotes the input number.
  EXPECT_EQ(fb.images[0].to_algebraic(), s2);
  EXPECT_EQ(fb.images[1].to_algebraic(), s3);
  EXPECT_EQ(fb.images[2].to_algebraic(), i[0]);
  EXPECT_TRUE(fb.images[4].is_rational());
  EXPECT_EQ(fb.images[0] * fb.images[0], Elem(fb.field, Rational(2)));
  EXPECT_EQ((fb.images[0] - fb.images[1]).sign(), -1);
  EXPECT_EQ(fb.images[2].conj(), fb.images[3]);
  EXPECT_EQ(fb.images[0].conj(), fb.images[0]);
  EXPECT_TRUE(fb.images[0].is_real());
  EXPECT_FALSE(fb.images[2].is_real());
}

TEST(NumberField, FieldAxiomsOnRandomElements) {
  auto fb = build_field(roots({-1, -1, 0, 1}));
  const auto& k = fb.field;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(-9, 9);
  auto rnd = [&] {
    std::vector<Rational> v;
    for (int j = 0; j < k->degree(); ++j) v.push_back(Rational(c(rng), 1 + (c(rng) + 9) % 4));
    return Elem(k, v);
  };
  for (int t = 0; t < 20; ++t) {
    Elem a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ((a * b) * d, a * (b * d));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Elem(k, Rational(1)));
      EXPECT_EQ((b / a) * a, b);
    }
    EXPECT_EQ(a.pow(3), a * a * a);
    CInterval e = (a * b).enclosure(128), ea = a.enclosure(128), eb = b.enclosure(128);
    EXPECT_TRUE(overlaps(e, ea * eb));
  }
}

TEST(NumberField, SplittingFieldOfCubic) {
  auto r = roots({-1, -1, 0, 1});
  auto fb = build_field(r);
  EXPECT_EQ(fb.field->degree(), 6);
  EXPECT_EQ(fb.images[0] + fb.images[1] + fb.images[2], Elem(fb.field, Rational(0)));
  EXPECT_EQ(fb.images[0] * fb.images[1] * fb.images[2], Elem(fb.field, Rational(1)));
}

TEST(NumberField, NormAndRootsOfKPoly) {
  auto fb = build_field({roots({-2, 0, 1})[1]});
  const auto& k = fb.field;
  Elem s2 = fb.images[0];
  // (x - sqrt2)(x - 3) over Q(sqrt2)
  KPoly p({s2 * Elem(k, Rational(3)), -(s2 + Elem(k, Rational(3))), Elem(k, Rational(1))});
  ZPoly n = norm_poly(p);
  EXPECT_EQ(n.degree(), 4);
  auto rs = kpoly_roots(p);
  ASSERT_EQ(rs.size(), 2u);
  bool has3 = false, hass2 = false;
  for (auto& r : rs) {
    has3 |= r == AlgebraicNumber(3);
    hass2 |= r == s2.to_algebraic();
  }
  EXPECT_TRUE(has3 && hass2);
}

TEST(NumberField, EmbedIntoLargerField) {
  auto s2 = roots({-2, 0, 1})[1], s3 = roots({-3, 0, 1})[1];
  auto small = build_field({s2});
  auto big = build_field({small.field->generator(), s3});
  Elem x = small.images[0] * Elem(small.field, Rational(5)) + Elem(small.field, Rational(1, 3));
  Elem y = embed(x, big.field, big.images[0]);
  EXPECT_EQ(y.to_algebraic(), x.to_algebraic());
}
