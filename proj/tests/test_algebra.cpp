#include <gtest/gtest.h>

#include <random>

#include "polycol/algebraic.hpp"
#include "polycol/factor.hpp"
#include "polycol/interval.hpp"
#include "polycol/roots.hpp"

using namespace polycol;

namespace {

ZPoly random_zpoly(std::mt19937_64& rng, int deg, int height) {
  std::uniform_int_distribution<int> c(-height, height);
  std::vector<Integer> v;
  for (int i = 0; i <= deg; ++i) v.push_back(c(rng));
  if (v.back() == 0) v.back() = 1;
  return ZPoly(v);
}

ZPoly x_minus(long r) { return ZPoly{Integer(-r), Integer(1)}; }

AlgebraicNumber sqrt_of(long k) { return AlgebraicNumber::roots_of(ZPoly{Integer(-k), 0, 1})[1]; }

AlgebraicNumber imag_unit() {
  for (auto& r : AlgebraicNumber::roots_of(ZPoly{Integer(1), 0, 1}))
    if (r.im() > 0) return r;
  throw std::logic_error("no i");
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(Rational, IntegerHelpers) {
  EXPECT_EQ(ilog2(Integer(1024)), 10);
  EXPECT_EQ(isqrt_floor(Integer(17)), 4);
  EXPECT_EQ(isqrt_ceil(Integer(17)), 5);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_LE(sqrt_lower(Rational(2)) * sqrt_lower(Rational(2)), 2);
  EXPECT_GE(sqrt_upper(Rational(2)) * sqrt_upper(Rational(2)), 2);
}

TEST(Interval, EnclosuresAreSound) {
  Interval two(2, 128);
  Interval r = sqrt(two);
  EXPECT_TRUE(sqr(r).contains(Rational(2)));
  EXPECT_TRUE((exp(log(Interval(Rational(7, 3), 128)))).contains(Rational(7, 3)));
  Interval third = Interval(1, 128) / Interval(3, 128);
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_LT(third.width_d(), 1e-30);
  EXPECT_EQ(*Interval(-2, 64).sign(), -1);
  EXPECT_FALSE(Interval(Rational(-1), Rational(1), 64).sign().has_value());
}

TEST(Poly, SquarefreeDecompositionMultipliesBack) {
  ZPoly p = x_minus(1) * x_minus(1) * x_minus(2) * ZPoly{Integer(1), 0, 1};
  auto parts = squarefree_decomposition(p);
  ZPoly prod{Integer(1)};
  for (auto& [f, e] : parts)
    for (int i = 0; i < e; ++i) prod = prod * f;
  EXPECT_EQ(primitive_part(prod), primitive_part(p));
  EXPECT_EQ(real_root_count(p), 2);
}

TEST(Factor, RecoversKnownFactors) {
  ZPoly a{Integer(-2), 0, 1}, b{Integer(-1), -1, 0, 1}, c{Integer(3), 1};
  auto f = factor(a * b * c * c);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].first, c);
  EXPECT_EQ(f.factors[0].second, 2);
  EXPECT_TRUE(is_irreducible(ZPoly{Integer(1), 0, -10, 0, 1}));
  EXPECT_FALSE(is_irreducible(ZPoly{Integer(-1), 0, 0, 0, 1}));
}

TEST(Factor, ProductPropertyOnRandomPolynomials) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    ZPoly p = random_zpoly(rng, 1 + t % 6, 20) * random_zpoly(rng, 1 + t % 3, 5);
    auto f = factor(p);
    ZPoly prod{f.unit};
    for (auto& [g, e] : f.factors) {
      EXPECT_TRUE(is_irreducible(g));
      EXPECT_GT(g.lc(), 0);
      for (int i = 0; i < e; ++i) prod = prod * g;
    }
    EXPECT_EQ(prod, p) << to_string(p);
  }
}

TEST(Roots, IsolationDiscsHoldRoots) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    ZPoly p = squarefree_part(random_zpoly(rng, 2 + t % 6, 50));
    if (p.degree() < 1) continue;
    auto discs = isolate_roots(p, Rational(1, 1000));
    EXPECT_EQ(static_cast<int>(discs.size()), p.degree());
    for (auto& d : discs) {
      EXPECT_LE(d.rad, Rational(1, 1000));
      EXPECT_TRUE(eval(p, disc_box(d, 256)).contains_zero());
    }
    int reals = 0;
    for (auto& d : discs) reals += d.real;
    EXPECT_EQ(reals, real_root_count(p));
  }
}

TEST(Algebraic, ExactArithmetic) {
  auto s2 = sqrt_of(2), s3 = sqrt_of(3);
  EXPECT_EQ(s2 * s2, AlgebraicNumber(2));
  EXPECT_EQ((s2 + s3).degree(), 4);
  EXPECT_EQ((s2 + s3) * (s3 - s2), AlgebraicNumber(1));
  EXPECT_EQ(inverse(s2) * AlgebraicNumber(2), s2);
  auto i = imag_unit();
  EXPECT_EQ(conj(i), -i);
  EXPECT_EQ(i * i, AlgebraicNumber(-1));
  EXPECT_EQ(modulus(AlgebraicNumber(3) + AlgebraicNumber(4) * i), AlgebraicNumber(5));
  EXPECT_EQ(real_sign(s2 - s3), -1);
  EXPECT_THROW(real_sign(i), DomainError);
}

TEST(Algebraic, StandardFormValidation) {
  // (3 + 4i) / 5 is a root of 5x^2 - 6x + 5.
  auto g = AlgebraicNumber::from_standard(ZPoly{Integer(5), -6, 5}, Rational(3, 5), Rational(4, 5),
                                          Rational(1, 1000));
  EXPECT_TRUE(on_unit_circle(g));
  EXPECT_FALSE(is_root_of_unity(g).has_value());
  // Reducible polynomial.
  EXPECT_THROW(AlgebraicNumber::from_standard(ZPoly{Integer(-1), 0, 1}, Rational(1), 0, Rational(1, 100)),
               DomainError);
  // Disc without a root.
  EXPECT_THROW(AlgebraicNumber::from_standard(ZPoly{Integer(-2), 0, 1}, Rational(3), 0, Rational(1, 100)),
               DomainError);
}

TEST(Algebraic, RootsOfUnityOrders) {
  for (unsigned k = 1; k <= 12; ++k) {
    std::vector<Integer> c(k + 1, 0);
    c[0] = -1;
    c[k] = 1;
    std::map<unsigned, int> orders;
    for (auto& r : AlgebraicNumber::roots_of(ZPoly(c))) {
      auto d = is_root_of_unity(r);
      ASSERT_TRUE(d.has_value());
      EXPECT_EQ(k % *d, 0u);
      EXPECT_LE(*d, static_cast<unsigned>(2 * r.degree() * r.degree()));
      orders[*d]++;
    }
    // Exactly phi(k) primitive roots.
    int phi = 0;
    for (unsigned j = 1; j <= k; ++j) phi += std::gcd(j, k) == 1;
    EXPECT_EQ(orders[k], phi) << k;
  }
}

TEST(Algebraic, SeparationBoundHolds) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    ZPoly p = squarefree_part(random_zpoly(rng, 2 + t % 5, 30));
    if (p.degree() < 2) continue;
    Rational sep = separation_bound(p);
    auto discs = isolate_roots(p, sep / 8);
    for (std::size_t i = 0; i < discs.size(); ++i)
      for (std::size_t j = i + 1; j < discs.size(); ++j) {
        Rational dx = discs[i].re - discs[j].re, dy = discs[i].im - discs[j].im;
        Rational gap = sep + discs[i].rad + discs[j].rad;
        EXPECT_GT(dx * dx + dy * dy, gap * gap);
      }
  }
}
