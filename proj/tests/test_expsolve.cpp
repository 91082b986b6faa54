#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polycol/elimination.hpp"
#include "polycol/expsolve.hpp"

using namespace polycol;
using polycol::testing::mat;
using polycol::testing::vec;

namespace {

struct Orbit {
  Spectrum s;
  ContextPtr ctx;
  std::vector<ExpPoly> x;
  explicit Orbit(const EMatrix& a, const Vec& v = vec({1, 0, 0}))
      : s(spectrum(a)), ctx(spectral_context(s)), x(orbit(s, ctx, v)) {}
  ExpPoly k(const Rational& c) const { return ExpPoly::constant(ctx, Elem(c)); }
};

SolveReport solve(std::vector<Atom> atoms, unsigned long start = 0) {
  SolveOptions o;
  o.start = start;
  return decide_system(System{std::move(atoms)}, o);
}

// Least n >= start where every atom holds, by direct exact evaluation.
std::optional<unsigned long> brute(const System& s, unsigned long start, unsigned long upto) {
  for (unsigned long n = start; n <= upto; ++n)
    if (system_holds(s, n)) return n;
  return std::nullopt;
}

}  // namespace

TEST(ExpSolve, RealBases) {
  Orbit o(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
  ExpPoly two = o.x[0];
  auto r = solve({{two - o.k(10), ARel::Gt}});
  EXPECT_EQ(r.kind, VerdictKind::Sat);
  EXPECT_EQ(r.n, 4u);
  r = solve({{two - o.k(3), ARel::Eq}});
  EXPECT_EQ(r.kind, VerdictKind::UnsatCertified);
  r = solve({{two - o.k(1024), ARel::Eq}});
  EXPECT_EQ(r.kind, VerdictKind::Sat);
  EXPECT_EQ(r.n, 10u);
  // n 2^n > 2^n from n = 2.
  ExpPoly n2 = ExpPoly::term(o.ctx, two.terms().begin()->first.first, 1, Elem(1));
  r = solve({{n2 - two, ARel::Gt}});
  EXPECT_EQ(r.n, 2u);
  EXPECT_EQ(r.path, "real");
}

TEST(ExpSolve, NegativeBaseParity) {
  Orbit o(mat({{-2, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
  auto r = solve({{o.x[0] - o.k(100), ARel::Gt}});
  EXPECT_EQ(r.kind, VerdictKind::Sat);
  EXPECT_EQ(r.n, 8u);
  r = solve({{o.x[0] + o.k(512), ARel::Eq}});
  EXPECT_EQ(r.n, 9u);
}

TEST(ExpSolve, RootOfUnityRotation) {
  Orbit o(mat({{0, -1, 0}, {1, 0, 0}, {0, 0, 2}}));
  ASSERT_TRUE(rou_period(o.ctx).has_value());
  EXPECT_EQ(*rou_period(o.ctx), 4u);
  auto r = solve({{o.x[0] + o.k(1), ARel::Eq}}, 1);
  EXPECT_EQ(r.kind, VerdictKind::Sat);
  EXPECT_EQ(r.n, 2u);
  r = solve({{o.x[0] - o.k(2), ARel::Eq}}, 1);
  EXPECT_EQ(r.kind, VerdictKind::UnsatCertified);
}

TEST(ExpSolve, NonRootOfUnityRotation) {
  // Rotation by the 3-4-5 angle, scaled by 5.
  Orbit o(mat({{3, -4, 0}, {4, 3, 0}, {0, 0, 1}}));
  EXPECT_FALSE(rou_period(o.ctx).has_value());
  auto r = solve({{o.x[0], ARel::Gt}}, 1);
  EXPECT_EQ(r.kind, VerdictKind::Sat);
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.path, "circle-density");
  // x = 0 never holds; the bound needs the configured exponent.
  r = solve({{o.x[0], ARel::Eq}}, 1);
  EXPECT_EQ(r.kind, VerdictKind::UnsatConditional);
  EXPECT_FALSE(r.baker_atom.empty());
  // x >= 0, y >= 0, x + y < 0 is impossible with a margin.
  r = solve({{o.x[0], ARel::Ge}, {o.x[1], ARel::Ge}, {-o.x[0] - o.x[1], ARel::Gt}}, 1);
  EXPECT_EQ(r.kind, VerdictKind::UnsatCertified);
  EXPECT_EQ(r.path, "circle-margin");
}

TEST(ExpSolve, AgreesWithBruteForceOnSmallSystems) {
  Orbit o(mat({{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, Rational(1, 2)}}),
          vec({1, 0, 1}));
  // Near-axis windows: the first hit is found by the solver and by brute force.
  for (int w : {2, 5, 10}) {
    Rational eps(1, w * 4);
    System s{{{o.x[0] + o.k(eps), ARel::Ge}, {o.k(eps) - o.x[0], ARel::Ge}, {o.x[1] - o.k(Rational(19, 20)), ARel::Ge}}};
    SolveOptions opt;
    SolveReport r = decide_system(s, opt);
    auto b = brute(s, 0, 400);
    if (r.kind == VerdictKind::Sat) {
      ASSERT_TRUE(b.has_value());
      EXPECT_EQ(r.n, *b);
    } else {
      EXPECT_FALSE(b.has_value());
    }
  }
}

TEST(ExpSolve, DecayThreshold) {
  // 100 * (1/2)^n < 1 from n = 7 on.
  auto t = decay_threshold({{Interval(100, 128), 0, Interval(Rational(1, 2), 128)}});
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, 7u);
  // n^2 (1/2)^n < 1 from n = 5 on... but not at 4 (16/16 = 1).
  t = decay_threshold({{Interval(1, 128), 2, Interval(Rational(1, 2), 128)}});
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, 5u);
}

TEST(ExpSolve, EventualAndSettledSigns) {
  Orbit o(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}}), vec({1, 1, 0}));
  ExpPoly f = o.x[0] - o.x[1] + o.k(5);  // 2^n - 3^n + 5
  EventualSign es = eventual_sign(f);
  EXPECT_EQ(es.sign, -1);
  for (unsigned long n = es.from; n < es.from + 20; ++n) EXPECT_EQ(f.sign_at(n), -1);
  EXPECT_EQ(*settled_sign(f, es.from), -1);
  EXPECT_FALSE(settled_sign(f, 0).has_value());
  // Oscillating sign: (-2)^n is settled on no tail.
  Orbit neg(mat({{-2, 0, 0}, {0, 3, 0}, {0, 0, 1}}), vec({1, 1, 0}));
  EXPECT_FALSE(settled_sign(neg.x[0], 50).has_value());
  EXPECT_EQ(settled_sign(neg.x[0] + neg.k(1) + Elem(2) * neg.x[1], 5), std::optional<int>(1));
  EXPECT_FALSE(settled_sign(neg.x[0] + neg.k(1), 5).has_value());
}

TEST(ExpSolve, JoinPrefersLeastWitness) {
  SolveReport a, b;
  a.kind = VerdictKind::Sat;
  a.n = 7;
  b.kind = VerdictKind::Sat;
  b.n = 3;
  EXPECT_EQ(join(a, b).n, 3u);
  SolveReport u, c;
  u.kind = VerdictKind::Unknown;
  c.kind = VerdictKind::UnsatConditional;
  EXPECT_EQ(join(u, c).kind, VerdictKind::Unknown);
  SolveReport cert;
  EXPECT_EQ(join(cert, c).kind, VerdictKind::UnsatConditional);
}
