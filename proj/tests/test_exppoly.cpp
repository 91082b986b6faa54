#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polycol/elimination.hpp"
#include "polycol/exppoly.hpp"

using namespace polycol;
using polycol::testing::mat;

namespace {

// Entry (i, j) of A^n as an exponential polynomial.
ExpPoly entry(const Spectrum& s, const ContextPtr& ctx, int i, int j) {
  ExpPoly f(ctx);
  for (auto& t : s.entries[i][j]) {
    std::vector<int> e(s.eig.size(), 0);
    e[t.eig] = 1;
    f = f + ExpPoly::term(ctx, ctx->index(e), t.npow, t.coeff);
  }
  return f;
}

class ExpPolyMatrices : public ::testing::TestWithParam<EMatrix> {};

}  // namespace

// Values, signs, incremental evaluation and substitution all agree with
// exact matrix powers.
TEST_P(ExpPolyMatrices, AgreesWithMatrixPowers) {
  Spectrum s = spectrum(GetParam());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.eig.size(); ++i) names.push_back("l" + std::to_string(i));
  auto ctx = ExpContext::create(s.field, s.eig, names);
  auto cube = ctx->powered(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ExpPoly f = entry(s, ctx, i, j);
      ExpPoly g = f * f - f;
      ExpPoly h = g.substitute(2, 3, cube);
      SeqEvaluator ev(ctx, 0);
      for (unsigned n = 0; n <= 12; ++n, ev.advance()) {
        Elem x = power(s.a, n)(i, j);
        Elem y = x * x - x;
        EXPECT_EQ(f.eval(n), x);
        EXPECT_EQ(g.eval(n), y);
        EXPECT_EQ(g.sign_at(n), y.sign());
        EXPECT_EQ(ev.sign(g), y.sign());
        EXPECT_TRUE(overlaps(g.enclosure(n, 128), y.enclosure(128)));
        if (n % 3 == 2) EXPECT_EQ(h.eval(n / 3), y);
      }
    }
}

INSTANTIATE_TEST_SUITE_P(
    Spectra, ExpPolyMatrices,
    ::testing::Values(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}),
                      mat({{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, 1}}),
                      mat({{2, 1, 0}, {0, 2, 1}, {0, 0, 2}}), mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}),
                      mat({{1, 1, 0}, {-1, 1, 0}, {0, 0, Rational(1, 2)}}),
                      mat({{-2, 0, 0}, {0, 1, 0}, {0, 0, 3}})));

TEST(ExpPoly, EqualValuedMonomialsMerge) {
  // rho = 5 and |alpha|^2 = 25 for alpha = 3 + 4i: rho^2 and alpha conj(alpha) share a monomial.
  Spectrum s = spectrum(mat({{3, -4, 0}, {4, 3, 0}, {0, 0, 5}}));
  auto ctx = spectral_context(s);
  EXPECT_EQ(ctx->index({2, 0, 0}), ctx->index({0, 1, 1}));
  auto a = ExpPoly::term(ctx, ctx->index({2, 0, 0}), 0, Elem(1));
  auto b = ExpPoly::term(ctx, ctx->index({0, 1, 1}), 0, Elem(1));
  EXPECT_TRUE((a - b).is_zero());
}

TEST(ExpPoly, RatioAndProportional) {
  Spectrum s = spectrum(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
  auto ctx = spectral_context(s);
  auto o = orbit(s, ctx, polycol::testing::vec({1, 1, 0}));
  ExpPoly f = o[0] + o[1];
  ExpPoly g = Elem(-3) * f;
  EXPECT_EQ(*f.ratio_to(g), Elem(-3));
  EXPECT_EQ(*f.proportional(g), -1);
  EXPECT_FALSE(f.proportional(o[0]).has_value());
  EXPECT_FALSE(f.proportional(ExpPoly(ctx)).has_value());  // zero is left to the caller
}

TEST(ExpPoly, ConstantsAndDegree) {
  Spectrum s = spectrum(mat({{2, 1, 0}, {0, 2, 0}, {0, 0, 3}}));
  auto ctx = spectral_context(s);
  auto c = ExpPoly::constant(ctx, Elem(Rational(7, 2)));
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c.constant_value(), Elem(Rational(7, 2)));
  auto o = orbit(s, ctx, polycol::testing::vec({0, 1, 0}));
  // Jordan block: the first coordinate carries n 2^(n-1).
  EXPECT_FALSE(o[0].is_constant());
  for (unsigned n = 0; n < 6; ++n) EXPECT_EQ(o[0].eval(n), Elem(Rational(n) * qpow(2, n) / 2));
}
