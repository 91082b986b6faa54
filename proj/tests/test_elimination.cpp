#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "polycol/elimination.hpp"
#include "random_instances.hpp"

using namespace polycol;
using polycol::testing::mat;

namespace {

Rational rq(std::mt19937& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> d(lo * den, hi * den);
  return Rational(d(rng), den);
}

Vec rv(std::mt19937& rng) { return {Elem(rq(rng, -2, 2, 2)), Elem(rq(rng, -2, 2, 2)), Elem(rq(rng, -2, 2, 2))}; }

bool disjunction_holds(const Disjunction& d, unsigned long n) {
  for (const auto& s : d)
    if (system_holds(s, n)) return true;
  return false;
}

class Elimination : public ::testing::TestWithParam<EMatrix> {};

}  // namespace

// The disjunction is equivalent to the quantified sentence at every n.
TEST_P(Elimination, EquivalentToSentence) {
  std::mt19937 rng(7);
  Spectrum s = spectrum(GetParam());
  auto ctx = spectral_context(s);
  for (int trial = 0; trial < 5; ++trial) {
    Edge e{rv(rng), rv(rng), trial % 2 == 0};
    if (is_zero_vec(e.v)) continue;
    Cell c{CellKind(trial % 3), rv(rng), rv(rng), rv(rng)};
    Sentence sen = build_sentence(e, c, s, ctx);
    Disjunction d = fourier_motzkin(sen);
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(sentence_holds(sen, n), disjunction_holds(d, n)) << "n=" << n;
  }
}

// With a tail start, equivalence is only claimed from that start on.
TEST_P(Elimination, TailPruningKeepsTheTail) {
  std::mt19937 rng(8);
  Spectrum s = spectrum(GetParam());
  auto ctx = spectral_context(s);
  for (int trial = 0; trial < 3; ++trial) {
    Edge e{rv(rng), rv(rng), true};
    if (is_zero_vec(e.v)) continue;
    Cell c{CellKind::Triangle, rv(rng), rv(rng), rv(rng)};
    Sentence sen = build_sentence(e, c, s, ctx);
    EliminationStats full, tail;
    fourier_motzkin(sen, {}, &full);
    Disjunction d = fourier_motzkin(sen, {}, &tail, 10);
    EXPECT_LE(tail.branches, full.branches);
    for (unsigned n = 10; n <= 18; ++n) EXPECT_EQ(sentence_holds(sen, n), disjunction_holds(d, n)) << "n=" << n;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Spectra, Elimination,
    ::testing::Values(mat({{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, Rational(1, 2)}}),
                      mat({{0, -2, 0}, {2, 0, 0}, {0, 0, 2}}), mat({{1, 2, 0}, {0, 1, -1}, {2, 0, 1}}),
                      mat({{2, 1, 0}, {0, 2, 1}, {0, 0, 2}}), mat({{1, 1, 0}, {0, -2, 0}, {0, 0, 3}})));

TEST(Elimination, PointAndEdgePolytopeSentences) {
  Spectrum s = spectrum(mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  auto ctx = spectral_context(s);
  Polytope target = polycol::testing::box({4, 4, 4}, {5, 5, 5});
  Sentence ps = build_point_sentence(polycol::testing::vec({1, 1, 1}), target, s, ctx);
  EXPECT_EQ(ps.nvars, 0u);
  Disjunction d = fourier_motzkin(ps);
  for (unsigned n = 0; n < 5; ++n) EXPECT_EQ(disjunction_holds(d, n), n == 2);
  Edge e{polycol::testing::vec({1, 1, 1}), polycol::testing::vec({Rational(1, 2), 0, 0}), true};
  Sentence es = build_edge_polytope_sentence(e, target, s, ctx);
  Disjunction de = fourier_motzkin(es);
  for (unsigned n = 0; n < 5; ++n) EXPECT_EQ(sentence_holds(es, n), disjunction_holds(de, n));
}

TEST(Elimination, SimplifyMergesAtoms) {
  Spectrum s = spectrum(mat({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
  auto ctx = spectral_context(s);
  ExpPoly f = orbit(s, ctx, polycol::testing::vec({1, 0, 0}))[0] - ExpPoly::constant(ctx, Elem(4));
  // f = 0 together with 2f > 0 is contradictory.
  EXPECT_FALSE(simplify(System{{{f, ARel::Eq}, {Elem(2) * f, ARel::Gt}}}).has_value());
  // Duplicates collapse, constants vanish.
  auto t = simplify(System{{{f, ARel::Ge}, {f, ARel::Ge}, {ExpPoly::constant(ctx, Elem(1)), ARel::Gt}}});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->atoms.size(), 1u);
  EXPECT_FALSE(simplify(System{{{ExpPoly::constant(ctx, Elem(-1)), ARel::Ge}}}).has_value());
}
