#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polycol/oracle.hpp"
#include "random_instances.hpp"

using namespace polycol;
using polycol::testing::box;
using polycol::testing::mat;

TEST(Oracle, DiagonalDoubling) {
  EMatrix a = mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  Polytope p1 = box({1, 1, 1}, {Rational(3, 2), Rational(3, 2), Rational(3, 2)});
  Polytope p2 = box({4, 4, 4}, {5, 5, 5});
  OracleResult r = scan(a, p1, p2, 10);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_EQ(r.hits[0].n, 2u);
  EXPECT_TRUE(contains(p1, r.hits[0].point));
  EXPECT_TRUE(contains(p2, mat_vec(power(a, 2), r.hits[0].point)));
  EXPECT_EQ(r.scanned_upto, 10u);
  EXPECT_FALSE(collide_at(a, p1, p2, 3).has_value());
}

TEST(Oracle, MaxHitsStopsEarly) {
  // Identity: every n collides.
  EMatrix a = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  Polytope p = box({0, 0, 0}, {1, 1, 1});
  OracleResult r = scan(a, p, p, 50, 3);
  EXPECT_EQ(r.hits.size(), 3u);
  EXPECT_EQ(r.hits[2].n, 2u);
}

TEST(Oracle, LowerDimensions) {
  // Works in the ambient dimension of the inputs.
  EMatrix a = mat({{0, -1}, {1, 0}});
  Polytope p1, p2;
  p1.ambient = p2.ambient = 2;
  p1.hs = {{polycol::testing::vec({1, 0}), Elem(1), true}, {polycol::testing::vec({0, 1}), Elem(0), true}};
  p2.hs = {{polycol::testing::vec({1, 0}), Elem(Rational(-1, 2))}, {polycol::testing::vec({-1, 0}), Elem(Rational(-1, 2))},
           {polycol::testing::vec({0, 1}), Elem(Rational(1, 2))}};
  OracleResult r = scan(a, p1, p2, 8);
  ASSERT_EQ(r.hits.size(), 2u);
  EXPECT_EQ(r.hits[0].n, 1u);
  EXPECT_EQ(r.hits[1].n, 5u);
}

TEST(Oracle, PointRendering) {
  EXPECT_EQ(point_str(polycol::testing::vec({Rational(1, 2), -3, 0}), 6), "(0.5, -3, 0)");
}
