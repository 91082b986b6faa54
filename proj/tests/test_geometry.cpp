#include <gtest/gtest.h>

#include <random>

#include "polycol/escape.hpp"
#include "polycol/geometry.hpp"
#include "random_instances.hpp"

using namespace polycol;
using polycol::testing::box;

namespace {

Halfspace hs(long a, long b, long c, Rational o, bool eq = false) {
  return {Vec{Elem(a), Elem(b), Elem(c)}, Elem(o), eq};
}

Vec pt(Rational x, Rational y, Rational z) { return {Elem(x), Elem(y), Elem(z)}; }

Polytope cube() { return box({0, 0, 0}, {1, 1, 1}); }

}  // namespace

TEST(Geometry, Dimensions) {
  EXPECT_EQ(dimension(cube()), 3);
  Polytope point;
  for (int i = 0; i < 3; ++i) point.hs.push_back({unit_vec(3, i), Elem(Rational(0)), true});
  EXPECT_EQ(dimension(point), 0);
  Polytope empty;
  empty.hs = {hs(1, 0, 0, 1), hs(-1, 0, 0, 0)};
  EXPECT_EQ(dimension(empty), -1);
  EXPECT_TRUE(empty.empty());
  Polytope plane;
  plane.hs = {hs(0, 0, 1, 0, true)};
  EXPECT_EQ(dimension(plane), 2);
  EXPECT_TRUE(is_whole_space(Polytope{}));
}

TEST(Geometry, BoundaryOfTetrahedronAndCube) {
  Polytope tet;
  tet.hs = {hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0), hs(-1, -1, -1, -1)};
  auto b = boundary_structure(tet);
  EXPECT_EQ(b.faces.size(), 4u);
  EXPECT_EQ(b.vertices.size(), 4u);
  EXPECT_EQ(b.edges.size(), 6u);
  for (auto& f : b.faces)
    for (auto& c : f.cells) EXPECT_EQ(c.kind, CellKind::Triangle);
  auto bc = boundary_structure(cube());
  EXPECT_EQ(bc.faces.size(), 6u);
  EXPECT_EQ(bc.vertices.size(), 8u);
}

TEST(Geometry, UnboundedFacesUseConesAndStrips) {
  Polytope quadrant;
  quadrant.hs = {hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0, true)};
  auto b = boundary_structure(quadrant);
  ASSERT_EQ(b.faces.size(), 1u);
  bool cone = false;
  for (auto& c : b.faces[0].cells) cone |= c.kind == CellKind::Cone;
  EXPECT_TRUE(cone);
  Polytope strip;
  strip.hs = {hs(0, 1, 0, 0), hs(0, -1, 0, -1), hs(0, 0, 1, 0, true)};
  auto bs = boundary_structure(strip);
  bool has_strip = false;
  for (auto& f : bs.faces)
    for (auto& c : f.cells) has_strip |= c.kind == CellKind::Strip;
  EXPECT_TRUE(has_strip);
}

// Every point of a face lies in some cell, and every cell point in the face.
TEST(Geometry, CellsCoverFaces) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-40, 40);
  Polytope tet;
  tet.hs = {hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0), hs(-1, -1, -1, -1)};
  Polytope wedge;
  wedge.hs = {hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(1, -1, 0, -2)};
  for (const Polytope* p : {&tet, &wedge}) {
    auto b = boundary_structure(*p);
    for (auto& f : b.faces) {
      for (int t = 0; t < 200; ++t) {
        // Random point of the face carrier plane near the face.
        Vec x = pt(Rational(c(rng), 10), Rational(c(rng), 10), Rational(c(rng), 10));
        auto cons = f.carrier.constraints();
        // Project onto the plane along a coordinate with a nonzero normal entry.
        const Halfspace* eq = nullptr;
        for (auto& h : f.carrier.hs)
          if (h.equality) eq = &h;
        ASSERT_NE(eq, nullptr);
        std::size_t k = 0;
        while (eq->normal[k].is_zero()) ++k;
        Elem rest = eq->offset - dot(eq->normal, x) + eq->normal[k] * x[k];
        x[k] = rest / eq->normal[k];
        bool in_face = contains(f.carrier, x);
        bool in_cell = false;
        for (auto& cell : f.cells) in_cell |= cell_contains(cell, x);
        EXPECT_EQ(in_face, in_cell);
      }
    }
  }
}

TEST(Geometry, IntersectionAndFeasibility) {
  EXPECT_TRUE(static_intersects(cube(), box({1, 1, 1}, {2, 2, 2})));
  EXPECT_FALSE(static_intersects(cube(), box({2, 2, 2}, {3, 3, 3})));
  Polytope slab;
  slab.hs = {hs(1, 1, 1, Rational(3, 2), true)};
  EXPECT_TRUE(static_intersects(cube(), slab));
  EXPECT_TRUE(contains(cube(), pt(Rational(1, 2), Rational(1, 2), Rational(1, 2))));
  EXPECT_FALSE(contains(cube(), pt(2, 0, 0)));
  auto w = any_point(box({3, 3, 3}, {4, 4, 4}));
  ASSERT_TRUE(w);
  EXPECT_TRUE(contains(box({3, 3, 3}, {4, 4, 4}), *w));
  std::vector<LinCon> strict{{Vec{Elem(1)}, Elem(0), Rel::Gt}, {Vec{Elem(-1)}, Elem(0), Rel::Ge}};
  EXPECT_FALSE(fm_feasible(strict, 1));
}

TEST(Geometry, TasksCountBothOrientations) {
  Polytope tet;
  tet.hs = {hs(1, 0, 0, 0), hs(0, 1, 0, 0), hs(0, 0, 1, 0), hs(-1, -1, -1, -1)};
  auto ts = intersection_tasks(tet, tet);
  EXPECT_EQ(ts.vertex.size(), 8u);
  // 6 edges against 4 triangles, both ways.
  EXPECT_EQ(ts.edge_face.size(), 48u);
}

TEST(Geometry, VerticesOfBoundedPolytopes) {
  auto v = polytope_vertices(cube());
  ASSERT_TRUE(v);
  EXPECT_EQ(v->size(), 8u);
  Polytope half;
  half.hs = {hs(1, 0, 0, 0)};
  EXPECT_FALSE(polytope_vertices(half));
  Polytope point;
  for (int i = 0; i < 3; ++i) point.hs.push_back({unit_vec(3, i), Elem(Rational(i)), true});
  auto pv = polytope_vertices(point);
  ASSERT_TRUE(pv);
  EXPECT_EQ(pv->size(), 1u);
}
