#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycol/number_field.hpp"

namespace polycol {

using Vec = std::vector<Elem>;

Elem dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Elem& s, const Vec& a);
bool is_zero_vec(const Vec& a);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec mat_vec(const Matrix<Elem>& m, const Vec& v);

// Linear constraint a.x rel b over a real subfield.
enum class Rel { Ge, Gt, Eq };

struct LinCon {
  Vec a;
  Elem b;
  Rel rel = Rel::Ge;
};

// Exact feasibility by Fourier-Motzkin; returns a witness point.
std::optional<Vec> fm_feasible(const std::vector<LinCon>& sys, std::size_t nvars);

// Constraints on the variables elim..n-1 describing the projection of the
// feasible set (the first `elim` variables eliminated); nullopt if empty.
std::optional<std::vector<LinCon>> fm_project(const std::vector<LinCon>& sys, std::size_t n,
                                              std::size_t elim);

struct Halfspace {
  Vec normal;
  Elem offset;
  bool equality = false;  // normal.x = offset instead of >=
};

struct Polytope {
  std::vector<Halfspace> hs;
  std::size_t ambient = 3;

  std::vector<LinCon> constraints() const;
  bool empty() const;
};

// Affine dimension, -1 for the empty set.
int dimension(const Polytope& p);
bool contains(const Polytope& p, const Vec& x);
bool static_intersects(const Polytope& p, const Polytope& q);
std::optional<Vec> any_point(const Polytope& p);
// True when p is the whole ambient space (no nontrivial constraint).
bool is_whole_space(const Polytope& p);

// Cells of a 2D face: the set u + a v + b w over
//   cone:     a >= 0, b >= 0
//   triangle: a >= 0, b >= 0, a + b <= 1
//   strip:    a >= 0, 0 <= b <= 1
enum class CellKind { Cone, Triangle, Strip };

struct Cell {
  CellKind kind;
  Vec u, v, w;
};

// u + l v with l in [0,1] (bounded) or [0,inf).
struct Edge {
  Vec u, v;
  bool bounded = true;
};

bool cell_contains(const Cell& c, const Vec& x);
bool edge_contains(const Edge& e, const Vec& x);
std::string kind_name(CellKind k);

struct Face {
  Polytope carrier;
  std::vector<Cell> cells;
};

struct Boundary {
  std::vector<Face> faces;
  std::vector<Edge> edges;
  std::vector<Vec> vertices;
};

// Faces (for a 3D polytope) or the polytope itself (2D), each split into
// cells; edges and vertices include the fictive ones of the cells.
Boundary boundary_structure(const Polytope& p);

// Edges and vertices of a polytope of dimension 0 or 1.
Boundary low_dim_structure(const Polytope& p);

// Tasks for "some image of `src` meets `dst`". Vertex tasks test a point
// against a polytope, edge tasks test an edge against a face cell, and
// edge-polytope tasks (used when a side has dimension <= 1) test an edge
// against all halfspaces of a polytope. `inverse` marks the swapped roles,
// where the matrix is replaced by its inverse.
struct VertexTask {
  Vec point;
  const Polytope* target;
  bool inverse;
};

struct EdgeFaceTask {
  Edge edge;
  Cell cell;
  bool inverse;
};

struct EdgePolytopeTask {
  Edge edge;
  const Polytope* target;
  bool inverse;
};

struct TaskSet {
  std::vector<VertexTask> vertex;
  std::vector<EdgeFaceTask> edge_face;
  std::vector<EdgePolytopeTask> edge_poly;
};

// p and q must outlive the returned tasks.
TaskSet intersection_tasks(const Polytope& p, const Polytope& q);

}  // namespace polycol
