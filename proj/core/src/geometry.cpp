#include "polycol/geometry.hpp"

#include <algorithm>

namespace polycol {

Elem dot(const Vec& a, const Vec& b) {
  Elem s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s = s + a[i] * b[i];
  return s;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Elem& s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Elem& e) { return e.is_zero(); });
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Elem(1);
  return v;
}

Vec mat_vec(const Matrix<Elem>& m, const Vec& v) {
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + m(i, j) * v[j];
  return r;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

bool rel_holds(int s, Rel rel) {
  switch (rel) {
    case Rel::Ge: return s >= 0;
    case Rel::Gt: return s > 0;
    case Rel::Eq: return s == 0;
  }
  return false;
}

// Scale so the first nonzero coefficient has magnitude 1. Returns false for
// the all-zero row.
bool normalize(LinCon& r) {
  std::size_t k = 0;
  while (k < r.a.size() && r.a[k].is_zero()) ++k;
  if (k == r.a.size()) return false;
  Elem f = r.a[k];
  if (r.rel != Rel::Eq && f.sign() < 0) f = -f;
  if (f.is_rational() && f.rational_value() == 1) return true;
  Elem fi = f.inverse();
  for (auto& x : r.a) x = x * fi;
  r.b = r.b * fi;
  return true;
}

bool same_vec(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Adds r to rows keeping only the tightest of parallel inequalities.
// Returns false when r is a violated constant row.
bool add_row(std::vector<LinCon>& rows, LinCon r) {
  if (!normalize(r)) return rel_holds(-r.b.sign(), r.rel);
  for (auto& o : rows) {
    if (!same_vec(o.a, r.a)) continue;
    if (o.rel == Rel::Eq || r.rel == Rel::Eq) {
      if (o.rel == Rel::Eq && r.rel == Rel::Eq) {
        if (o.b == r.b) return true;
        continue;
      }
      continue;
    }
    int c = r.b.compare(o.b);
    if (c > 0 || (c == 0 && r.rel == Rel::Gt)) o = std::move(r);
    return true;
  }
  rows.push_back(std::move(r));
  return true;
}

struct Stage {
  std::size_t var;
  bool subst = false;
  LinCon eq;
  std::vector<LinCon> rows;
};

// Value for x_k from rows in variables <= k, given x_0..x_{k-1}.
std::optional<Elem> choose(const std::vector<LinCon>& rows, std::size_t k, const Vec& x) {
  std::optional<Elem> lo, hi, fixed;
  bool lo_strict = false, hi_strict = false;
  for (auto& r : rows) {
    const Elem& c = r.a[k];
    if (c.is_zero()) continue;
    Elem rest = r.b;
    for (std::size_t j = 0; j < k; ++j)
      if (!r.a[j].is_zero()) rest = rest - r.a[j] * x[j];
    Elem v = rest / c;
    if (r.rel == Rel::Eq) {
      if (fixed && *fixed != v) return std::nullopt;
      fixed = v;
      continue;
    }
    bool strict = r.rel == Rel::Gt;
    if (c.sign() > 0) {
      int cmp = lo ? v.compare(*lo) : 1;
      if (cmp > 0) {
        lo = v;
        lo_strict = strict;
      } else if (cmp == 0) {
        lo_strict = lo_strict || strict;
      }
    } else {
      int cmp = hi ? v.compare(*hi) : -1;
      if (cmp < 0) {
        hi = v;
        hi_strict = strict;
      } else if (cmp == 0) {
        hi_strict = hi_strict || strict;
      }
    }
  }
  if (fixed) {
    if (lo) {
      int c = fixed->compare(*lo);
      if (c < 0 || (c == 0 && lo_strict)) return std::nullopt;
    }
    if (hi) {
      int c = fixed->compare(*hi);
      if (c > 0 || (c == 0 && hi_strict)) return std::nullopt;
    }
    return fixed;
  }
  if (lo && hi) {
    int c = lo->compare(*hi);
    if (c > 0 || (c == 0 && (lo_strict || hi_strict))) return std::nullopt;
    if (c == 0) return lo;
    return (*lo + *hi).scaled(Rational(1, 2));
  }
  if (lo) return lo_strict ? *lo + Elem(1) : *lo;
  if (hi) return hi_strict ? *hi - Elem(1) : *hi;
  return Elem(0);
}

}  // namespace

std::optional<Vec> fm_feasible(const std::vector<LinCon>& sys, std::size_t n) {
  std::vector<LinCon> rows;
  for (auto r : sys) {
    r.a.resize(n);
    if (!add_row(rows, std::move(r))) return std::nullopt;
  }
  std::vector<Stage> stages;
  for (std::size_t k = n; k-- > 1;) {
    Stage st;
    st.var = k;
    auto eq = std::find_if(rows.begin(), rows.end(),
                           [&](const LinCon& r) { return r.rel == Rel::Eq && !r.a[k].is_zero(); });
    std::vector<LinCon> next;
    if (eq != rows.end()) {
      st.subst = true;
      st.eq = *eq;
      Elem ic = st.eq.a[k].inverse();
      for (auto it = rows.begin(); it != rows.end(); ++it) {
        if (it == eq) continue;
        LinCon r = *it;
        if (!r.a[k].is_zero()) {
          Elem f = r.a[k] * ic;
          for (std::size_t j = 0; j < n; ++j) r.a[j] = r.a[j] - f * st.eq.a[j];
          r.a[k] = Elem();
          r.b = r.b - f * st.eq.b;
        }
        if (!add_row(next, std::move(r))) return std::nullopt;
      }
    } else {
      std::vector<const LinCon*> lo, hi;
      for (auto& r : rows) {
        if (r.a[k].is_zero()) {
          if (!add_row(next, r)) return std::nullopt;
          continue;
        }
        st.rows.push_back(r);
        (r.a[k].sign() > 0 ? lo : hi).push_back(&r);
      }
      for (auto* p : lo)
        for (auto* q : hi) {
          Elem cp = p->a[k], cq = -q->a[k];
          LinCon r;
          r.a.resize(n);
          for (std::size_t j = 0; j < n; ++j) r.a[j] = cq * p->a[j] + cp * q->a[j];
          r.a[k] = Elem();
          r.b = cq * p->b + cp * q->b;
          r.rel = (p->rel == Rel::Gt || q->rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
          if (!add_row(next, std::move(r))) return std::nullopt;
        }
    }
    stages.push_back(std::move(st));
    rows = std::move(next);
  }
  Vec x(n);
  if (n == 0) return x;
  auto x0 = choose(rows, 0, x);
  if (!x0) return std::nullopt;
  x[0] = *x0;
  for (std::size_t s = stages.size(); s-- > 0;) {
    const Stage& st = stages[s];
    if (st.subst) {
      Elem rest = st.eq.b;
      for (std::size_t j = 0; j < n; ++j)
        if (j != st.var && !st.eq.a[j].is_zero()) rest = rest - st.eq.a[j] * x[j];
      x[st.var] = rest / st.eq.a[st.var];
    } else {
      auto v = choose(st.rows, st.var, x);
      if (!v) throw DomainError("Fourier-Motzkin back-substitution failed");
      x[st.var] = *v;
    }
  }
  return x;
}

std::optional<std::vector<LinCon>> fm_project(const std::vector<LinCon>& sys, std::size_t n,
                                              std::size_t elim) {
  std::vector<LinCon> rows;
  for (auto r : sys) {
    r.a.resize(n);
    if (!add_row(rows, std::move(r))) return std::nullopt;
  }
  for (std::size_t k = 0; k < elim; ++k) {
    std::vector<LinCon> next;
    auto eq = std::find_if(rows.begin(), rows.end(),
                           [&](const LinCon& r) { return r.rel == Rel::Eq && !r.a[k].is_zero(); });
    if (eq != rows.end()) {
      LinCon e = *eq;
      Elem ic = e.a[k].inverse();
      for (auto it = rows.begin(); it != rows.end(); ++it) {
        if (it == eq) continue;
        LinCon r = *it;
        if (!r.a[k].is_zero()) {
          Elem f = r.a[k] * ic;
          for (std::size_t j = 0; j < n; ++j) r.a[j] = r.a[j] - f * e.a[j];
          r.a[k] = Elem();
          r.b = r.b - f * e.b;
        }
        if (!add_row(next, std::move(r))) return std::nullopt;
      }
    } else {
      std::vector<const LinCon*> lo, hi;
      for (auto& r : rows) {
        if (r.a[k].is_zero()) {
          if (!add_row(next, r)) return std::nullopt;
        } else {
          (r.a[k].sign() > 0 ? lo : hi).push_back(&r);
        }
      }
      for (auto* p : lo)
        for (auto* q : hi) {
          Elem cp = p->a[k], cq = -q->a[k];
          LinCon r;
          r.a.resize(n);
          for (std::size_t j = 0; j < n; ++j) r.a[j] = cq * p->a[j] + cp * q->a[j];
          r.a[k] = Elem();
          r.b = cq * p->b + cp * q->b;
          r.rel = (p->rel == Rel::Gt || q->rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
          if (!add_row(next, std::move(r))) return std::nullopt;
        }
    }
    rows = std::move(next);
  }
  for (auto& r : rows) r.a.erase(r.a.begin(), r.a.begin() + elim);
  return rows;
}

// ---------------------------------------------------------------------------
// Polytopes

std::vector<LinCon> Polytope::constraints() const {
  std::vector<LinCon> out;
  for (auto& h : hs) out.push_back({h.normal, h.offset, h.equality ? Rel::Eq : Rel::Ge});
  return out;
}

bool Polytope::empty() const { return !fm_feasible(constraints(), ambient); }

std::optional<Vec> any_point(const Polytope& p) { return fm_feasible(p.constraints(), p.ambient); }

bool is_whole_space(const Polytope& p) {
  return std::all_of(p.hs.begin(), p.hs.end(), [](const Halfspace& h) {
    return is_zero_vec(h.normal) && (h.equality ? h.offset.is_zero() : h.offset.sign() <= 0);
  });
}

namespace {

// Normals of explicit and implicit equalities. Assumes p nonempty.
std::vector<Vec> hull_equalities(const Polytope& p, std::vector<LinCon>* eq_rows = nullptr) {
  std::vector<LinCon> cons = p.constraints();
  std::vector<Vec> eqs;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (is_zero_vec(cons[i].a)) continue;
    bool eq = cons[i].rel == Rel::Eq;
    if (!eq) {
      auto trial = cons;
      trial[i].rel = Rel::Gt;
      eq = !fm_feasible(trial, p.ambient);
    }
    if (eq) {
      eqs.push_back(cons[i].a);
      if (eq_rows) eq_rows->push_back({cons[i].a, cons[i].b, Rel::Eq});
    }
  }
  return eqs;
}

std::size_t vec_rank(const std::vector<Vec>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  Matrix<Elem> m(vs.size(), n, Elem());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  return rank(m);
}

}  // namespace

int dimension(const Polytope& p) {
  if (p.empty()) return -1;
  return static_cast<int>(p.ambient - vec_rank(hull_equalities(p), p.ambient));
}

bool contains(const Polytope& p, const Vec& x) {
  for (auto& h : p.hs) {
    int s = (dot(h.normal, x) - h.offset).sign();
    if (h.equality ? s != 0 : s < 0) return false;
  }
  return true;
}

bool static_intersects(const Polytope& p, const Polytope& q) {
  auto c = p.constraints(), d = q.constraints();
  c.insert(c.end(), d.begin(), d.end());
  return fm_feasible(c, p.ambient).has_value();
}

// ---------------------------------------------------------------------------
// Cells

std::string kind_name(CellKind k) {
  switch (k) {
    case CellKind::Cone: return "cone";
    case CellKind::Triangle: return "triangle";
    case CellKind::Strip: return "strip";
  }
  return "?";
}

bool cell_contains(const Cell& c, const Vec& x) {
  // x = u + a v + b w in unknowns (a, b)
  std::vector<LinCon> sys;
  for (std::size_t i = 0; i < x.size(); ++i)
    sys.push_back({Vec{c.v[i], c.w[i]}, x[i] - c.u[i], Rel::Eq});
  sys.push_back({Vec{Elem(1), Elem()}, Elem(), Rel::Ge});
  sys.push_back({Vec{Elem(), Elem(1)}, Elem(), Rel::Ge});
  if (c.kind == CellKind::Triangle) sys.push_back({Vec{Elem(-1), Elem(-1)}, Elem(-1), Rel::Ge});
  if (c.kind == CellKind::Strip) sys.push_back({Vec{Elem(), Elem(-1)}, Elem(-1), Rel::Ge});
  return fm_feasible(sys, 2).has_value();
}

bool edge_contains(const Edge& e, const Vec& x) {
  std::vector<LinCon> sys;
  for (std::size_t i = 0; i < x.size(); ++i) sys.push_back({Vec{e.v[i]}, x[i] - e.u[i], Rel::Eq});
  sys.push_back({Vec{Elem(1)}, Elem(), Rel::Ge});
  if (e.bounded) sys.push_back({Vec{Elem(-1)}, Elem(-1), Rel::Ge});
  return fm_feasible(sys, 1).has_value();
}

namespace {

int lex_compare(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = a[i].compare(b[i])) return c;
  return 0;
}

// a and b point the same way (b = t a, t > 0).
bool same_direction(const Vec& a, const Vec& b) {
  std::size_t k = 0;
  while (k < a.size() && a[k].is_zero()) ++k;
  if (k == a.size() || b[k].is_zero()) return false;
  Elem t = b[k] / a[k];
  if (t.sign() <= 0) return false;
  return same_vec(t * a, b);
}

Vec perp(const Vec& g) { return Vec{-g[1], g[0]}; }

void add_vertex(std::vector<Vec>& vs, const Vec& v) {
  for (auto& o : vs)
    if (same_vec(o, v)) return;
  vs.push_back(v);
}

bool same_edge(const Edge& a, const Edge& b) {
  if (a.bounded != b.bounded) return false;
  if (a.bounded) {
    Vec a1 = a.u + a.v, b1 = b.u + b.v;
    return (same_vec(a.u, b.u) && same_vec(a1, b1)) || (same_vec(a.u, b1) && same_vec(a1, b.u));
  }
  return same_vec(a.u, b.u) && same_direction(a.v, b.v);
}

void add_edge(std::vector<Edge>& es, const Edge& e) {
  for (auto& o : es)
    if (same_edge(o, e)) return;
  es.push_back(e);
}

struct Row2 {
  Vec g;
  Elem h;
};

struct Piece {
  Vec q, d;
  std::optional<Elem> lo, hi;
  std::size_t row;
};

// Cell decomposition of the 2D region {y : g_i . y >= h_i}, assumed
// two-dimensional.
std::vector<Cell> decompose_2d(const std::vector<Row2>& rows) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Vec& g = rows[i].g;
    Piece pc;
    pc.row = i;
    pc.q = !g[0].is_zero() ? Vec{rows[i].h / g[0], Elem()} : Vec{Elem(), rows[i].h / g[1]};
    pc.d = perp(g);
    bool empty = false;
    for (std::size_t j = 0; j < rows.size() && !empty; ++j) {
      if (j == i) continue;
      Elem c = dot(rows[j].g, pc.d), rest = rows[j].h - dot(rows[j].g, pc.q);
      if (c.is_zero()) {
        empty = rest.sign() > 0;
        continue;
      }
      Elem t = rest / c;
      if (c.sign() > 0) {
        if (!pc.lo || t.compare(*pc.lo) > 0) pc.lo = t;
      } else {
        if (!pc.hi || t.compare(*pc.hi) < 0) pc.hi = t;
      }
    }
    if (empty) continue;
    if (pc.lo && pc.hi && pc.lo->compare(*pc.hi) >= 0) continue;
    pieces.push_back(std::move(pc));
  }

  std::vector<Vec> verts;
  for (auto& pc : pieces) {
    if (pc.lo) add_vertex(verts, pc.q + *pc.lo * pc.d);
    if (pc.hi) add_vertex(verts, pc.q + *pc.hi * pc.d);
  }
  Vec o{Elem(), Elem()};
  if (!verts.empty()) {
    o = *std::min_element(verts.begin(), verts.end(),
                          [](const Vec& a, const Vec& b) { return lex_compare(a, b) < 0; });
  } else if (!pieces.empty()) {
    o = pieces[0].q;
  }

  std::vector<Cell> cells;
  auto strip = [&](const Vec& p, const Vec& dir) {
    cells.push_back({CellKind::Strip, o, dir, p - o});
  };
  for (auto& pc : pieces) {
    const Row2& r = rows[pc.row];
    if ((dot(r.g, o) - r.h).is_zero()) continue;
    if (pc.lo && pc.hi) {
      Vec a = pc.q + *pc.lo * pc.d, b = pc.q + *pc.hi * pc.d;
      cells.push_back({CellKind::Triangle, o, a - o, b - o});
    } else if (pc.lo) {
      strip(pc.q + *pc.lo * pc.d, pc.d);
    } else if (pc.hi) {
      strip(pc.q + *pc.hi * pc.d, Elem(-1) * pc.d);
    } else {
      strip(pc.q, pc.d);
      strip(pc.q, Elem(-1) * pc.d);
    }
  }

  // recession cone {d : g_i . d >= 0}
  auto cone = [&](const Vec& a, const Vec& b) { cells.push_back({CellKind::Cone, o, a, b}); };
  if (rows.empty()) {
    Vec e0{Elem(1), Elem()}, e1{Elem(), Elem(1)};
    Vec m0 = Elem(-1) * e0, m1 = Elem(-1) * e1;
    cone(e0, e1);
    cone(e1, m0);
    cone(m0, m1);
    cone(m1, e0);
    return cells;
  }
  const Vec& g0 = rows[0].g;
  bool parallel = true, opposite = false;
  for (auto& r : rows) {
    if (!(r.g[0] * g0[1] - r.g[1] * g0[0]).is_zero()) parallel = false;
    else if (dot(r.g, g0).sign() < 0) opposite = true;
  }
  if (parallel) {
    if (!opposite) {
      Vec l = perp(g0);
      cone(l, g0);
      cone(Elem(-1) * l, g0);
    }
    return cells;
  }
  std::vector<Vec> rays;
  for (auto& r : rows)
    for (int s : {1, -1}) {
      Vec c = Elem(s) * perp(r.g);
      bool in = std::all_of(rows.begin(), rows.end(),
                            [&](const Row2& x) { return dot(x.g, c).sign() >= 0; });
      if (!in) continue;
      bool dup = std::any_of(rays.begin(), rays.end(),
                             [&](const Vec& x) { return same_direction(x, c); });
      if (!dup) rays.push_back(c);
    }
  if (rays.size() >= 2) {
    // counterclockwise order
    if ((rays[0][0] * rays[1][1] - rays[0][1] * rays[1][0]).sign() < 0) std::swap(rays[0], rays[1]);
    cone(rays[0], rays[1]);
  }
  return cells;
}

void cell_skeleton(const Cell& c, std::vector<Edge>& es, std::vector<Vec>& vs) {
  switch (c.kind) {
    case CellKind::Triangle: {
      Vec a = c.u + c.v, b = c.u + c.w;
      add_edge(es, {c.u, c.v, true});
      add_edge(es, {c.u, c.w, true});
      add_edge(es, {a, b - a, true});
      add_vertex(vs, c.u);
      add_vertex(vs, a);
      add_vertex(vs, b);
      break;
    }
    case CellKind::Cone:
      add_edge(es, {c.u, c.v, false});
      add_edge(es, {c.u, c.w, false});
      add_vertex(vs, c.u);
      break;
    case CellKind::Strip: {
      Vec b = c.u + c.w;
      add_edge(es, {c.u, c.v, false});
      add_edge(es, {b, c.v, false});
      add_edge(es, {c.u, c.w, true});
      add_vertex(vs, c.u);
      add_vertex(vs, b);
      break;
    }
  }
}

// Cells of a two-dimensional polytope, in ambient coordinates.
std::vector<Cell> face_cells(const Polytope& f) {
  std::vector<LinCon> eqs;
  hull_equalities(f, &eqs);
  if (eqs.empty()) throw DomainError("face has no supporting plane");
  const Vec& nrm = eqs[0].a;
  std::size_t k = 0;
  while (nrm[k].is_zero()) ++k;
  std::size_t i1 = k == 0 ? 1 : 0, i2 = k == 2 ? 1 : 2;
  Vec p0(3), e1(3), e2(3);
  p0[k] = eqs[0].b / nrm[k];
  e1[i1] = nrm[k];
  e1[k] = -nrm[i1];
  e2[i2] = nrm[k];
  e2[k] = -nrm[i2];
  std::vector<Row2> rows;
  for (auto& h : f.hs) {
    Vec g{dot(h.normal, e1), dot(h.normal, e2)};
    if (is_zero_vec(g)) continue;
    if (h.equality) throw DomainError("face is not two-dimensional");
    Row2 r{g, h.offset - dot(h.normal, p0)};
    bool dup = false;
    for (auto& o : rows)
      if (same_direction(o.g, r.g) && (r.h * o.g[0] - o.h * r.g[0]).is_zero() &&
          (r.h * o.g[1] - o.h * r.g[1]).is_zero())
        dup = true;
    if (!dup) rows.push_back(std::move(r));
  }
  auto to3 = [&](const Vec& y) { return p0 + y[0] * e1 + y[1] * e2; };
  auto dir3 = [&](const Vec& y) { return y[0] * e1 + y[1] * e2; };
  std::vector<Cell> out;
  for (auto& c : decompose_2d(rows)) out.push_back({c.kind, to3(c.u), dir3(c.v), dir3(c.w)});
  return out;
}

bool same_hyperplane(const Halfspace& a, const Halfspace& b) {
  if (!same_direction(a.normal, b.normal)) return false;
  std::size_t k = 0;
  while (a.normal[k].is_zero()) ++k;
  return (a.offset * b.normal[k] - b.offset * a.normal[k]).is_zero();
}

}  // namespace

Boundary boundary_structure(const Polytope& p) {
  int dim = dimension(p);
  if (dim < 2) throw DomainError("boundary structure needs a polytope of dimension 2 or 3");
  if (is_whole_space(p)) throw DomainError("the whole space has no boundary");
  Boundary b;
  if (dim == 2) {
    b.faces.push_back({p, face_cells(p)});
  } else {
    std::vector<const Halfspace*> seen;
    for (std::size_t i = 0; i < p.hs.size(); ++i) {
      const Halfspace& h = p.hs[i];
      if (h.equality || is_zero_vec(h.normal)) continue;
      bool dup = std::any_of(seen.begin(), seen.end(),
                             [&](const Halfspace* s) { return same_hyperplane(*s, h); });
      if (dup) continue;
      seen.push_back(&h);
      Polytope f = p;
      f.hs[i].equality = true;
      if (dimension(f) != 2) continue;
      b.faces.push_back({f, face_cells(f)});
    }
  }
  for (auto& f : b.faces)
    for (auto& c : f.cells) cell_skeleton(c, b.edges, b.vertices);
  return b;
}

Boundary low_dim_structure(const Polytope& p) {
  int dim = dimension(p);
  if (dim < 0 || dim > 1) throw DomainError("expected a point or a line piece");
  Boundary b;
  Vec x0 = *any_point(p);
  if (dim == 0) {
    b.vertices.push_back(x0);
    return b;
  }
  auto eqs = hull_equalities(p);
  Matrix<Elem> m(eqs.size(), p.ambient, Elem());
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (std::size_t j = 0; j < p.ambient; ++j) m(i, j) = eqs[i][j];
  Vec d = nullspace(m, Elem(1)).at(0);
  std::optional<Elem> lo, hi;
  for (auto& h : p.hs) {
    Elem c = dot(h.normal, d);
    if (c.is_zero()) continue;
    Elem t = (h.offset - dot(h.normal, x0)) / c;
    if (c.sign() > 0) {
      if (!lo || t.compare(*lo) > 0) lo = t;
    } else {
      if (!hi || t.compare(*hi) < 0) hi = t;
    }
  }
  if (lo && hi) {
    Vec a = x0 + *lo * d;
    b.edges.push_back({a, (*hi - *lo) * d, true});
    b.vertices.push_back(a);
    b.vertices.push_back(x0 + *hi * d);
  } else if (lo) {
    b.edges.push_back({x0 + *lo * d, d, false});
    b.vertices.push_back(x0 + *lo * d);
  } else if (hi) {
    b.edges.push_back({x0 + *hi * d, Elem(-1) * d, false});
    b.vertices.push_back(x0 + *hi * d);
  } else {
    b.edges.push_back({x0, d, false});
    b.edges.push_back({x0, Elem(-1) * d, false});
    b.vertices.push_back(x0);
  }
  return b;
}

TaskSet intersection_tasks(const Polytope& p, const Polytope& q) {
  TaskSet ts;
  if (is_whole_space(p) || is_whole_space(q))
    throw DomainError("polytope is the whole space");
  int dp = dimension(p), dq = dimension(q);
  if (dp < 0 || dq < 0) return ts;
  auto low = [&](const Polytope& src, const Polytope& dst, bool inv) {
    Boundary b = low_dim_structure(src);
    for (auto& v : b.vertices) ts.vertex.push_back({v, &dst, inv});
    for (auto& e : b.edges) ts.edge_poly.push_back({e, &dst, inv});
  };
  if (dp <= 1) {
    low(p, q, false);
    return ts;
  }
  if (dq <= 1) {
    low(q, p, true);
    return ts;
  }
  Boundary bp = boundary_structure(p), bq = boundary_structure(q);
  for (auto& v : bp.vertices) ts.vertex.push_back({v, &q, false});
  for (auto& v : bq.vertices) ts.vertex.push_back({v, &p, true});
  for (auto& e : bp.edges)
    for (auto& f : bq.faces)
      for (auto& c : f.cells) ts.edge_face.push_back({e, c, false});
  for (auto& e : bq.edges)
    for (auto& f : bp.faces)
      for (auto& c : f.cells) ts.edge_face.push_back({e, c, true});
  return ts;
}

}  // namespace polycol
