#include "polycol/spectral.hpp"

#include <algorithm>

namespace polycol {

EMatrix zero_matrix(std::size_t r, std::size_t c) { return EMatrix(r, c, Elem()); }

EMatrix identity_matrix(std::size_t n) { return EMatrix::identity(n, Elem(), Elem(1)); }

EMatrix embed_matrix(const EMatrix& m, const FieldPtr& k, const Elem& gen_image) {
  EMatrix out(m.rows(), m.cols(), Elem(k, Rational(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = embed(m(i, j), k, gen_image);
  return out;
}

FieldPtr field_of(const EMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).field()) return m(i, j).field();
  return NumberField::rationals();
}

std::optional<EMatrix> try_inverse(const EMatrix& m) { return inverse(m, Elem(), Elem(1)); }

Elem det(const EMatrix& m) { return determinant(m, Elem(), Elem(1)); }

EMatrix power(const EMatrix& m, unsigned long n) { return mat_pow(m, n, Elem(), Elem(1)); }

std::string shape_name(JordanShape s) {
  switch (s) {
    case JordanShape::Diagonal: return "diagonal";
    case JordanShape::OneBlock: return "one-block";
    case JordanShape::FullBlock: return "full-block";
  }
  return "?";
}

Elem Spectrum::to_field(const Elem& x) const { return embed(x, field, base_image); }

Vec Spectrum::to_field(const Vec& x) const {
  Vec out;
  for (auto& e : x) out.push_back(to_field(e));
  return out;
}

EMatrix invert(const EMatrix& a) {
  auto inv = try_inverse(a);
  if (!inv) throw DomainError("matrix is singular; reduce it first");
  return *inv;
}

namespace {

EMatrix column_matrix(const std::vector<Vec>& cols, const Elem& zero) {
  EMatrix m(3, cols.size(), zero);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < 3; ++i) m(i, j) = cols[j][i];
  return m;
}

struct Block {
  int eig;
  std::size_t start, size;
};

Vec first_nonkernel(const EMatrix& n, const Elem& zero) {
  for (std::size_t c = 0; c < 3; ++c) {
    Vec e(3, zero);
    e[c] = Elem(zero.field(), Rational(1));
    if (!is_zero_vec(mat_vec(n, e))) return e;
  }
  throw DomainError("matrix unexpectedly zero");
}

}  // namespace

Spectrum spectrum(const EMatrix& a0) {
  if (a0.rows() != 3 || a0.cols() != 3) throw DomainError("spectrum needs a 3x3 matrix");
  FieldPtr f = field_of(a0);
  KPoly chi = charpoly(a0, Elem(f, Rational(1)));
  std::vector<AlgebraicNumber> roots = kpoly_roots(chi);

  std::vector<AlgebraicNumber> gens{f->generator()};
  gens.insert(gens.end(), roots.begin(), roots.end());
  FieldBuild fb = build_field(gens);

  Spectrum s;
  s.field = fb.field;
  s.base_image = f->is_rational_field() ? Elem(s.field, Rational(0)) : fb.images[0];
  s.a = embed_matrix(a0, s.field, s.base_image);
  Elem zero(s.field, Rational(0)), one(s.field, Rational(1));

  std::vector<std::size_t> idx(roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  s.complex_pair = std::any_of(roots.begin(), roots.end(), [](auto& r) { return !r.is_real(); });
  if (s.complex_pair) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      auto key = [&](std::size_t i) { return roots[i].is_real() ? 0 : (sgn(roots[i].im()) > 0 ? 1 : 2); };
      return key(x) < key(y);
    });
  } else {
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      return fb.images[1 + x].compare(fb.images[1 + y]) < 0;
    });
  }
  KPoly chik;
  {
    std::vector<Elem> c;
    for (auto& e : chi.coeffs()) c.push_back(s.to_field(e));
    chik = KPoly(c);
  }
  for (std::size_t i : idx) {
    s.eig.push_back(fb.images[1 + i]);
    s.eig_alg.push_back(roots[i]);
    int m = 0;
    KPoly d = chik;
    while (d.eval(s.eig.back(), zero).is_zero()) {
      ++m;
      d = d.derivative();
    }
    s.mult.push_back(m);
  }

  // Jordan chains, one group of columns per eigenvalue
  std::vector<Vec> cols;
  std::vector<Block> blocks;
  EMatrix id = EMatrix::identity(3, zero, one);
  for (std::size_t e = 0; e < s.eig.size(); ++e) {
    EMatrix n = s.a - s.eig[e] * id;
    int m = s.mult[e];
    int g = 3 - static_cast<int>(rank(n));
    auto push_block = [&](std::vector<Vec> chain) {
      blocks.push_back({static_cast<int>(e), cols.size(), chain.size()});
      for (auto& v : chain) cols.push_back(std::move(v));
    };
    if (s.complex_pair && e == 2) {
      push_block({Vec{cols[1][0].conj(), cols[1][1].conj(), cols[1][2].conj()}});
      continue;
    }
    if (g == m) {
      for (auto& v : nullspace(n, one)) push_block({v});
    } else if (m == 2 || (m == 3 && g == 2)) {
      Vec v2;
      if (m == 2) {
        for (auto& v : nullspace(n * n, one))
          if (!is_zero_vec(mat_vec(n, v))) {
            v2 = v;
            break;
          }
      } else {
        v2 = first_nonkernel(n, zero);
      }
      Vec v1 = mat_vec(n, v2);
      push_block({v1, v2});
      if (m == 3) {
        for (auto& v : nullspace(n, one)) {
          EMatrix t = column_matrix({v1, v}, zero);
          if (rank(t) == 2) {
            push_block({v});
            break;
          }
        }
      }
    } else {
      Vec v3 = first_nonkernel(n * n, zero);
      Vec v2 = mat_vec(n, v3), v1 = mat_vec(n, v2);
      push_block({v1, v2, v3});
    }
  }
  if (cols.size() != 3) throw DomainError("Jordan basis construction failed");
  s.v = column_matrix(cols, zero);
  auto b = inverse(s.v, zero, one);
  if (!b) throw DomainError("Jordan basis is singular");
  s.b = *b;
  s.j = EMatrix(3, 3, zero);
  std::size_t biggest = 1;
  for (auto& bl : blocks) {
    biggest = std::max(biggest, bl.size);
    for (std::size_t t = 0; t < bl.size; ++t) {
      s.j(bl.start + t, bl.start + t) = s.eig[bl.eig];
      if (t + 1 < bl.size) s.j(bl.start + t, bl.start + t + 1) = one;
    }
  }
  s.shape = biggest == 1 ? JordanShape::Diagonal
                         : (biggest == 2 ? JordanShape::OneBlock : JordanShape::FullBlock);
  if (!(s.v * s.j * s.b == s.a)) throw DomainError("Jordan decomposition check failed");

  bool invertible = std::none_of(s.eig.begin(), s.eig.end(), [](const Elem& e) { return e.is_zero(); });
  if (!invertible) return s;
  s.entries.assign(3, std::vector<std::vector<PowerTerm>>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t jj = 0; jj < 3; ++jj) {
      auto& terms = s.entries[i][jj];
      auto add = [&](int eig, int npow, const Elem& c) {
        if (c.is_zero()) return;
        for (auto& t : terms)
          if (t.eig == eig && t.npow == npow) {
            t.coeff = t.coeff + c;
            return;
          }
        terms.push_back({eig, npow, c});
      };
      for (auto& bl : blocks) {
        Elem il = s.eig[bl.eig].inverse();
        for (std::size_t x = 0; x < bl.size; ++x)
          for (std::size_t y = x; y < bl.size; ++y) {
            Elem c = s.v(i, bl.start + x) * s.b(bl.start + y, jj);
            if (c.is_zero()) continue;
            // C(n, d) / lambda^d as a polynomial in n
            switch (y - x) {
              case 0: add(bl.eig, 0, c); break;
              case 1: add(bl.eig, 1, c * il); break;
              case 2: {
                Elem h = (c * il * il).scaled(Rational(1, 2));
                add(bl.eig, 1, -h);
                add(bl.eig, 2, h);
                break;
              }
            }
          }
      }
      terms.erase(std::remove_if(terms.begin(), terms.end(),
                                 [](const PowerTerm& t) { return t.coeff.is_zero(); }),
                  terms.end());
      std::sort(terms.begin(), terms.end(), [](const PowerTerm& x, const PowerTerm& y) {
        return x.eig != y.eig ? x.eig < y.eig : x.npow < y.npow;
      });
    }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

Polytope from_constraints(const std::vector<LinCon>& cons, std::size_t dim) {
  Polytope p;
  p.ambient = dim;
  for (auto& c : cons) {
    if (c.rel == Rel::Gt) throw DomainError("strict constraint in a closed polytope");
    p.hs.push_back({c.a, c.b, c.rel == Rel::Eq});
  }
  return p;
}

// Rows (a^T D) restricted to columns from..2.
std::vector<LinCon> transformed(const Polytope& p, const EMatrix& d) {
  std::vector<LinCon> out;
  for (auto& h : p.hs) {
    Vec a(3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i)
        if (!h.normal[i].is_zero() && !d(i, j).is_zero()) a[j] = a[j] + h.normal[i] * d(i, j);
    out.push_back({a, h.offset, h.equality ? Rel::Eq : Rel::Ge});
  }
  return out;
}

}  // namespace

Reduction reduce_singular(const EMatrix& a, const Polytope& p, const Polytope& r) {
  if (!det(a).is_zero()) throw DomainError("reduce_singular needs a singular matrix");
  Reduction red;
  std::vector<std::size_t> ranks{3};
  EMatrix pw = identity_matrix(3);
  for (int s = 1; s <= 3; ++s) {
    pw = pw * a;
    ranks.push_back(rank(pw));
  }
  int idx = 1;
  while (idx < 3 && ranks[idx] != ranks[idx + 1]) ++idx;
  red.shift = idx;
  std::size_t stable = ranks[3];
  if (stable == 0) {
    red.nilpotent = true;
    return red;
  }
  EMatrix ai = power(a, idx);
  auto ker = nullspace(ai, Elem(1));
  auto img = column_space(ai);
  std::size_t k = ker.size();
  std::vector<Vec> cols = ker;
  cols.insert(cols.end(), img.begin(), img.end());
  EMatrix d = zero_matrix(3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) d(i, j) = cols[j][i];
  EMatrix dinv = invert(d);
  EMatrix full = dinv * a * d;
  std::size_t m = 3 - k;
  red.b = zero_matrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) red.b(i, j) = full(k + i, k + j);

  // P' = b^idx * (projection of D^{-1} P)
  auto proj = fm_project(transformed(p, d), 3, k);
  if (!proj) {
    red.p_empty = true;
  } else {
    EMatrix bi = invert(power(red.b, idx));
    std::vector<LinCon> cons;
    for (auto& c : *proj) {
      Vec a2(m);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) a2[j] = a2[j] + c.a[i] * bi(i, j);
      cons.push_back({a2, c.b, c.rel});
    }
    red.p = from_constraints(cons, m);
  }
  // R' = slice of D^{-1} R at y_0..y_{k-1} = 0
  std::vector<LinCon> rc;
  for (auto& c : transformed(r, d)) {
    Vec a2(c.a.begin() + k, c.a.end());
    if (is_zero_vec(a2)) {
      int sg = -c.b.sign();
      if (c.rel == Rel::Eq ? sg != 0 : sg < 0) red.r_empty = true;
      continue;
    }
    rc.push_back({a2, c.b, c.rel});
  }
  red.r = from_constraints(rc, m);
  return red;
}

Lifted lift_dimension(const EMatrix& b, const Polytope& p, const Polytope& r) {
  std::size_t m = b.rows(), pad = 3 - m;
  Lifted out;
  out.a = identity_matrix(3);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.a(pad + i, pad + j) = b(i, j);
  auto lift = [&](const Polytope& q) {
    Polytope l;
    l.ambient = 3;
    for (std::size_t i = 0; i < pad; ++i) l.hs.push_back({unit_vec(3, i), Elem(1), true});
    for (auto& h : q.hs) {
      Vec n(pad);
      n.insert(n.end(), h.normal.begin(), h.normal.end());
      l.hs.push_back({n, h.offset, h.equality});
    }
    return l;
  };
  out.p = lift(p);
  out.r = lift(r);
  return out;
}

}  // namespace polycol
