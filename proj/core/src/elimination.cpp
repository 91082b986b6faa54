#include "polycol/elimination.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polycol/expsolve.hpp"

namespace polycol {

ContextPtr spectral_context(const Spectrum& s) {
  std::vector<std::string> names;
  if (s.complex_pair) {
    names = {"rho", "alpha", "alpha~"};
  } else {
    for (std::size_t i = 0; i < s.eig.size(); ++i) names.push_back("l" + std::to_string(i + 1));
  }
  return ExpContext::create(s.field, s.eig, names);
}

std::vector<ExpPoly> orbit(const Spectrum& s, const ContextPtr& ctx, const Vec& v) {
  Vec w = s.to_field(v);
  const std::size_t dim = s.a.rows();
  std::vector<ExpPoly> out(dim, ExpPoly(ctx));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (w[j].is_zero()) continue;
      for (const auto& t : s.entries[i][j]) {
        std::vector<int> e(ctx->bases().size(), 0);
        e[t.eig] = 1;
        out[i] = out[i] + ExpPoly::term(ctx, ctx->index(e), t.npow, t.coeff * w[j]);
      }
    }
  return out;
}

std::optional<SymCoeff> sym_coeff(const ExpPoly& f) {
  const auto& ctx = f.context();
  if (!ctx || ctx->bases().size() != 3) return std::nullopt;
  const Elem zero(ctx->field(), Rational(0));
  SymCoeff c{zero, zero, zero};
  Elem abar = zero;
  for (const auto& [k, v] : f.terms()) {
    if (k.second != 0) return std::nullopt;
    const auto& e = ctx->mono(k.first).exp;
    if (e == std::vector<int>{0, 0, 0}) c.c = v;
    else if (e == std::vector<int>{1, 0, 0}) c.b = v;
    else if (e == std::vector<int>{0, 1, 0}) c.a = v;
    else if (e == std::vector<int>{0, 0, 1}) abar = v;
    else return std::nullopt;
  }
  if (!(abar == c.a.conj())) return std::nullopt;
  return c;
}

ExpPoly from_sym(const ContextPtr& ctx, const SymCoeff& c) {
  ExpPoly f = ExpPoly::constant(ctx, c.c);
  f = f + ExpPoly::term(ctx, ctx->index({1, 0, 0}), 0, c.b);
  f = f + ExpPoly::term(ctx, ctx->index({0, 1, 0}), 0, c.a);
  f = f + ExpPoly::term(ctx, ctx->index({0, 0, 1}), 0, c.a.conj());
  return f;
}

std::vector<SymCoeff> entry_coefficients(const Spectrum& s, const Vec& v) {
  if (!s.complex_pair) throw DomainError("entry_coefficients needs a complex eigenvalue pair");
  auto ctx = spectral_context(s);
  std::vector<SymCoeff> out;
  for (const auto& f : orbit(s, ctx, v)) {
    auto c = sym_coeff(f);
    if (!c) throw DomainError("orbit coordinate without conjugate structure");
    out.push_back(*c);
  }
  return out;
}

namespace {

ExpPoly cst(const ContextPtr& ctx, const Elem& c) { return ExpPoly::constant(ctx, c); }

LinAtom make_row(const ContextPtr& ctx, std::size_t nv) {
  LinAtom r;
  r.coef.assign(nv, ExpPoly(ctx));
  r.c = ExpPoly(ctx);
  return r;
}

// x_var >= 0, or upper - x_var >= 0 when upper is set.
LinAtom bound_row(const ContextPtr& ctx, std::size_t nv, std::size_t var, bool upper) {
  LinAtom r = make_row(ctx, nv);
  r.coef[var] = cst(ctx, Elem(upper ? -1 : 1));
  if (upper) r.c = cst(ctx, Elem(1));
  return r;
}

std::vector<LinAtom> edge_domain(const Edge& e, const ContextPtr& ctx, std::size_t nv) {
  std::vector<LinAtom> out{bound_row(ctx, nv, 0, false)};
  if (e.bounded) out.push_back(bound_row(ctx, nv, 0, true));
  return out;
}

ARel to_arel(Rel r) {
  switch (r) {
    case Rel::Ge: return ARel::Ge;
    case Rel::Gt: return ARel::Gt;
    case Rel::Eq: return ARel::Eq;
  }
  return ARel::Ge;
}

}  // namespace

Sentence build_sentence(const Edge& e, const Cell& cell, const Spectrum& s, const ContextPtr& ctx) {
  Sentence out;
  out.ctx = ctx;
  out.nvars = 3;
  auto mu = orbit(s, ctx, e.u);
  auto mv = orbit(s, ctx, e.v);
  Vec cu = s.to_field(cell.u), cv = s.to_field(cell.v), cw = s.to_field(cell.w);
  out.atoms = edge_domain(e, ctx, 3);
  out.atoms.push_back(bound_row(ctx, 3, 1, false));
  out.atoms.push_back(bound_row(ctx, 3, 2, false));
  if (cell.kind == CellKind::Triangle) {
    LinAtom r = make_row(ctx, 3);
    r.coef[1] = cst(ctx, Elem(-1));
    r.coef[2] = cst(ctx, Elem(-1));
    r.c = cst(ctx, Elem(1));
    out.atoms.push_back(r);
  } else if (cell.kind == CellKind::Strip) {
    out.atoms.push_back(bound_row(ctx, 3, 2, true));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    LinAtom r = make_row(ctx, 3);
    r.rel = Rel::Eq;
    r.coef[0] = mv[i];
    r.coef[1] = cst(ctx, -cv[i]);
    r.coef[2] = cst(ctx, -cw[i]);
    r.c = mu[i] - cst(ctx, cu[i]);
    out.atoms.push_back(r);
  }
  return out;
}

Sentence build_edge_polytope_sentence(const Edge& e, const Polytope& p, const Spectrum& s,
                                      const ContextPtr& ctx) {
  Sentence out;
  out.ctx = ctx;
  out.nvars = 1;
  auto mu = orbit(s, ctx, e.u);
  auto mv = orbit(s, ctx, e.v);
  out.atoms = edge_domain(e, ctx, 1);
  for (const auto& h : p.hs) {
    LinAtom r = make_row(ctx, 1);
    r.rel = h.equality ? Rel::Eq : Rel::Ge;
    Vec nrm = s.to_field(h.normal);
    for (std::size_t i = 0; i < nrm.size(); ++i) {
      r.coef[0] = r.coef[0] + nrm[i] * mv[i];
      r.c = r.c + nrm[i] * mu[i];
    }
    r.c = r.c - cst(ctx, s.to_field(h.offset));
    out.atoms.push_back(r);
  }
  return out;
}

Sentence build_point_sentence(const Vec& x, const Polytope& p, const Spectrum& s,
                              const ContextPtr& ctx) {
  Sentence out;
  out.ctx = ctx;
  out.nvars = 0;
  auto mx = orbit(s, ctx, x);
  for (const auto& h : p.hs) {
    LinAtom r;
    r.rel = h.equality ? Rel::Eq : Rel::Ge;
    r.c = ExpPoly(ctx);
    Vec nrm = s.to_field(h.normal);
    for (std::size_t i = 0; i < nrm.size(); ++i) r.c = r.c + nrm[i] * mx[i];
    r.c = r.c - cst(ctx, s.to_field(h.offset));
    out.atoms.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Branch {
  std::vector<LinAtom> rows;
  std::vector<Atom> guards;
};

bool all_zero(const LinAtom& r) {
  for (const auto& c : r.coef)
    if (!c.is_zero()) return false;
  return true;
}

// Sign of h implied by the branch's strict guards or by being constant.
std::optional<int> known_sign(const ExpPoly& h, const std::vector<Atom>& guards) {
  if (h.is_zero()) return 0;
  if (h.is_constant()) return h.constant_value().sign();
  for (const auto& g : guards) {
    if (g.rel != ARel::Gt) continue;
    if (auto q = g.f.proportional(h)) return *q;
  }
  return std::nullopt;
}

class Eliminator {
 public:
  Eliminator(std::vector<std::size_t> order, EliminationStats* st, unsigned long from)
      : order_(std::move(order)), st_(st), from_(from) {}
  Disjunction out;

  std::optional<int> known_sign(const ExpPoly& h, const std::vector<Atom>& guards) {
    if (auto s = polycol::known_sign(h, guards)) return s;
    auto it = tail_.find(h);
    if (it == tail_.end()) it = tail_.emplace(h, settled_sign(h, from_)).first;
    return it->second;
  }

  void run(Branch b, std::size_t step) {
    if (st_) ++st_->branches;
    if (!settle(b)) {
      if (st_) ++st_->pruned;
      return;
    }
    if (step == order_.size()) {
      System sys;
      sys.atoms = b.guards;
      if (auto s = simplify(sys)) out.push_back(std::move(*s));
      else if (st_) ++st_->pruned;
      return;
    }
    const std::size_t k = order_[step];

    // Equalities first: constant pivots substitute directly.
    int sym_eq = -1;
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
      const auto& r = b.rows[i];
      if (r.rel != Rel::Eq || r.coef[k].is_zero()) continue;
      if (r.coef[k].is_constant()) {
        substitute_const(b, i, k);
        run(std::move(b), step + 1);
        return;
      }
      if (sym_eq < 0) sym_eq = static_cast<int>(i);
    }
    if (sym_eq >= 0) {
      const ExpPoly g = b.rows[sym_eq].coef[k];
      if (auto t = known_sign(g, {}); t && *t != 0) {
        substitute_sym(b, static_cast<std::size_t>(sym_eq), k, *t);
        run(std::move(b), step + 1);
        return;
      }
      for (int sg : {1, -1}) {
        Branch c = b;
        c.guards.push_back({sg > 0 ? g : -g, ARel::Gt});
        substitute_sym(c, static_cast<std::size_t>(sym_eq), k, sg);
        run(std::move(c), step + 1);
      }
      Branch z = std::move(b);
      z.guards.push_back({g, ARel::Eq});
      zero_class(z, g, k);
      run(std::move(z), step);
      return;
    }

    // Inequalities: every coefficient needs a known sign.
    for (const auto& r : b.rows) {
      const ExpPoly& h = r.coef[k];
      if (known_sign(h, b.guards)) continue;
      for (int sg : {1, -1}) {
        Branch c = b;
        c.guards.push_back({sg > 0 ? h : -h, ARel::Gt});
        run(std::move(c), step);
      }
      Branch z = std::move(b);
      z.guards.push_back({h, ARel::Eq});
      zero_class(z, h, k);
      run(std::move(z), step);
      return;
    }
    combine(b, k);
    run(std::move(b), step + 1);
  }

 private:
  std::vector<std::size_t> order_;
  EliminationStats* st_;
  unsigned long from_;
  std::map<ExpPoly, std::optional<int>> tail_;

  // Moves variable-free rows into the guards; false if one is constant false.
  static bool settle(Branch& b) {
    std::vector<LinAtom> keep;
    for (auto& r : b.rows) {
      if (!all_zero(r)) {
        keep.push_back(std::move(r));
        continue;
      }
      Atom a{r.c, to_arel(r.rel)};
      if (a.f.is_constant()) {
        if (!holds(a.f.is_zero() ? 0 : a.f.constant_value().sign(), a.rel)) return false;
        continue;
      }
      b.guards.push_back(std::move(a));
    }
    b.rows = std::move(keep);
    for (const auto& g : b.guards)
      if (g.f.is_constant() && !holds(g.f.is_zero() ? 0 : g.f.constant_value().sign(), g.rel))
        return false;
    return true;
  }

  static void substitute_const(Branch& b, std::size_t piv, std::size_t k) {
    LinAtom e = b.rows[piv];
    b.rows.erase(b.rows.begin() + static_cast<long>(piv));
    Elem inv = e.coef[k].constant_value().inverse();
    for (auto& r : b.rows) {
      if (r.coef[k].is_zero()) continue;
      ExpPoly m = inv * r.coef[k];
      for (std::size_t v = 0; v < r.coef.size(); ++v) r.coef[v] = r.coef[v] - m * e.coef[v];
      r.c = r.c - m * e.c;
    }
  }

  // r := s*(g r - r_k e) with s the sign of g, so inequalities keep direction.
  static void substitute_sym(Branch& b, std::size_t piv, std::size_t k, int sg) {
    LinAtom e = b.rows[piv];
    b.rows.erase(b.rows.begin() + static_cast<long>(piv));
    const ExpPoly& g = e.coef[k];
    for (auto& r : b.rows) {
      if (r.coef[k].is_zero()) continue;
      ExpPoly m = r.coef[k];
      for (std::size_t v = 0; v < r.coef.size(); ++v) {
        r.coef[v] = g * r.coef[v] - m * e.coef[v];
        if (sg < 0) r.coef[v] = -r.coef[v];
      }
      r.c = g * r.c - m * e.c;
      if (sg < 0) r.c = -r.c;
    }
  }

  // Under the guard h = 0, every coefficient that is a multiple of h vanishes.
  static void zero_class(Branch& b, const ExpPoly& h, std::size_t k) {
    for (auto& r : b.rows)
      if (!r.coef[k].is_zero() && h.proportional(r.coef[k])) r.coef[k] = ExpPoly(h.context());
  }

  void combine(Branch& b, std::size_t k) {
    std::vector<LinAtom> zero, lower, upper;
    for (auto& r : b.rows) {
      int s = *known_sign(r.coef[k], b.guards);
      if (s == 0) {
        r.coef[k] = ExpPoly(r.c.context());
        zero.push_back(std::move(r));
      } else {
        (s > 0 ? lower : upper).push_back(std::move(r));
      }
    }
    for (const auto& p : lower)
      for (const auto& q : upper) {
        ExpPoly wp = -q.coef[k];  // positive
        const ExpPoly& wq = p.coef[k];
        LinAtom r;
        r.coef.resize(p.coef.size());
        for (std::size_t v = 0; v < p.coef.size(); ++v) r.coef[v] = wp * p.coef[v] + wq * q.coef[v];
        r.coef[k] = ExpPoly(p.c.context());
        r.c = wp * p.c + wq * q.c;
        r.rel = (p.rel == Rel::Gt || q.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
        zero.push_back(std::move(r));
      }
    b.rows = std::move(zero);
  }
};

}  // namespace

Disjunction fourier_motzkin(const Sentence& s, std::vector<std::size_t> order, EliminationStats* stats,
                            unsigned long from) {
  if (order.empty())
    for (std::size_t v = s.nvars; v-- > 0;) order.push_back(v);
  for (const auto& a : s.atoms)
    if (a.coef.size() != s.nvars) throw DomainError("row arity does not match the sentence");
  Eliminator el(std::move(order), stats, from);
  Branch b;
  b.rows = s.atoms;
  el.run(std::move(b), 0);
  return std::move(el.out);
}

Disjunction build_real_sentence(const Edge& e, const Cell& cell, const Spectrum& s,
                                const ContextPtr& ctx) {
  if (s.complex_pair) throw DomainError("real sentence needs a real spectrum");
  return fourier_motzkin(build_sentence(e, cell, s, ctx));
}

// ---------------------------------------------------------------------------

namespace {
int rank(ARel r) { return r == ARel::Eq ? 2 : r == ARel::Gt ? 1 : 0; }
}  // namespace

std::optional<System> simplify(const System& s) {
  std::vector<Atom> out;
  for (const auto& a : s.atoms) {
    if (a.f.is_constant()) {
      if (!holds(a.f.is_zero() ? 0 : a.f.constant_value().sign(), a.rel)) return std::nullopt;
      continue;
    }
    bool absorbed = false;
    for (auto& b : out) {
      auto q = b.f.proportional(a.f);
      if (!q) continue;
      if (*q > 0) {
        // Same direction: keep the stronger relation; = and > clash.
        if (rank(a.rel) + rank(b.rel) == 3) return std::nullopt;
        if (rank(a.rel) > rank(b.rel)) b.rel = a.rel;
        absorbed = true;
        break;
      }
      // Opposite directions: a = q b with q < 0.
      if (a.rel == ARel::Gt || b.rel == ARel::Gt) return std::nullopt;
      // Both non-strict, or one equality: together they force b = 0.
      b.rel = ARel::Eq;
      absorbed = true;
      break;
    }
    if (!absorbed) out.push_back(a);
  }
  std::stable_sort(out.begin(), out.end(), [](const Atom& x, const Atom& y) {
    if (x.f < y.f) return true;
    if (y.f < x.f) return false;
    return rank(x.rel) < rank(y.rel);
  });
  return System{out};
}

bool system_holds(const System& s, unsigned long n) {
  for (const auto& a : s.atoms)
    if (!holds(a.f.sign_at(n), a.rel)) return false;
  return true;
}

bool sentence_holds(const Sentence& s, unsigned long n) {
  std::vector<LinCon> sys;
  for (const auto& a : s.atoms) {
    LinCon c;
    for (const auto& f : a.coef) c.a.push_back(f.eval(n));
    c.b = -a.c.eval(n);
    c.rel = a.rel;
    if (s.nvars == 0) {
      int sg = (-c.b).sign();
      bool ok = c.rel == Rel::Eq ? sg == 0 : c.rel == Rel::Gt ? sg > 0 : sg >= 0;
      if (!ok) return false;
      continue;
    }
    sys.push_back(std::move(c));
  }
  if (s.nvars == 0) return true;
  return fm_feasible(sys, s.nvars).has_value();
}

std::string system_str(const System& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.atoms.size(); ++i) {
    if (i) os << " and ";
    os << s.atoms[i].f.str() << " " << rel_str(s.atoms[i].rel) << " 0";
  }
  if (s.atoms.empty()) os << "true";
  return os.str();
}

}  // namespace polycol
