#include "polycol/engine.hpp"

#include <algorithm>
#include <set>

#include "polycol/elimination.hpp"
#include "polycol/escape.hpp"
#include "polycol/oracle.hpp"

namespace polycol {

EngineOptions engine_options(const InstanceOptions& o) {
  EngineOptions e;
  e.emit_systems = o.emit_systems;
  e.oracle_check = o.oracle_check;
  return e;
}

namespace {

// A system in m for the exponents n = off + mult * m.
struct Pending {
  std::string key;
  System sys;
  unsigned off = 0, mult = 1;
};

bool has_negative_base(const ContextPtr& c) {
  if (!c->all_real()) return false;
  for (const auto& b : c->bases())
    if (b.sign() < 0) return true;
  return false;
}

Sentence substitute(const Sentence& s, unsigned off, unsigned mult) {
  Sentence out;
  out.ctx = s.ctx->powered(mult);
  out.nvars = s.nvars;
  for (const auto& a : s.atoms) {
    LinAtom b;
    b.rel = a.rel;
    b.c = a.c.substitute(off, mult, out.ctx);
    for (const auto& f : a.coef) b.coef.push_back(f.substitute(off, mult, out.ctx));
    out.atoms.push_back(std::move(b));
  }
  return out;
}

// Least m with off + mult * m >= start.
unsigned long first_m(unsigned long start, unsigned off, unsigned mult) {
  return start <= off ? 0 : (start - off + mult - 1) / mult;
}

Verdict sat_at(const Instance& in, unsigned long n, Verdict v) {
  EMatrix an = power(in.matrix, n);
  if (auto x = collide_with(an, in.p1, in.p2)) {
    v.kind = VerdictKind::Sat;
    v.n = n;
    v.image = mat_vec(an, *x);
    v.point = std::move(*x);
  } else {
    v.kind = VerdictKind::Unknown;
    v.trace.notes.push_back("witness n = " + std::to_string(n) + " failed oracle re-verification");
  }
  return v;
}

Verdict unsat(Verdict v, const std::string& why) {
  v.kind = VerdictKind::UnsatCertified;
  v.trace.paths[why]++;
  return v;
}

}  // namespace

Verdict run(const Instance& in, const SolveOptions& solve, const EngineOptions& eng) {
  Verdict v;
  Trace& tr = v.trace;
  const EMatrix& a = in.matrix;

  if (in.p1.empty() || in.p2.empty()) return unsat(std::move(v), "trivial");
  if (is_whole_space(in.p2)) {
    tr.paths["trivial"]++;
    return sat_at(in, 0, std::move(v));
  }

  // Small exponents straight from the oracle; this also covers n < shift
  // of a singular reduction.
  const bool whole1 = is_whole_space(in.p1);
  const bool singular = det(a).is_zero();
  unsigned long q = eng.prescan;
  if (whole1 || singular) q = std::max<unsigned long>(q, 3);
  OracleResult pre = scan(a, in.p1, in.p2, q, 1);
  if (!pre.hits.empty()) {
    tr.prescan_hit = true;
    tr.paths["prescan"]++;
    return sat_at(in, pre.hits[0].n, std::move(v));
  }
  // A^n R^3 is constant from n = 3 on.
  if (whole1) return unsat(std::move(v), "image-stable");

  EMatrix m = a;
  Polytope p1 = in.p1, p2 = in.p2;
  int shift = 0;
  if (singular) {
    Reduction red = reduce_singular(a, in.p1, in.p2);
    shift = red.shift;
    tr.shift = shift;
    // All three cases are constant in n past the shift, which the scan covered.
    if (red.nilpotent || red.p_empty || red.r_empty) return unsat(std::move(v), "singular-trivial");
    if (is_whole_space(red.r)) return unsat(std::move(v), "singular-trivial");
    Lifted l = lift_dimension(red.b, red.p, red.r);
    m = l.a;
    p1 = l.p;
    p2 = l.r;
    if (p1.empty() || p2.empty()) return unsat(std::move(v), "singular-trivial");
  }
  const unsigned long start = q + 1 - static_cast<unsigned long>(shift);

  std::optional<Spectrum> fwd, inv;
  ContextPtr cf, ci;
  auto side = [&](bool inverse) -> std::pair<const Spectrum&, const ContextPtr&> {
    if (!inverse) {
      if (!fwd) {
        fwd = spectrum(m);
        cf = spectral_context(*fwd);
      }
      return {*fwd, cf};
    }
    if (!inv) {
      inv = spectrum(invert(m));
      ci = spectral_context(*inv);
    }
    return {*inv, ci};
  };

  // Eigenvector escape: past the bound the sets are apart, below it the
  // oracle decides exactly.
  if (eng.escape_limit > 0) {
    std::optional<unsigned long> nb;
    try {
      nb = escape_bound(side(false).first, p1, p2);
    } catch (const DomainError&) {
    }
    if (nb) {
      unsigned long upto = *nb + static_cast<unsigned long>(shift);
      if (upto <= q + 1) return unsat(std::move(v), "escape");
      if (upto <= eng.escape_limit) {
        OracleResult r = scan(a, in.p1, in.p2, upto - 1, 1);
        tr.max_bound = *nb;
        if (!r.hits.empty()) {
          tr.paths["escape-scan"]++;
          return sat_at(in, r.hits[0].n, std::move(v));
        }
        return unsat(std::move(v), "escape");
      }
    }
  }

  // Boundary tasks in both orientations.
  TaskSet ts;
  try {
    ts = intersection_tasks(p1, p2);
  } catch (const DomainError& e) {
    v.kind = VerdictKind::Unknown;
    tr.notes.push_back(std::string("boundary decomposition: ") + e.what());
    return v;
  }
  tr.vertex_tasks = ts.vertex.size();
  tr.edge_face_tasks = ts.edge_face.size();
  tr.edge_poly_tasks = ts.edge_poly.size();

  std::vector<Pending> pending;
  std::set<std::string> seen;
  auto eliminate = [&](const Sentence& s, bool inverse, unsigned off, unsigned mult) {
    EliminationStats st;
    Disjunction d = fourier_motzkin(s, {}, &st, first_m(start, off, mult));
    tr.fm_branches += st.branches;
    tr.fm_pruned += st.pruned;
    std::string tag = inverse ? "inv" : "fwd";
    if (mult > 1) tag += " n=" + std::to_string(off) + "+" + std::to_string(mult) + "m";
    for (auto& sys : d) {
      ++tr.systems;
      std::string key = tag + ": " + system_str(sys);
      if (!seen.insert(key).second) continue;
      if (eng.emit_systems) tr.emitted.push_back(key);
      pending.push_back({std::move(key), std::move(sys), off, mult});
    }
  };
  // Oscillating real bases flip coefficient signs with the parity of n, and
  // elimination would split on every one of them; eliminate per parity.
  auto add = [&](const Sentence& s, bool inverse) {
    if (!has_negative_base(s.ctx)) return eliminate(s, inverse, 0, 1);
    for (unsigned off = 0; off < 2; ++off) eliminate(substitute(s, off, 2), inverse, off, 2);
  };
  try {
    for (const auto& t : ts.vertex) {
      auto [s, c] = side(t.inverse);
      add(build_point_sentence(t.point, *t.target, s, c), t.inverse);
    }
    for (const auto& t : ts.edge_face) {
      auto [s, c] = side(t.inverse);
      add(build_sentence(t.edge, t.cell, s, c), t.inverse);
    }
    for (const auto& t : ts.edge_poly) {
      auto [s, c] = side(t.inverse);
      add(build_edge_polytope_sentence(t.edge, *t.target, s, c), t.inverse);
    }
  } catch (const DomainError& e) {
    v.kind = VerdictKind::Unknown;
    tr.notes.push_back(std::string("sentence construction: ") + e.what());
    return v;
  }
  tr.distinct_systems = pending.size();

  SolveReport acc;
  acc.kind = VerdictKind::UnsatCertified;
  std::set<std::string> cond;
  for (const auto& p : pending) {
    SolveReport r;
    SolveOptions opt = solve;
    opt.start = first_m(start, p.off, p.mult);
    try {
      r = decide_system(p.sys, opt);
      if (r.kind == VerdictKind::Sat) r.n = p.off + p.mult * r.n;
      r.bound = p.off + p.mult * r.bound;
    } catch (const DomainError& e) {
      r.kind = VerdictKind::Unknown;
      r.path = "error";
      r.notes.push_back(e.what());
    }
    tr.paths[r.path]++;
    tr.max_bound = std::max(tr.max_bound, r.bound);
    if (r.kind == VerdictKind::UnsatConditional) cond.insert(r.baker_atom);
    if (r.kind == VerdictKind::Unknown)
      for (const auto& n : r.notes) tr.notes.push_back(n);
    acc = join(acc, r);
    // Later systems cannot improve on a witness at the very first exponent.
    if (acc.kind == VerdictKind::Sat && acc.n == start) break;
  }
  tr.conditional_atoms.assign(cond.begin(), cond.end());
  std::sort(tr.notes.begin(), tr.notes.end());
  tr.notes.erase(std::unique(tr.notes.begin(), tr.notes.end()), tr.notes.end());

  if (acc.kind == VerdictKind::Sat) return sat_at(in, acc.n + static_cast<unsigned long>(shift), std::move(v));
  v.kind = acc.kind;
  if (eng.oracle_check && v.kind != VerdictKind::Unknown) {
    // Cheap cross-check just past the prescan window.
    unsigned long upto = std::min<unsigned long>(std::max<unsigned long>(10 * (tr.max_bound + shift), q), 200);
    if (upto > q) {
      OracleResult chk = scan(a, in.p1, in.p2, upto, 1);
      if (!chk.hits.empty()) {
        v.kind = VerdictKind::Unknown;
        tr.notes.push_back("oracle found n = " + std::to_string(chk.hits[0].n) + " against an UNSAT result");
      }
    }
  }
  return v;
}

Verdict run(const Instance& in) {
  SolveOptions s;
  s.baker_exponent = in.options.baker_exponent;
  s.search_cap = in.options.max_witness;
  return run(in, s, engine_options(in.options));
}

}  // namespace polycol
