#include "polycol/expsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "polycol/elimination.hpp"

namespace polycol {

namespace {

constexpr unsigned long kNoBound = std::numeric_limits<unsigned long>::max();
constexpr mpfr_prec_t kPrec = 128;

int kind_rank(VerdictKind k) {
  switch (k) {
    case VerdictKind::UnsatCertified: return 0;
    case VerdictKind::UnsatConditional: return 1;
    case VerdictKind::Unknown: return 2;
    case VerdictKind::Sat: return 3;
  }
  return 0;
}

SolveReport sat(unsigned long n, std::string path) {
  SolveReport r;
  r.kind = VerdictKind::Sat;
  r.n = n;
  r.path = std::move(path);
  return r;
}

SolveReport unsat(unsigned long bound, std::string path) {
  SolveReport r;
  r.kind = VerdictKind::UnsatCertified;
  r.bound = bound;
  r.path = std::move(path);
  return r;
}

SolveReport unknown(std::string path, std::string note) {
  SolveReport r;
  r.kind = VerdictKind::Unknown;
  r.path = std::move(path);
  r.notes.push_back(std::move(note));
  return r;
}

unsigned long ceil_div(unsigned long a, unsigned long b) { return (a + b - 1) / b; }

// First m with p + q m >= start.
unsigned long class_start(unsigned long start, unsigned long p, unsigned long q) {
  return start > p ? ceil_div(start - p, q) : 0;
}

SolveReport remap(SolveReport r, unsigned long p, unsigned long q) {
  if (r.kind == VerdictKind::Sat) r.n = p + q * r.n;
  if (r.bound != kNoBound && r.bound) r.bound = p + q * r.bound;
  return r;
}

System substitute(const System& s, unsigned p, unsigned q, const ContextPtr& target) {
  System out;
  for (const auto& a : s.atoms) out.atoms.push_back({a.f.substitute(p, q, target), a.rel});
  return out;
}

ContextPtr context_of(const System& s) { return s.atoms.empty() ? nullptr : s.atoms[0].f.context(); }

Interval upper_abs(const Elem& e) {
  CInterval c = e.enclosure(kPrec);
  return c.abs();
}

}  // namespace

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Sat: return "SAT";
    case VerdictKind::UnsatCertified: return "UNSAT_certified";
    case VerdictKind::UnsatConditional: return "UNSAT_conditional";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "?";
}

SolveReport join(const SolveReport& a, const SolveReport& b) {
  if (a.kind == VerdictKind::Sat && b.kind == VerdictKind::Sat) return a.n <= b.n ? a : b;
  SolveReport r = kind_rank(a.kind) >= kind_rank(b.kind) ? a : b;
  if (r.kind != VerdictKind::Sat) {
    r.bound = std::max(a.bound, b.bound);
    if (r.baker_atom.empty()) r.baker_atom = a.baker_atom.empty() ? b.baker_atom : a.baker_atom;
  }
  return r;
}

// ---------------------------------------------------------------------------

std::optional<unsigned long> decay_threshold(const std::vector<DecayTerm>& terms, unsigned long floor) {
  unsigned long t = std::max(floor, 1UL);
  std::vector<Interval> logs;
  for (const auto& d : terms) {
    if (d.base.hi_d() > 1 || (d.base.hi_d() >= 1 && d.pow >= 0)) {
      // Only exact 1 with negative power is allowed at the unit base.
      if (!(d.base.lower() == 1 && d.base.upper() == 1 && d.pow < 0)) return std::nullopt;
    }
    Interval lg = d.base.upper() == 1 ? Interval(0, kPrec) : log(d.base);
    logs.push_back(lg);
    if (d.pow > 0) {
      // n^p b^n decreases once n >= p / ln(1/b).
      double rate = -lg.hi_d();
      if (rate <= 0) return std::nullopt;
      double need = std::ceil(d.pow / rate);
      if (need > 4e18) return std::nullopt;
      t = std::max(t, static_cast<unsigned long>(need));
    }
  }
  auto total = [&](unsigned long n) {
    Interval acc(0, kPrec);
    Interval ln_n = log(Interval(static_cast<long>(n), kPrec));
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& d = terms[i];
      Interval e = Interval(d.pow, kPrec) * ln_n + Interval(static_cast<long>(n), kPrec) * logs[i];
      acc += abs(d.coef) * exp(e);
    }
    return acc;
  };
  unsigned long hi = t;
  while (!(total(hi).hi_d() < 1)) {
    if (hi > (1UL << 61)) return std::nullopt;
    hi *= 2;
  }
  unsigned long lo = t;
  if (hi == t) return t;
  // Smallest n in (lo, hi] with total < 1; the sum is nonincreasing here.
  unsigned long a = std::max(t, hi / 2), b = hi;
  if (total(a).hi_d() < 1) return a;
  while (b - a > 1) {
    unsigned long m = a + (b - a) / 2;
    if (total(m).hi_d() < 1) b = m;
    else a = m;
  }
  (void)lo;
  return b;
}

EventualSign eventual_sign(const ExpPoly& f) {
  const auto& ctx = f.context();
  EventualSign es;
  if (f.is_zero()) return es;
  // Dominant term: largest base, then largest power of n.
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it) {
    int c = ctx->mono(it->first.first).value.compare(ctx->mono(best->first.first).value);
    if (c > 0 || (c == 0 && it->first.second > best->first.second)) best = it;
  }
  const Elem& vl = ctx->mono(best->first.first).value;
  const Elem& cl = best->second;
  es.sign = cl.sign();
  std::vector<DecayTerm> terms;
  // Distinct monomials have distinct values, so only the same monomial
  // gives ratio exactly 1.
  Interval cle = cl.enclosure(kPrec).abs();
  for (const auto& [k, c] : f.terms()) {
    if (k == best->first) continue;
    DecayTerm d;
    d.coef = upper_abs(c) / cle;
    d.pow = k.second - best->first.second;
    if (k.first == best->first.first) {
      d.base = Interval(1, kPrec);
    } else {
      for (mpfr_prec_t p = kPrec;; p *= 2) {
        d.base = ctx->mono(k.first).value.enclosure(p).re / vl.enclosure(p).re;
        if (d.base.upper() < 1) break;
        if (p > 8192) throw DomainError("dominant base not separated");
      }
    }
    terms.push_back(std::move(d));
  }
  if (terms.empty()) {
    es.from = best->first.second > 0 ? 1 : 0;
    return es;
  }
  auto t = decay_threshold(terms, 1);
  es.from = t ? *t : kNoBound;
  return es;
}

SolveReport bounded_search(const System& sys, unsigned long from, unsigned long to,
                           const SolveOptions& opt) {
  if (to <= from) return unsat(to, "bounded");
  if (to - from > opt.search_cap)
    return unknown("bounded", "search range " + std::to_string(to - from) + " exceeds the cap");
  auto ctx = context_of(sys);
  if (!ctx) return sat(from, "bounded");
  std::vector<const Atom*> order;
  for (const auto& a : sys.atoms) order.push_back(&a);
  SeqEvaluator ev(ctx, from);
  for (unsigned long n = from; n < to; ++n, ev.advance()) {
    bool ok = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (ev.holds(*order[i])) continue;
      ok = false;
      if (i) std::rotate(order.begin(), order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(i) + 1);
      break;
    }
    if (ok) return sat(n, "bounded");
  }
  return unsat(to, "bounded");
}

// ---------------------------------------------------------------------------

SolveReport decide_real(const System& sys, const SolveOptions& opt) {
  auto ctx = context_of(sys);
  if (!ctx) return sat(opt.start, "real");
  bool negative = false;
  for (const auto& b : ctx->bases()) {
    int s = b.sign();
    if (s == 0) throw DomainError("zero exponential base");
    if (s < 0) negative = true;
  }
  if (negative) {
    auto target = ctx->powered(2);
    SolveReport acc;
    bool first = true;
    for (unsigned p = 0; p < 2; ++p) {
      auto sub = simplify(substitute(sys, p, 2, target));
      SolveReport r = unsat(0, "real-parity");
      if (sub) {
        SolveOptions o = opt;
        o.start = class_start(opt.start, p, 2);
        r = remap(decide_real(*sub, o), p, 2);
      }
      acc = first ? r : join(acc, r);
      first = false;
    }
    return acc;
  }

  bool all_true = true;
  unsigned long true_from = 0, false_from = kNoBound;
  for (const auto& a : sys.atoms) {
    EventualSign es = eventual_sign(a.f);
    bool ev_true = a.rel != ARel::Eq && es.sign > 0;
    if (ev_true) {
      true_from = std::max(true_from, es.from);
    } else {
      all_true = false;
      false_from = std::min(false_from, es.from);
    }
  }
  if (all_true) {
    if (true_from == kNoBound) return unknown("real", "no crossover bound");
    unsigned long hi = std::max(opt.start, true_from);
    if (hi - opt.start <= opt.search_cap) {
      SolveReport r = bounded_search(sys, opt.start, hi + 1, opt);
      r.path = "real";
      r.bound = hi;
      return r;
    }
    if (system_holds(sys, hi)) {
      SolveReport r = sat(hi, "real");
      r.notes.push_back("witness past the search cap; smaller ones not ruled out");
      return r;
    }
    return unknown("real", "eventual witness failed exact check");
  }
  if (false_from == kNoBound) return unknown("real", "no crossover bound");
  SolveReport r = bounded_search(sys, opt.start, false_from, opt);
  r.path = "real";
  r.bound = false_from;
  return r;
}

// ---------------------------------------------------------------------------

namespace {
std::mutex rou_mu;
std::map<ContextPtr, std::optional<unsigned>> rou_cache;
}  // namespace

std::optional<unsigned> rou_period(const ContextPtr& ctx) {
  if (ctx->bases().size() != 3 || ctx->all_real()) return std::nullopt;
  {
    std::lock_guard<std::mutex> lk(rou_mu);
    auto it = rou_cache.find(ctx);
    if (it != rou_cache.end()) return it->second;
  }
  const Elem& al = ctx->bases()[1];
  Elem w = al / ctx->bases()[2];
  std::optional<unsigned> out;
  if (auto e = is_root_of_unity(w.to_algebraic())) {
    Elem p = al.pow(*e);
    out = p.sign() > 0 ? *e : 2 * *e;
  }
  std::lock_guard<std::mutex> lk(rou_mu);
  rou_cache[ctx] = out;
  return out;
}

SolveReport decide_rou(const System& sys, unsigned d, const SolveOptions& opt) {
  auto ctx = context_of(sys);
  if (!ctx) return sat(opt.start, "rou");
  auto target = ctx->powered(d);
  if (!target->all_real()) throw DomainError("period does not make the bases real");
  SolveReport acc;
  bool first = true;
  for (unsigned k = 0; k < d; ++k) {
    auto sub = simplify(substitute(sys, k, d, target));
    SolveReport r = unsat(0, "rou");
    if (sub) {
      SolveOptions o = opt;
      o.start = class_start(opt.start, k, d);
      r = remap(decide_real(*sub, o), k, d);
    }
    acc = first ? r : join(acc, r);
    first = false;
  }
  acc.path = "rou(" + std::to_string(d) + ")/" + acc.path;
  return acc;
}

// ---------------------------------------------------------------------------

CircleEnclosure NormalizedAtom::dominant(mpfr_prec_t prec) const {
  CInterval ea = a.enclosure(prec), eb = b.enclosure(prec), ec = c.enclosure(prec);
  return {ea.re, ea.im, eb.re, eb.im, ec.re};
}

namespace {
CInterval scaled_sum(const NormalizedAtom& at, const std::vector<std::pair<int, Elem>>& terms,
                     unsigned long n, mpfr_prec_t prec) {
  mpfr_prec_t p = prec + 32;
  for (unsigned long m = n; m; m >>= 1) ++p;
  Interval r = sqrt(at.level.enclosure(p).re);
  CInterval acc(Interval(0, p), Interval(0, p));
  for (const auto& [mono, c] : terms) {
    CInterval v = at.ctx->mono(mono).value.enclosure(p);
    CInterval q(v.re / r, v.im / r);
    acc += c.enclosure(p) * pow_ui(q, n);
  }
  return acc;
}
}  // namespace

CInterval NormalizedAtom::dominant_at(unsigned long n, mpfr_prec_t prec) const {
  return scaled_sum(*this, top, n, prec);
}

CInterval NormalizedAtom::residual_at(unsigned long n, mpfr_prec_t prec) const {
  return scaled_sum(*this, residual, n, prec);
}

NormalizedAtom normalize(const Atom& at) {
  NormalizedAtom na;
  na.ctx = at.f.context();
  na.rel = at.rel;
  const auto& ctx = na.ctx;
  if (ctx->bases().size() != 3) throw DomainError("normalize needs bases (rho, alpha, conj alpha)");
  if (at.f.is_zero()) throw DomainError("normalize of the zero function");
  Elem zero(ctx->field(), Rational(0));
  na.a = na.b = na.c = zero;
  std::vector<std::pair<int, Elem>> mods;  // |m|^2 per term
  bool have = false;
  for (const auto& [k, c] : at.f.terms()) {
    if (k.second != 0) throw DomainError("polynomial factor in a complex-spectrum atom");
    const Elem& v = ctx->mono(k.first).value;
    Elem m2 = v * v.conj();
    if (!have || m2.compare(na.level) > 0) na.level = m2;
    have = true;
    mods.push_back({k.first, m2});
  }
  Interval scale(0, kPrec);
  Interval base(0, kPrec);
  std::size_t i = 0;
  for (const auto& [k, c] : at.f.terms()) {
    const Elem& m2 = mods[i++].second;
    if (m2 == na.level) {
      const auto& e = ctx->mono(k.first).exp;
      int kk = e[1] - e[2];
      na.top.push_back({k.first, c});
      if (kk == 2) na.a = na.a + c;
      else if (kk == 1) na.b = na.b + c;
      else if (kk == 0) na.c = na.c + c;
      continue;
    }
    na.residual.push_back({k.first, c});
    scale += upper_abs(c);
    Interval qe;
    for (mpfr_prec_t p = kPrec;; p *= 2) {
      qe = sqrt(m2.enclosure(p).re / na.level.enclosure(p).re);
      if (qe.hi_d() < 1 && qe.upper() < 1) break;
      if (p > 4096) throw DomainError("residual modulus not separated from 1");
    }
    base = max(base, qe);
  }
  na.res_scale = scale;
  na.res_base = base;
  return na;
}

Decay residual_decay(const NormalizedAtom& at) {
  Decay d;
  if (at.residual.empty()) {
    d.eps = Rational(1, 2);
    return d;
  }
  Rational beta = at.res_base.upper();
  d.eps = (1 - beta) / 2;
  Interval ratio = at.res_base / Interval(1 - d.eps, kPrec);
  auto t = decay_threshold({{at.res_scale, 0, ratio}}, 0);
  d.n3 = t ? *t : kNoBound;
  return d;
}

namespace {

struct Leaf {
  Rational lo, hi;
  bool flipped;
  int depth;
};

// Lower bound on min |f| over the circle minus the given chord discs; 0 if
// the subdivision fails within its budget.
Rational circle_min_abs(const CircleEnclosure& f, const std::vector<std::pair<CInterval, Rational>>& holes) {
  std::vector<Leaf> stack{{-1, 1, false, 0}, {-1, 1, true, 0}};
  Rational best = -1;
  std::size_t work = 0;
  while (!stack.empty()) {
    Leaf l = stack.back();
    stack.pop_back();
    if (++work > 200000) return 0;
    Interval t(l.lo, l.hi, kPrec);
    Interval one(1, kPrec), t2 = sqr(t), den = one + t2;
    Interval x = (one - t2) / den, y = Interval(2, kPrec) * t / den;
    if (l.flipped) x = -x, y = -y;
    bool skip = false;
    for (const auto& [z, r] : holes) {
      Interval d2 = sqr(x - z.re) + sqr(y - z.im);
      if (d2.upper() < r * r) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    Interval v = f.eval_xy(x, y);
    if (!v.contains_zero()) {
      Rational lb = abs(v).lower();
      if (best < 0 || lb < best) best = lb;
      continue;
    }
    if (l.depth > 40) return 0;
    Rational mid = (l.lo + l.hi) / 2;
    stack.push_back({l.lo, mid, l.flipped, l.depth + 1});
    stack.push_back({mid, l.hi, l.flipped, l.depth + 1});
  }
  return best < 0 ? Rational(1) : best;
}

unsigned long saturating_pow(unsigned long k, unsigned d) {
  unsigned long r = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (r > (1UL << 40) / std::max(k, 1UL)) return 1UL << 40;
    r *= k;
  }
  return r;
}

}  // namespace

BoundReport bound_N(const NormalizedAtom& at, const SolveOptions& opt) {
  BoundReport br;
  const auto& ctx = at.ctx;
  Elem w = ctx->bases()[1] / ctx->bases()[2];
  AlgebraicNumber wa = w.to_algebraic();
  if (is_root_of_unity(wa)) throw DomainError("bound_N called for a root-of-unity base");

  CircleFn cf(DominantFn{at.a.to_algebraic(), at.b.to_algebraic(), at.c.to_algebraic()});
  CircleEnclosure enc = cf.enclosure(kPrec);
  const auto& roots = cf.roots();
  std::vector<DecayTerm> terms;

  if (roots.empty()) {
    Rational bmin = circle_min_abs(enc, {});
    if (bmin <= 0) {
      br.finite = false;
      return br;
    }
    if (!at.residual.empty())
      terms.push_back({at.res_scale / Interval(bmin, kPrec), 0, at.res_base});
    auto t = terms.empty() ? std::optional<unsigned long>(2) : decay_threshold(terms, 2);
    if (!t) {
      br.finite = false;
      return br;
    }
    br.n4 = *t;
    br.n = std::max(br.n4, br.n2);
    return br;
  }

  br.consumed_baker = true;
  unsigned long k = std::max<unsigned long>(2, static_cast<unsigned long>(wa.degree()));
  br.exponent = saturating_pow(k, opt.baker_exponent);

  // N1: the last n <= cap where gamma^n may hit a root (at most one per root).
  {
    mpfr_prec_t p = 256;
    CInterval al = ctx->bases()[1].enclosure(p);
    Interval r = al.abs();
    CInterval g(al.re / r, al.im / r);
    std::vector<CInterval> zs;
    for (const auto& z : roots) zs.push_back({z.x.enclosure(p).re, z.y.enclosure(p).re});
    CInterval cur(Interval(1, p), Interval(0, p));
    unsigned long lim = std::min<unsigned long>(opt.search_cap, 200000);
    for (unsigned long n = 0; n <= lim; ++n) {
      if (n % 64 == 0) cur = pow_ui(g, n);
      for (const auto& z : zs)
        if (overlaps(cur, z)) br.n1 = n;
      cur *= g;
    }
  }
  br.n2 = std::max<unsigned long>(br.n1, 2);

  std::vector<std::pair<CInterval, Rational>> holes;
  for (const auto& z : roots) {
    TaylorData td = cf.taylor_data(z);
    holes.push_back({CInterval(z.x.enclosure(kPrec).re, z.y.enclosure(kPrec).re), td.eps1 / 2});
    if (at.residual.empty()) continue;
    long fact = td.order == 1 ? 1 : td.order == 2 ? 2 : 6;
    Interval cj = abs(td.deriv) / Interval(2 * fact, kPrec);
    long e = static_cast<long>(std::min<unsigned long>(br.exponent * td.order, 1UL << 40));
    if (e > (1L << 30)) {
      br.finite = false;
      return br;
    }
    terms.push_back({at.res_scale / Interval(cj.lower(), kPrec), static_cast<int>(e), at.res_base});
  }
  Rational bout = circle_min_abs(enc, holes);
  if (bout <= 0) {
    br.finite = false;
    return br;
  }
  if (!at.residual.empty()) terms.push_back({at.res_scale / Interval(bout, kPrec), 0, at.res_base});
  auto t = terms.empty() ? std::optional<unsigned long>(br.n2) : decay_threshold(terms, br.n2);
  if (!t) {
    br.finite = false;
    return br;
  }
  br.n4 = *t;
  br.n = std::max({br.n1, br.n2, br.n4});
  return br;
}

// ---------------------------------------------------------------------------

namespace {

struct CoverResult {
  bool positive = false;  // some open region has every atom positive
  bool covered = false;   // every point has an atom bounded away on the bad side
  Rational eta;
};

CoverResult cover(const std::vector<NormalizedAtom>& atoms, std::size_t max_work = 6000) {
  std::vector<CircleEnclosure> enc;
  for (const auto& a : atoms) enc.push_back(a.dominant(kPrec));
  std::vector<Leaf> stack{{-1, 1, false, 0}, {-1, 1, true, 0}};
  CoverResult cr;
  Rational eta = -1;
  bool undecided = false;
  std::size_t work = 0;
  while (!stack.empty()) {
    Leaf l = stack.back();
    stack.pop_back();
    ++work;
    Interval t(l.lo, l.hi, kPrec);
    bool all_pos = true;
    Rational leaf_eta = -1;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      Interval v = enc[i].eval(t, l.flipped);
      if (atoms[i].rel == ARel::Eq) {
        all_pos = false;
        if (!v.contains_zero()) leaf_eta = std::max(leaf_eta, abs(v).lower());
      } else {
        if (!v.positive()) all_pos = false;
        if (v.negative()) leaf_eta = std::max(leaf_eta, Rational(-v.upper()));
      }
    }
    if (all_pos) {
      cr.positive = true;
      return cr;
    }
    if (leaf_eta > 0) {
      if (eta < 0 || leaf_eta < eta) eta = leaf_eta;
      continue;
    }
    if (l.depth >= 16 || work > max_work) {
      undecided = true;
      continue;
    }
    Rational mid = (l.lo + l.hi) / 2;
    stack.push_back({l.lo, mid, l.flipped, l.depth + 1});
    stack.push_back({mid, l.hi, l.flipped, l.depth + 1});
  }
  if (!undecided) {
    cr.covered = true;
    cr.eta = eta;
  }
  return cr;
}

// Exact search for an open arc where every atom's dominant function is positive.
bool exact_positive_arc(const std::vector<NormalizedAtom>& atoms) {
  std::vector<CircleFn> fns;
  for (const auto& a : atoms)
    fns.emplace_back(DominantFn{a.a.to_algebraic(), a.b.to_algebraic(), a.c.to_algebraic()});
  std::vector<AlgebraicNumber> ts;
  bool inf_root = false;
  for (const auto& f : fns)
    for (const auto& r : f.roots()) {
      if (r.at_infinity) {
        inf_root = true;
        continue;
      }
      if (std::none_of(ts.begin(), ts.end(), [&](const AlgebraicNumber& t) { return t == r.t; }))
        ts.push_back(r.t);
    }
  std::sort(ts.begin(), ts.end(), real_less);
  std::vector<Rational> samples;
  bool sample_inf = false;
  if (ts.empty()) {
    samples.push_back(0);
  } else {
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) samples.push_back(rational_between(ts[i], ts[i + 1]));
    RootDisc lo = ts.front().refine(Rational(1, 4)), hi = ts.back().refine(Rational(1, 4));
    samples.push_back(hi.re + hi.rad + 1);
    samples.push_back(lo.re - lo.rad - 1);
    if (!inf_root) sample_inf = true;
  }
  for (const auto& t : samples) {
    bool ok = true;
    for (const auto& f : fns)
      if (f.sign_at(t) <= 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  if (sample_inf) {
    bool ok = true;
    for (const auto& f : fns)
      if (f.sign_at_minus_one() <= 0) ok = false;
    if (ok) return true;
  }
  return false;
}

SolveReport density_search(const System& sys, const SolveOptions& opt) {
  SolveReport r = bounded_search(sys, opt.start, opt.start + opt.search_cap, opt);
  if (r.kind == VerdictKind::Sat) {
    r.path = "circle-density";
    return r;
  }
  return unknown("circle-density", "an open positive arc exists but no witness below the cap");
}

}  // namespace

SolveReport decide_circle(const System& sys, const SolveOptions& opt) {
  auto ctx = context_of(sys);
  if (!ctx) return sat(opt.start, "circle");
  if (ctx->bases()[0].sign() < 0) {
    auto target = ctx->powered(2);
    SolveReport acc;
    bool first = true;
    for (unsigned p = 0; p < 2; ++p) {
      auto sub = simplify(substitute(sys, p, 2, target));
      SolveReport r = unsat(0, "circle-parity");
      if (sub) {
        SolveOptions o = opt;
        o.start = class_start(opt.start, p, 2);
        r = remap(decide_system(*sub, o), p, 2);
      }
      acc = first ? r : join(acc, r);
      first = false;
    }
    return acc;
  }

  std::vector<NormalizedAtom> atoms;
  for (const auto& a : sys.atoms) atoms.push_back(normalize(a));

  CoverResult cr = cover(atoms);
  if (cr.positive) return density_search(sys, opt);
  if (cr.covered) {
    unsigned long n = 0;
    for (const auto& a : atoms) {
      if (a.residual.empty()) continue;
      auto t = decay_threshold({{a.res_scale / Interval(cr.eta, kPrec), 0, a.res_base}}, 0);
      if (!t) return unknown("circle-margin", "residual threshold overflow");
      n = std::max(n, *t);
    }
    SolveReport r = bounded_search(sys, opt.start, std::max(n, opt.start), opt);
    r.path = "circle-margin";
    r.bound = n;
    return r;
  }

  // Tangential configurations: exact arcs, then the Baker-type bound.
  bool has_eq = std::any_of(atoms.begin(), atoms.end(), [](auto& a) { return a.rel == ARel::Eq; });
  if (!has_eq && exact_positive_arc(atoms)) return density_search(sys, opt);

  std::size_t who = 0;
  BoundReport best;
  bool have = false;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (has_eq && atoms[i].rel != ARel::Eq) continue;
    BoundReport b = bound_N(atoms[i], opt);
    if (!b.finite) return unknown("circle-baker", "bound computation failed for " + sys.atoms[i].f.str());
    // With an equality one bound suffices (take the smallest); otherwise all atoms must settle.
    if (!have || (has_eq ? b.n < best.n : b.n > best.n)) {
      best = b;
      who = i;
      have = true;
    }
  }
  SolveReport r = bounded_search(sys, opt.start, std::max(best.n + 1, opt.start), opt);
  r.path = "circle-baker";
  r.bound = best.n;
  if (r.kind == VerdictKind::UnsatCertified && best.consumed_baker) {
    r.kind = VerdictKind::UnsatConditional;
    r.baker_atom = sys.atoms[who].f.str() + " " + rel_str(sys.atoms[who].rel) + " 0";
    r.notes.push_back("bound uses exponent " + std::to_string(best.exponent) + " for baker_exponent " +
                      std::to_string(opt.baker_exponent));
  }
  return r;
}

std::optional<int> settled_sign(const ExpPoly& f, unsigned long from) {
  if (f.is_zero()) return 0;
  const auto& ctx = f.context();
  if (!ctx) return std::nullopt;
  bool negative = false;
  for (const auto& b : ctx->bases()) {
    if (!b.is_real()) continue;
    int s = b.sign();
    if (s == 0) return std::nullopt;
    if (s < 0) negative = true;
  }
  if (negative) {
    // n = 2m + p: both parities must agree.
    auto sq = ctx->powered(2);
    std::optional<int> out;
    for (unsigned p = 0; p < 2; ++p) {
      auto s = settled_sign(f.substitute(p, 2, sq), class_start(from, p, 2));
      if (!s || *s == 0 || (out && *out != *s)) return std::nullopt;
      out = s;
    }
    return out;
  }
  if (ctx->all_real()) {
    EventualSign es = eventual_sign(f);
    if (es.from <= from) return es.sign;
    return std::nullopt;
  }
  // Complex pair: the dominant part must keep one sign around the whole
  // circle, with the residual below the margin from `from` on.
  try {
    for (int sg : {1, -1}) {
      NormalizedAtom na = normalize({sg > 0 ? -f : f, ARel::Gt});
      CoverResult cr = cover({na}, 400);
      if (!cr.covered) continue;
      if (!na.residual.empty()) {
        auto t = decay_threshold({{na.res_scale / Interval(cr.eta, kPrec), 0, na.res_base}}, 0);
        if (!t || *t > from) return std::nullopt;
      }
      return sg;
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

SolveReport decide_system(const System& sys0, const SolveOptions& opt) {
  auto s = simplify(sys0);
  if (!s) return unsat(0, "trivial");
  if (s->atoms.empty()) return sat(opt.start, "trivial");
  auto ctx = context_of(*s);
  if (ctx->all_real()) return decide_real(*s, opt);
  if (auto d = rou_period(ctx)) return decide_rou(*s, *d, opt);
  return decide_circle(*s, opt);
}

}  // namespace polycol
