#include "polycol/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

namespace polycol {

namespace {

// Plain MPFR float with round-to-nearest arithmetic, used only to produce
// approximations; certification happens separately with intervals.
class Fl {
 public:
  explicit Fl(mpfr_prec_t p) { mpfr_init2(v, p); mpfr_set_zero(v, 1); }
  Fl(const Fl& o) { mpfr_init2(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
  Fl& operator=(const Fl& o) {
    if (this != &o) {
      mpfr_set_prec(v, mpfr_get_prec(o.v));
      mpfr_set(v, o.v, MPFR_RNDN);
    }
    return *this;
  }
  ~Fl() { mpfr_clear(v); }
  mpfr_t v;
};

struct Cx {
  Fl re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

mpfr_prec_t prec_of(const Cx& a) { return mpfr_get_prec(a.re.v); }

void cx_set_q(Cx& a, const Rational& re, const Rational& im) {
  mpfr_set_q(a.re.v, re.get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(a.im.v, im.get_mpq_t(), MPFR_RNDN);
}

void cx_mul(Cx& out, const Cx& a, const Cx& b) {
  mpfr_prec_t p = prec_of(out);
  Fl t1(p), t2(p), r(p);
  mpfr_mul(t1.v, a.re.v, b.re.v, MPFR_RNDN);
  mpfr_mul(t2.v, a.im.v, b.im.v, MPFR_RNDN);
  mpfr_sub(r.v, t1.v, t2.v, MPFR_RNDN);
  mpfr_mul(t1.v, a.re.v, b.im.v, MPFR_RNDN);
  mpfr_mul(t2.v, a.im.v, b.re.v, MPFR_RNDN);
  mpfr_add(out.im.v, t1.v, t2.v, MPFR_RNDN);
  mpfr_set(out.re.v, r.v, MPFR_RNDN);
}

void cx_div(Cx& out, const Cx& a, const Cx& b) {
  mpfr_prec_t p = prec_of(out);
  Fl d(p), t1(p), t2(p), r(p);
  mpfr_sqr(t1.v, b.re.v, MPFR_RNDN);
  mpfr_sqr(t2.v, b.im.v, MPFR_RNDN);
  mpfr_add(d.v, t1.v, t2.v, MPFR_RNDN);
  mpfr_mul(t1.v, a.re.v, b.re.v, MPFR_RNDN);
  mpfr_mul(t2.v, a.im.v, b.im.v, MPFR_RNDN);
  mpfr_add(r.v, t1.v, t2.v, MPFR_RNDN);
  mpfr_mul(t1.v, a.im.v, b.re.v, MPFR_RNDN);
  mpfr_mul(t2.v, a.re.v, b.im.v, MPFR_RNDN);
  mpfr_sub(out.im.v, t1.v, t2.v, MPFR_RNDN);
  mpfr_div(out.im.v, out.im.v, d.v, MPFR_RNDN);
  mpfr_div(out.re.v, r.v, d.v, MPFR_RNDN);
}

// p(z) and p'(z) by Horner.
void cx_eval2(const std::vector<Fl>& c, const Cx& z, Cx& val, Cx& der) {
  mpfr_prec_t p = prec_of(z);
  Cx t(p);
  mpfr_set_zero(val.re.v, 1);
  mpfr_set_zero(val.im.v, 1);
  mpfr_set_zero(der.re.v, 1);
  mpfr_set_zero(der.im.v, 1);
  for (std::size_t i = c.size(); i-- > 0;) {
    cx_mul(t, der, z);
    mpfr_add(der.re.v, t.re.v, val.re.v, MPFR_RNDN);
    mpfr_add(der.im.v, t.im.v, val.im.v, MPFR_RNDN);
    cx_mul(t, val, z);
    mpfr_add(val.re.v, t.re.v, c[i].v, MPFR_RNDN);
    mpfr_set(val.im.v, t.im.v, MPFR_RNDN);
  }
}

// Relative size of an update, computed in the log domain to survive underflow.
long cx_log2_abs(const Cx& a) {
  long e1 = mpfr_zero_p(a.re.v) ? LONG_MIN / 2 : mpfr_get_exp(a.re.v);
  long e2 = mpfr_zero_p(a.im.v) ? LONG_MIN / 2 : mpfr_get_exp(a.im.v);
  return std::max(e1, e2);
}

// Aberth-Ehrlich iteration on the approximations z in place.
void aberth(const ZPoly& poly, std::vector<Cx>& z, mpfr_prec_t prec) {
  std::size_t n = z.size();
  std::vector<Fl> c;
  for (const auto& a : poly.coeffs()) {
    Fl f(prec);
    mpfr_set_z(f.v, a.get_mpz_t(), MPFR_RNDN);
    c.push_back(f);
  }
  for (auto& zi : z) {
    mpfr_prec_round(zi.re.v, prec, MPFR_RNDN);
    mpfr_prec_round(zi.im.v, prec, MPFR_RNDN);
  }
  Cx val(prec), der(prec), ratio(prec), s(prec), t(prec), w(prec), one(prec);
  mpfr_set_ui(one.re.v, 1, MPFR_RNDN);
  std::vector<bool> done(n, false);
  int max_iter = 100 + 4 * static_cast<int>(n) + static_cast<int>(prec / 8);
  for (int it = 0; it < max_iter; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      cx_eval2(c, z[i], val, der);
      if (mpfr_zero_p(val.re.v) && mpfr_zero_p(val.im.v)) {
        done[i] = true;
        continue;
      }
      if (mpfr_zero_p(der.re.v) && mpfr_zero_p(der.im.v)) {
        // nudge off a critical point
        mpfr_add_d(z[i].re.v, z[i].re.v, 1e-3, MPFR_RNDN);
        all_done = false;
        continue;
      }
      cx_div(ratio, val, der);
      mpfr_set_zero(s.re.v, 1);
      mpfr_set_zero(s.im.v, 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        mpfr_sub(t.re.v, z[i].re.v, z[j].re.v, MPFR_RNDN);
        mpfr_sub(t.im.v, z[i].im.v, z[j].im.v, MPFR_RNDN);
        if (mpfr_zero_p(t.re.v) && mpfr_zero_p(t.im.v)) mpfr_set_d(t.re.v, 1e-30, MPFR_RNDN);
        cx_div(t, one, t);
        mpfr_add(s.re.v, s.re.v, t.re.v, MPFR_RNDN);
        mpfr_add(s.im.v, s.im.v, t.im.v, MPFR_RNDN);
      }
      // w = ratio / (1 - ratio * s)
      cx_mul(t, ratio, s);
      mpfr_ui_sub(t.re.v, 1, t.re.v, MPFR_RNDN);
      mpfr_neg(t.im.v, t.im.v, MPFR_RNDN);
      if (mpfr_zero_p(t.re.v) && mpfr_zero_p(t.im.v))
        mpfr_set(w.re.v, ratio.re.v, MPFR_RNDN), mpfr_set(w.im.v, ratio.im.v, MPFR_RNDN);
      else
        cx_div(w, ratio, t);
      mpfr_sub(z[i].re.v, z[i].re.v, w.re.v, MPFR_RNDN);
      mpfr_sub(z[i].im.v, z[i].im.v, w.im.v, MPFR_RNDN);
      long ew = cx_log2_abs(w);
      long ez = std::max(cx_log2_abs(z[i]), 0L);
      if (ew < ez - static_cast<long>(prec) + 8)
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done) break;
  }
}

Rational q_abs_upper(const Interval& x) { return x.mag().upper(); }

}  // namespace

Rational cauchy_bound(const ZPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r(abs(p[i]), abs(p.lc()));
    if (r > m) m = r;
  }
  return m + 1;
}

CInterval eval(const ZPoly& p, const CInterval& z) {
  mpfr_prec_t pr = z.prec();
  CInterval acc(pr);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * z;
    acc.re = acc.re + Interval(Rational(p[i]), pr);
  }
  return acc;
}

Interval eval(const ZPoly& p, const Interval& x) {
  mpfr_prec_t pr = x.prec();
  Interval acc(pr);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Interval(Rational(p[i]), pr);
  return acc;
}

CInterval disc_box(const RootDisc& d, mpfr_prec_t prec) {
  Interval re(d.re - d.rad, d.re + d.rad, prec);
  Interval im = d.real ? Interval(0, prec) : Interval(d.im - d.rad, d.im + d.rad, prec);
  return {re, im};
}

namespace {

CInterval point(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  return {Interval(re, prec), Interval(im, prec)};
}

// Upper bound on deg * |p(z_i) / (lc * prod (z_i - z_j))|, or -1 on failure.
Rational inclusion_radius(const ZPoly& p, const std::vector<std::pair<Rational, Rational>>& c,
                          std::size_t i, mpfr_prec_t prec) {
  CInterval zi = point(c[i].first, c[i].second, prec);
  CInterval num = eval(p, zi);
  CInterval den(Interval(Rational(p.lc()), prec), Interval(0, prec));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == i) continue;
    den = den * (zi - point(c[j].first, c[j].second, prec));
  }
  Interval d2 = den.norm2();
  if (d2.contains_zero()) return -1;
  Interval w = sqrt(num.norm2() / d2);
  Rational r = q_abs_upper(w) * static_cast<long>(c.size());
  return r;
}

bool discs_disjoint(const std::vector<RootDisc>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Rational dx = d[i].re - d[j].re, dy = d[i].im - d[j].im, s = d[i].rad + d[j].rad;
      if (dx * dx + dy * dy <= s * s) return false;
    }
  }
  return true;
}

Rational mpfr_q(mpfr_srcptr x) { return to_rational(x); }

}  // namespace

std::vector<RootDisc> isolate_roots(const ZPoly& p0, const Rational& max_rad) {
  ZPoly p = primitive_part(p0);
  int n = p.degree();
  std::vector<RootDisc> out;
  if (n <= 0) return out;
  if (n == 1) {
    Rational r(-p[0], p[1]);
    r.canonicalize();
    out.push_back({r, 0, 0, true});
    return out;
  }
  int nreal = real_root_count(p);
  if ((n - nreal) % 2 != 0) throw DomainError("isolate_roots: polynomial is not square-free");

  mpfr_prec_t prec = 64;
  std::vector<Cx> z;
  {
    // initial guesses on a circle
    double R = std::min(mpfr_get_d(Interval(cauchy_bound(p), 64).hi(), MPFR_RNDU), 1e300);
    for (int k = 0; k < n; ++k) {
      Cx c(prec);
      double ang = 6.283185307179586 * k / n + 0.4;
      mpfr_set_d(c.re.v, 0.5 * R * std::cos(ang), MPFR_RNDN);
      mpfr_set_d(c.im.v, 0.5 * R * std::sin(ang), MPFR_RNDN);
      z.push_back(c);
    }
  }
  for (; prec <= (1 << 17); prec *= 2) {
    aberth(p, z, prec);
    // classify: the nreal approximations closest to the real axis are real
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> absim(n);
    for (int i = 0; i < n; ++i) absim[i] = std::fabs(mpfr_get_d(z[i].im.v, MPFR_RNDN));
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return absim[a] < absim[b]; });
    std::vector<std::pair<Rational, Rational>> centers;
    std::vector<bool> isreal;
    for (int k = 0; k < nreal; ++k) {
      centers.emplace_back(mpfr_q(z[order[k]].re.v), Rational(0));
      isreal.push_back(true);
    }
    // non-real: take upper half-plane ones and mirror them
    std::vector<int> upper;
    for (int k = nreal; k < n; ++k)
      if (mpfr_sgn(z[order[k]].im.v) > 0) upper.push_back(order[k]);
    if (static_cast<int>(upper.size()) * 2 != n - nreal) continue;
    for (int i : upper) {
      Rational re = mpfr_q(z[i].re.v), im = mpfr_q(z[i].im.v);
      centers.emplace_back(re, im);
      isreal.push_back(false);
      centers.emplace_back(re, Rational(-im));
      isreal.push_back(false);
    }
    std::vector<RootDisc> discs;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Rational r = inclusion_radius(p, centers, i, prec + 32);
      if (r < 0) ok = false;
      discs.push_back({centers[i].first, centers[i].second, r, isreal[i]});
    }
    if (!ok || !discs_disjoint(discs)) continue;
    if (max_rad > 0) {
      bool small = true;
      for (auto& d : discs)
        if (d.rad > max_rad) small = false;
      if (!small) continue;
    }
    std::sort(discs.begin(), discs.end(), [](const RootDisc& a, const RootDisc& b) {
      if (a.real != b.real) return a.real;
      if (a.re != b.re) return a.re < b.re;
      return a.im < b.im;
    });
    return discs;
  }
  throw DomainError("isolate_roots: precision limit exceeded");
}

RootDisc refine_root(const ZPoly& p0, const RootDisc& d, const Rational& target) {
  if (d.rad <= target) return d;
  ZPoly p = primitive_part(p0);
  int n = p.degree();
  if (n == 1) {
    Rational r(-p[0], p[1]);
    r.canonicalize();
    return {r, 0, 0, true};
  }
  // bits needed for the target radius
  long need = 64;
  if (target > 0) {
    Rational inv_t = 1 / target;
    Integer fl = inv_t.get_num() / inv_t.get_den();
    if (fl > 0) need += static_cast<long>(mpz_sizeinbase(fl.get_mpz_t(), 2));
  }
  {
    Rational m = abs(d.re) + abs(d.im) + 1;
    Integer fl = m.get_num() / m.get_den();
    need += static_cast<long>(mpz_sizeinbase(fl.get_mpz_t(), 2));
  }
  for (mpfr_prec_t prec = need; prec <= (1 << 18); prec *= 2) {
    std::vector<Fl> c;
    for (const auto& a : p.coeffs()) {
      Fl f(prec);
      mpfr_set_z(f.v, a.get_mpz_t(), MPFR_RNDN);
      c.push_back(f);
    }
    Cx z(prec), val(prec), der(prec), step(prec);
    cx_set_q(z, d.re, d.real ? Rational(0) : d.im);
    for (int it = 0; it < 200; ++it) {
      cx_eval2(c, z, val, der);
      if (mpfr_zero_p(der.re.v) && mpfr_zero_p(der.im.v)) break;
      cx_div(step, val, der);
      mpfr_sub(z.re.v, z.re.v, step.re.v, MPFR_RNDN);
      if (!d.real) mpfr_sub(z.im.v, z.im.v, step.im.v, MPFR_RNDN);
      long es = cx_log2_abs(step);
      if (es < std::max(cx_log2_abs(z), 0L) - static_cast<long>(prec) + 4) break;
    }
    Rational cre = mpfr_q(z.re.v), cim = d.real ? Rational(0) : mpfr_q(z.im.v);
    if (d.real && sign_at(p, cre) == 0) return {cre, 0, 0, true};
    mpfr_prec_t ip = prec + 32;
    CInterval zi = point(cre, cim, ip);
    CInterval pv = eval(p, zi);
    Interval pd2 = eval(zderivative(p), zi).norm2();
    if (pd2.contains_zero()) continue;
    Rational r = q_abs_upper(sqrt(pv.norm2() / pd2)) * static_cast<long>(n);
    if (r > target) continue;
    Rational dx = cre - d.re, dy = cim - (d.real ? Rational(0) : d.im);
    if (r > d.rad) continue;
    Rational s = d.rad - r;
    if (dx * dx + dy * dy > s * s) continue;
    return {cre, cim, r, d.real};
  }
  throw DomainError("refine_root: precision limit exceeded");
}

}  // namespace polycol
