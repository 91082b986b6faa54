#include "polycol/circle.hpp"

#include <algorithm>

namespace polycol {

bool real_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a == b) return false;
  for (Rational eps(1, 4);; eps /= 16) {
    RootDisc da = a.refine(eps), db = b.refine(eps);
    if (da.re + da.rad < db.re - db.rad) return true;
    if (db.re + db.rad < da.re - da.rad) return false;
  }
}

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) return (a.rational_value() + b.rational_value()) / 2;
  for (Rational eps(1, 4);; eps /= 16) {
    RootDisc da = a.refine(eps), db = b.refine(eps);
    Rational hi = da.re + da.rad, lo = db.re - db.rad;
    if (hi < lo) return (hi + lo) / 2;
  }
}

Interval CircleEnclosure::eval_xy(const Interval& x, const Interval& y) const {
  Interval two(2, x.prec());
  Interval re2 = sqr(x) - sqr(y), im2 = two * x * y;
  return two * (a1 * re2 - a2 * im2) + two * (b1 * x - b2 * y) + c;
}

Interval CircleEnclosure::eval(const Interval& t, bool flipped) const {
  mpfr_prec_t p = t.prec();
  Interval one(1, p), t2 = sqr(t);
  Interval den = one + t2;
  Interval x = (one - t2) / den, y = Interval(2, p) * t / den;
  if (flipped) {
    x = -x;
    y = -y;
  }
  return eval_xy(x, y);
}

CircleFn::CircleFn(const DominantFn& f) : f_(f) {
  auto fb = build_field({real_part(f.a), imag_part(f.a), real_part(f.b), imag_part(f.b), f.c});
  k_ = fb.field;
  a1_ = fb.images[0];
  a2_ = fb.images[1];
  b1_ = fb.images[2];
  b2_ = fb.images[3];
  c_ = fb.images[4];
  a_zero_b_zero_ = a1_.is_zero() && a2_.is_zero() && b1_.is_zero() && b2_.is_zero();
  quad_ = KPoly(std::vector<Elem>{
      Elem(2) * a1_ + Elem(2) * b1_ + c_,
      Elem(-8) * a2_ - Elem(4) * b2_,
      Elem(-12) * a1_ + Elem(2) * c_,
      Elem(8) * a2_ - Elem(4) * b2_,
      Elem(2) * a1_ - Elem(2) * b1_ + c_,
  });
}

int CircleFn::sign_at(const Rational& t) const {
  Elem acc(k_, Rational(0));
  Elem tt(k_, t);
  for (std::size_t i = quad_.size(); i-- > 0;) acc = acc * tt + quad_[i];
  return acc.sign();
}

int CircleFn::sign_at_minus_one() const { return (Elem(2) * a1_ - Elem(2) * b1_ + c_).sign(); }

namespace {

// Coordinates of z(t) inside a field holding t.
std::pair<Elem, Elem> chart_point(const Elem& t) {
  Elem one(t.field(), Rational(1));
  Elem den = one + t * t;
  return {(one - t * t) / den, Elem(2) * t / den};
}

// Re(i^m X) for X = p + i q.
Elem rot_re(int m, const Elem& p, const Elem& q) {
  switch (m % 4) {
    case 0: return p;
    case 1: return -q;
    case 2: return -p;
    default: return q;
  }
}

Interval rot_re(int m, const Interval& p, const Interval& q) {
  switch (m % 4) {
    case 0: return p;
    case 1: return -q;
    case 2: return -p;
    default: return q;
  }
}

}  // namespace

const std::vector<CircleRoot>& CircleFn::roots() const {
  if (roots_) return *roots_;
  std::vector<CircleRoot> out;
  if (!quad_.zero() && quad_.degree() >= 1) {
    for (auto& t : kpoly_roots(quad_)) {
      if (!t.is_real()) continue;
      CircleRoot r;
      r.t = t;
      auto fb = build_field({t});
      auto [x, y] = chart_point(fb.images[0]);
      r.x = x.to_algebraic();
      r.y = y.to_algebraic();
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const CircleRoot& a, const CircleRoot& b) { return real_less(a.t, b.t); });
  }
  if (!a_zero_b_zero_ || !c_.is_zero()) {
    if (sign_at_minus_one() == 0) {
      CircleRoot r;
      r.at_infinity = true;
      r.x = AlgebraicNumber(-1);
      r.y = AlgebraicNumber(0);
      out.push_back(std::move(r));
    }
  }
  roots_ = std::move(out);
  return *roots_;
}

std::vector<SignArc> CircleFn::sign_arcs() const {
  const auto& rs = roots();
  std::vector<SignArc> out;
  auto finite = [&](std::size_t i) { return !rs[i].at_infinity; };
  if (rs.empty() || (rs.size() == 1 && rs[0].at_infinity)) {
    SignArc a;
    if (!rs.empty()) a.from = a.to = 0;
    a.sample_t = 0;
    a.sign = sign_at(0);
    out.push_back(a);
    return out;
  }
  std::size_t nf = 0;
  while (nf < rs.size() && finite(nf)) ++nf;
  bool inf_root = nf < rs.size();
  // Arcs between consecutive finite chart roots.
  for (std::size_t i = 0; i + 1 < nf; ++i) {
    SignArc a;
    a.from = i;
    a.to = i + 1;
    a.sample_t = rational_between(rs[i].t, rs[i + 1].t);
    a.sign = sign_at(a.sample_t);
    out.push_back(a);
  }
  // Arc(s) through t = infinity.
  RootDisc hi = rs[nf - 1].t.refine(Rational(1, 4)), lo = rs[0].t.refine(Rational(1, 4));
  if (inf_root) {
    SignArc up;
    up.from = nf - 1;
    up.to = nf;
    up.sample_t = hi.re + hi.rad + 1;
    up.sign = sign_at(up.sample_t);
    out.push_back(up);
    SignArc down;
    down.from = nf;
    down.to = 0;
    down.sample_t = lo.re - lo.rad - 1;
    down.sign = sign_at(down.sample_t);
    out.push_back(down);
  } else {
    SignArc wrap;
    wrap.from = nf - 1;
    wrap.to = 0;
    wrap.sample_at_infinity = true;
    wrap.sign = sign_at_minus_one();
    out.push_back(wrap);
  }
  return out;
}

int CircleFn::derivative_sign(const CircleRoot& r, int m) const {
  Elem x, y, a1, a2, b1, b2, c;
  if (r.at_infinity) {
    x = Elem(k_, Rational(-1));
    y = Elem(k_, Rational(0));
    a1 = a1_, a2 = a2_, b1 = b1_, b2 = b2_, c = c_;
  } else {
    FieldBuild fb = k_->is_rational_field() ? build_field({r.t})
                                            : build_field({k_->generator(), r.t});
    const FieldPtr& l = fb.field;
    Elem gen = k_->is_rational_field() ? Elem(l, Rational(0)) : fb.images[0];
    a1 = embed(a1_, l, gen), a2 = embed(a2_, l, gen), b1 = embed(b1_, l, gen);
    b2 = embed(b2_, l, gen), c = embed(c_, l, gen);
    std::tie(x, y) = chart_point(fb.images.back());
  }
  Elem p2 = x * x - y * y, q2 = Elem(2) * x * y;
  Elem ra = a1 * p2 - a2 * q2, ia = a1 * q2 + a2 * p2;
  Elem rb = b1 * x - b2 * y, ib = b1 * y + b2 * x;
  Elem v = Elem(2) * Elem(1L << m) * rot_re(m, ra, ia) + Elem(2) * rot_re(m, rb, ib);
  if (m == 0) v = v + c;
  return v.sign();
}

CircleEnclosure CircleFn::enclosure(mpfr_prec_t prec) const {
  return {a1_.enclosure(prec).re, a2_.enclosure(prec).re, b1_.enclosure(prec).re,
          b2_.enclosure(prec).re, c_.enclosure(prec).re};
}

Interval CircleFn::derivative_enclosure(const CircleRoot& r, int m, mpfr_prec_t prec) const {
  CircleEnclosure e = enclosure(prec);
  CInterval xb = r.x.enclosure(prec), yb = r.y.enclosure(prec);
  const Interval& x = xb.re;
  const Interval& y = yb.re;
  Interval two(2, prec);
  Interval p2 = sqr(x) - sqr(y), q2 = two * x * y;
  Interval ra = e.a1 * p2 - e.a2 * q2, ia = e.a1 * q2 + e.a2 * p2;
  Interval rb = e.b1 * x - e.b2 * y, ib = e.b1 * y + e.b2 * x;
  Interval v = two * Interval(1L << m, prec) * rot_re(m, ra, ia) + two * rot_re(m, rb, ib);
  if (m == 0) v += e.c;
  return v;
}

Interval CircleFn::abs_a() const {
  auto e = enclosure(128);
  return sqrt(sqr(e.a1) + sqr(e.a2));
}

Interval CircleFn::abs_b() const {
  auto e = enclosure(128);
  return sqrt(sqr(e.b1) + sqr(e.b2));
}

TaylorData CircleFn::taylor_data(const CircleRoot& r) const {
  TaylorData td;
  for (int m = 1; m <= 3; ++m)
    if (derivative_sign(r, m) != 0) {
      td.order = m;
      break;
    }
  if (td.order == 0) throw DomainError("no nonzero derivative among the first three at a circle root");
  mpfr_prec_t prec = 128;
  td.deriv = derivative_enclosure(r, td.order, prec);
  while (td.deriv.contains_zero()) {
    prec *= 2;
    td.deriv = derivative_enclosure(r, td.order, prec);
  }
  // delta1: a third of the least chord between distinct roots.
  Rational d1(1);
  for (const auto& o : roots()) {
    if (&o == &r || (o.at_infinity == r.at_infinity && (o.at_infinity || o.t == r.t))) continue;
    Interval dx = o.x.enclosure(prec).re - r.x.enclosure(prec).re;
    Interval dy = o.y.enclosure(prec).re - r.y.enclosure(prec).re;
    Rational chord = sqrt(sqr(dx) + sqr(dy)).lower();
    d1 = std::min(d1, Rational(chord / 3));
  }
  // M bounds |g^(d+1)| on the whole circle.
  const int d = td.order;
  Interval m = Interval(2 << (d + 1), prec) * abs_a() + Interval(2, prec) * abs_b();
  Interval gd = abs(td.deriv);
  Interval d3 = gd * Interval(d, prec) / (Interval(2, prec) * m);
  td.eps1 = std::min(d1, d3.lower());
  return td;
}

std::vector<CircleRoot> circle_roots(const DominantFn& f) { return CircleFn(f).roots(); }
std::vector<SignArc> sign_arcs(const DominantFn& f) { return CircleFn(f).sign_arcs(); }
TaylorData taylor_data(const DominantFn& f, const CircleRoot& r) { return CircleFn(f).taylor_data(r); }

}  // namespace polycol
