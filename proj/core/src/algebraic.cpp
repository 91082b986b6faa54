#include "polycol/algebraic.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

#include "polycol/factor.hpp"

namespace polycol {

struct AlgebraicNumber::Cache {
  std::mutex m;
  RootDisc disc;
};

QMatrix companion(const QPoly& p0) {
  QPoly p = monic(p0);
  std::size_t n = p.degree();
  QMatrix c(n, n, Rational(0));
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p[i];
  return c;
}

namespace {

ZPoly linear_poly(const Rational& q) {
  return ZPoly{Integer(-q.get_num()), Integer(q.get_den())};
}

Rational pow2_neg(long bits) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

// Box inside the closed disc (all corners within the radius).
bool box_in_disc(const CInterval& b, const RootDisc& d) {
  Rational xs[2] = {b.re.lower(), b.re.upper()};
  Rational ys[2] = {b.im.lower(), b.im.upper()};
  Rational r2 = d.rad * d.rad;
  for (auto& x : xs)
    for (auto& y : ys) {
      Rational dx = x - d.re, dy = y - d.im;
      if (dx * dx + dy * dy > r2) return false;
    }
  return true;
}

// Box certainly disjoint from the disc.
bool box_outside_disc(const CInterval& b, const RootDisc& d) {
  // closest point of the box to the disc center
  auto clamp = [](const Rational& v, const Rational& lo, const Rational& hi) {
    return v < lo ? lo : (v > hi ? hi : v);
  };
  Rational cx = clamp(d.re, b.re.lower(), b.re.upper());
  Rational cy = clamp(d.im, b.im.lower(), b.im.upper());
  Rational dx = cx - d.re, dy = cy - d.im;
  return dx * dx + dy * dy > d.rad * d.rad;
}

QPoly shifted(const ZPoly& p, const Rational& q) {
  // p(x - q)
  return to_qpoly(p).compose(QPoly{Rational(-q), Rational(1)});
}

QPoly scaled(const ZPoly& p, const Rational& q) {
  // p(x / q)
  return to_qpoly(p).compose(QPoly{Rational(0), Rational(1 / q)});
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
AlgebraicNumber::AlgebraicNumber(long v) : AlgebraicNumber(Rational(v)) {}

AlgebraicNumber::AlgebraicNumber(const Rational& q) : poly_(linear_poly(q)), disc_{q, 0, 0, true} {
  init_cache();
}

void AlgebraicNumber::init_cache() {
  cache_ = std::make_shared<Cache>();
  cache_->disc = disc_;
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("algebraic number is not rational");
  Rational r(-poly_[0], poly_[1]);
  r.canonicalize();
  return r;
}

AlgebraicNumber AlgebraicNumber::from_root_disc(const ZPoly& poly, const RootDisc& d) {
  AlgebraicNumber a;
  a.poly_ = primitive_part(poly);
  if (a.poly_.degree() == 1) {
    Rational r(-a.poly_[0], a.poly_[1]);
    r.canonicalize();
    return AlgebraicNumber(r);
  }
  Rational sep = separation_bound(a.poly_);
  RootDisc disc = d;
  if (disc.rad * 4 >= sep) disc = refine_root(a.poly_, disc, sep / 5);
  a.disc_ = disc;
  a.init_cache();
  return a;
}

AlgebraicNumber AlgebraicNumber::from_standard(const ZPoly& poly, const Rational& re,
                                               const Rational& im, const Rational& rad) {
  ZPoly p = primitive_part(poly);
  if (p.degree() < 1) throw DomainError("algebraic number: polynomial must have degree >= 1");
  if (p != poly) throw DomainError("algebraic number: polynomial must be primitive with positive leading coefficient");
  if (!is_irreducible(p)) throw DomainError("algebraic number: polynomial is not irreducible");
  if (rad < 0) throw DomainError("algebraic number: negative radius");
  RootDisc given{re, im, rad, false};
  if (p.degree() == 1) {
    Rational r(-p[0], p[1]);
    r.canonicalize();
    Rational dx = r - re;
    if (dx * dx + im * im > rad * rad) throw DomainError("algebraic number: disc misses the root");
    return AlgebraicNumber(r);
  }
  Rational sep = separation_bound(p);
  if (rad * 4 >= sep) throw DomainError("algebraic number: radius not below a quarter of the separation bound");
  // count roots inside the closed given disc
  auto discs = isolate_roots(p, sep / 8);
  const RootDisc* hit = nullptr;
  int count = 0;
  for (auto& d0 : discs) {
    RootDisc d = d0;
    for (int it = 0;; ++it) {
      CInterval b = disc_box(d, 128);
      if (box_in_disc(b, given)) {
        ++count;
        hit = &d0;
        break;
      }
      if (box_outside_disc(b, given)) break;
      if (it > 40) throw DomainError("algebraic number: root lies on the disc boundary");
      d = refine_root(p, d, d.rad / 1024);
    }
  }
  if (count != 1) throw DomainError("algebraic number: disc must hold exactly one root");
  AlgebraicNumber a;
  a.poly_ = p;
  a.disc_ = {re, hit->real ? Rational(0) : im, rad, hit->real};
  if (hit->real && sgn(im) != 0) {
    // a real root given with a complex center: recenter on the real axis
    a.disc_ = {re, 0, rad, true};
  }
  a.init_cache();
  return a;
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const ZPoly& p) {
  std::vector<AlgebraicNumber> out;
  for (auto& f : factor_squarefree(squarefree_part(p))) {
    if (f.degree() == 1) {
      Rational r(-f[0], f[1]);
      r.canonicalize();
      out.emplace_back(r);
      continue;
    }
    Rational sep = separation_bound(f);
    for (auto& d : isolate_roots(f, sep / 5)) {
      AlgebraicNumber a;
      a.poly_ = f;
      a.disc_ = d;
      a.init_cache();
      out.push_back(a);
    }
  }
  return out;
}

AlgebraicNumber AlgebraicNumber::identify(const ZPoly& p,
                                          const std::function<CInterval(mpfr_prec_t)>& encl) {
  std::vector<AlgebraicNumber> cands = roots_of(p);
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    CInterval e = encl(prec);
    std::vector<AlgebraicNumber> alive;
    for (auto& c : cands) {
      CInterval b = c.enclosure(prec);
      if (overlaps(b, e)) alive.push_back(c);
    }
    if (alive.size() == 1) return alive[0];
    if (alive.empty()) throw DomainError("identify: no root matches the enclosure");
    cands = std::move(alive);
  }
  throw DomainError("identify: could not separate candidate roots");
}

RootDisc AlgebraicNumber::refine(const Rational& eps) const {
  std::lock_guard<std::mutex> lock(cache_->m);
  if (cache_->disc.rad > eps) cache_->disc = refine_root(poly_, cache_->disc, eps);
  return cache_->disc;
}

CInterval AlgebraicNumber::enclosure(mpfr_prec_t prec) const {
  if (is_rational()) {
    Rational v = rational_value();
    return {Interval(v, prec), Interval(0, prec)};
  }
  Rational scale = abs(disc_.re) + abs(disc_.im) + disc_.rad + 1;
  RootDisc d = refine(pow2_neg(prec) * scale);
  return disc_box(d, prec);
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
  if (poly_ != o.poly_) return false;
  if (is_rational()) return true;
  Rational dx = disc_.re - o.disc_.re, dy = disc_.im - o.disc_.im, s = disc_.rad + o.disc_.rad;
  return dx * dx + dy * dy <= s * s;
}

std::string AlgebraicNumber::str() const {
  if (is_rational()) return to_string(rational_value());
  std::ostringstream os;
  os << "root of " << to_string(poly_) << " near " << mpq_get_d(disc_.re.get_mpq_t());
  if (!disc_.real) {
    double im = mpq_get_d(disc_.im.get_mpq_t());
    os << (im < 0 ? " - " : " + ") << std::fabs(im) << "i";
  }
  return os.str();
}

bool canonical_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (poly_less(a.poly(), b.poly())) return true;
  if (poly_less(b.poly(), a.poly())) return false;
  if (a == b) return false;
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

Rational separation_bound(const ZPoly& p) {
  int d = p.degree();
  if (d < 2) return 1;
  Integer h = height(p);
  Rational num = sqrt_lower(Rational(6), 32);
  Rational den;
  if ((d + 1) % 2 == 0) {
    den = Rational(ipow(d, (d + 1) / 2));
  } else {
    den = Rational(ipow(d, d / 2)) * sqrt_upper(Rational(d), 32);
  }
  den *= Rational(ipow(h, d - 1));
  return num / den;
}

AlgebraicNumber field_op(FieldOp op, const AlgebraicNumber& a, const AlgebraicNumber& b) {
  switch (op) {
    case FieldOp::Neg: {
      if (a.is_rational()) return AlgebraicNumber(Rational(-a.rational_value()));
      RootDisc d = a.disc();
      d.re = -d.re;
      d.im = -d.im;
      return AlgebraicNumber::from_root_disc(primitive_part(negate_variable(a.poly())), d);
    }
    case FieldOp::Inv: {
      if (a.is_zero()) throw DomainError("inverse of zero");
      if (a.is_rational()) return AlgebraicNumber(Rational(1 / a.rational_value()));
      ZPoly r = primitive_part(reverse(a.poly()));
      return AlgebraicNumber::identify(r, [&](mpfr_prec_t p) {
        CInterval one(Interval(1, p + 16), Interval(0, p + 16));
        return one / a.enclosure(p + 16);
      });
    }
    case FieldOp::Add: {
      if (a.is_rational() && b.is_rational())
        return AlgebraicNumber(Rational(a.rational_value() + b.rational_value()));
      if (a.is_rational()) return field_op(FieldOp::Add, b, a);
      auto encl = [&](mpfr_prec_t p) { return a.enclosure(p + 8) + b.enclosure(p + 8); };
      if (b.is_rational())
        return AlgebraicNumber::identify(to_primitive(shifted(a.poly(), b.rational_value())), encl);
      QMatrix ca = companion(to_qpoly(a.poly())), cb = companion(to_qpoly(b.poly()));
      QMatrix ia = QMatrix::identity(ca.rows(), 0, 1), ib = QMatrix::identity(cb.rows(), 0, 1);
      QMatrix m = kron(ca, ib) + kron(ia, cb);
      return AlgebraicNumber::identify(to_primitive(charpoly(m, Rational(1))), encl);
    }
    case FieldOp::Mul: {
      if (a.is_rational() && b.is_rational())
        return AlgebraicNumber(Rational(a.rational_value() * b.rational_value()));
      if (a.is_zero() || b.is_zero()) return AlgebraicNumber();
      if (a.is_rational()) return field_op(FieldOp::Mul, b, a);
      auto encl = [&](mpfr_prec_t p) { return a.enclosure(p + 8) * b.enclosure(p + 8); };
      if (b.is_rational())
        return AlgebraicNumber::identify(to_primitive(scaled(a.poly(), b.rational_value())), encl);
      QMatrix ca = companion(to_qpoly(a.poly())), cb = companion(to_qpoly(b.poly()));
      return AlgebraicNumber::identify(to_primitive(charpoly(kron(ca, cb), Rational(1))), encl);
    }
  }
  throw DomainError("unknown field operation");
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return field_op(FieldOp::Add, a, b);
}
AlgebraicNumber operator-(const AlgebraicNumber& a) { return field_op(FieldOp::Neg, a); }
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return field_op(FieldOp::Mul, a, b);
}
AlgebraicNumber inverse(const AlgebraicNumber& a) { return field_op(FieldOp::Inv, a); }
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  return a * inverse(b);
}

AlgebraicNumber pow(const AlgebraicNumber& a, unsigned long e) {
  AlgebraicNumber r(1L), base = a;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

AlgebraicNumber conj(const AlgebraicNumber& a) {
  if (a.is_real()) return a;
  RootDisc d = a.disc();
  d.im = -d.im;
  return AlgebraicNumber::from_root_disc(a.poly(), d);
}

int real_sign(const AlgebraicNumber& a) {
  if (!a.is_real()) throw DomainError("real_sign of a non-real algebraic number");
  if (a.is_rational()) return sgn(a.rational_value());
  Rational eps = a.rad();
  for (int it = 0; it < 4096; ++it) {
    RootDisc d = a.refine(eps);
    if (d.re - d.rad > 0) return 1;
    if (d.re + d.rad < 0) return -1;
    eps = d.rad / 16;
  }
  throw DomainError("real_sign: refinement did not terminate");
}

AlgebraicNumber modulus(const AlgebraicNumber& a) {
  if (a.is_real()) return real_sign(a) < 0 ? -a : a;
  AlgebraicNumber m2 = a * conj(a);
  // |a| is the positive root of q(x^2) where q is the polynomial of |a|^2
  const ZPoly& q = m2.poly();
  std::vector<Integer> v(2 * q.size() - 1);
  for (std::size_t i = 0; i < q.size(); ++i) v[2 * i] = q[i];
  ZPoly r(std::move(v));
  return AlgebraicNumber::identify(r, [&](mpfr_prec_t p) {
    return CInterval(sqrt(m2.enclosure(p + 8).re), Interval(0, p + 8));
  });
}

std::pair<AlgebraicNumber, AlgebraicNumber> conj_mod(const AlgebraicNumber& a) {
  return {conj(a), modulus(a)};
}

AlgebraicNumber real_part(const AlgebraicNumber& a) {
  if (a.is_real()) return a;
  return (a + conj(a)) * AlgebraicNumber(Rational(1, 2));
}

AlgebraicNumber imag_part(const AlgebraicNumber& a) {
  if (a.is_real()) return AlgebraicNumber();
  // (a - conj a) / (2i) = (conj a - a) * i / 2
  AlgebraicNumber i = AlgebraicNumber::from_standard(ZPoly{Integer(1), Integer(0), Integer(1)}, 0, 1,
                                                     Rational(1, 10));
  return (conj(a) - a) * i * AlgebraicNumber(Rational(1, 2));
}

bool on_unit_circle(const AlgebraicNumber& g) {
  if (g.is_real()) {
    if (!g.is_rational()) return false;
    return abs(g.rational_value()) == 1;
  }
  if (primitive_part(reverse(g.poly())) != g.poly()) return false;
  // 1/g is a root of the same polynomial; |g| = 1 iff it is conj(g)
  RootDisc cd = g.disc();
  cd.im = -cd.im;
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    CInterval e = CInterval(Interval(1, prec), Interval(0, prec)) / g.enclosure(prec);
    if (box_in_disc(e, cd)) return true;
    if (box_outside_disc(e, cd)) return false;
  }
  throw DomainError("on_unit_circle: undecided");
}

std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& g) {
  if (!on_unit_circle(g)) throw DomainError("is_root_of_unity requires |g| = 1");
  if (g.is_rational()) return g.rational_value() == 1 ? 1u : 2u;
  QPoly p = to_qpoly(g.poly());
  unsigned deg = static_cast<unsigned>(p.degree());
  QPoly x = QPoly{Rational(0), Rational(1)};
  QPoly pw = x % p;
  QPoly one = QPoly::constant(Rational(1));
  // phi(d) >= sqrt(d/2), so the order is at most 2 deg^2 (d = 6 has phi 2).
  for (unsigned d = 1; d <= 2 * deg * deg; ++d) {
    if (pw == one) return d;
    pw = (pw * x) % p;
  }
  return std::nullopt;
}

}  // namespace polycol
