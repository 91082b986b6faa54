#include "polycol/number_field.hpp"

#include <sstream>

namespace polycol {

FieldPtr NumberField::rationals() {
  static FieldPtr q = create(AlgebraicNumber(0));
  return q;
}

FieldPtr NumberField::create(const AlgebraicNumber& theta) {
  auto k = std::shared_ptr<NumberField>(new NumberField());
  k->theta_ = theta;
  k->deg_ = theta.degree();
  k->mono_ = monic(to_qpoly(theta.poly()));
  if (theta.is_real()) k->conj_ = QMatrix::identity(k->deg_, 0, 1);
  return k;
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> c) const {
  int d = deg_;
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    if (sgn(c[i]) == 0) continue;
    Rational t = c[i];
    for (int j = 0; j < d; ++j)
      if (sgn(mono_[j]) != 0) c[i - d + j] -= t * mono_[j];
    c[i] = 0;
  }
  c.resize(d);
  return c;
}

std::vector<Rational> NumberField::apply_conj(const std::vector<Rational>& c) const {
  if (!conj_) throw DomainError("number field has no conjugation");
  return conj_->apply(c);
}

void NumberField::set_conjugation(const std::vector<Rational>& conj_theta) const {
  FieldPtr self = shared_from_this();
  QMatrix m(deg_, deg_, Rational(0));
  Elem g(self, conj_theta), p(self, Rational(1));
  for (int j = 0; j < deg_; ++j) {
    for (int i = 0; i < deg_; ++i) m(i, j) = p.coeff(i);
    p = p * g;
  }
  conj_ = m;
}

const std::vector<CInterval>& NumberField::theta_powers(mpfr_prec_t prec) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = pow_cache_.find(prec);
  if (it != pow_cache_.end()) return it->second;
  mpfr_prec_t wp = prec + 8 + 4 * deg_;
  std::vector<CInterval> out;
  CInterval t = theta_.enclosure(wp);
  CInterval p(Interval(1, wp), Interval(0, wp));
  for (int i = 0; i < deg_; ++i) {
    out.push_back(p);
    p = p * t;
  }
  return pow_cache_.emplace(prec, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------

Elem::Elem(long v) {
  if (v != 0) c_ = {Rational(v)};
}

Elem::Elem(const Rational& q) {
  if (sgn(q) != 0) c_ = {q};
}

Elem::Elem(FieldPtr k, const Rational& q) : k_(std::move(k)), c_(k_->degree(), Rational(0)) {
  c_[0] = q;
}

Elem::Elem(FieldPtr k, std::vector<Rational> coeffs) : k_(std::move(k)) {
  c_ = k_->reduce(std::move(coeffs));
}

Elem Elem::generator(FieldPtr k) {
  if (k->degree() == 1) return Elem(k, k->generator().rational_value());
  std::vector<Rational> c(k->degree(), Rational(0));
  c[1] = 1;
  return Elem(std::move(k), std::move(c));
}

bool Elem::is_zero() const {
  for (auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool Elem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Elem::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return coeff(0);
}

namespace {

const FieldPtr& common(const Elem& a, const Elem& b) {
  if (a.field() && b.field() && a.field() != b.field())
    throw DomainError("elements of different number fields");
  return a.field() ? a.field() : b.field();
}

std::vector<Rational> padded(const Elem& a, std::size_t n) {
  std::vector<Rational> v = a.coeffs();
  v.resize(n, Rational(0));
  return v;
}

}  // namespace

Elem Elem::operator-() const {
  Elem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Elem operator+(const Elem& a, const Elem& b) {
  const FieldPtr& k = common(a, b);
  std::size_t n = k ? k->degree() : 1;
  Elem r;
  r.k_ = k;
  r.c_ = padded(a, n);
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

Elem operator*(const Elem& a, const Elem& b) {
  const FieldPtr& k = common(a, b);
  Elem r;
  r.k_ = k;
  if (a.c_.empty() || b.c_.empty()) {
    r.c_.assign(k ? k->degree() : 1, Rational(0));
    return r;
  }
  if (a.c_.size() == 1 || b.c_.size() == 1 || a.is_rational() || b.is_rational()) {
    const Elem& s = (a.c_.size() == 1 || a.is_rational()) ? a : b;
    const Elem& o = &s == &a ? b : a;
    Rational f = s.c_[0];
    r.c_ = padded(o, k ? k->degree() : 1);
    for (auto& q : r.c_) q *= f;
    return r;
  }
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  r.c_ = k->reduce(std::move(v));
  return r;
}

Elem Elem::inverse() const {
  if (is_zero()) throw DomainError("division by zero in number field");
  if (is_rational()) {
    Rational q = 1 / c_[0];
    return k_ ? Elem(k_, q) : Elem(q);
  }
  QPoly a(c_);
  auto x = xgcd(a, k_->monic_minpoly(), Rational(1));
  return Elem(k_, x.s.coeffs());
}

Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }

bool operator==(const Elem& a, const Elem& b) { return (a - b).is_zero(); }

Elem Elem::pow(unsigned long e) const {
  Elem r = k_ ? Elem(k_, Rational(1)) : Elem(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Elem Elem::scaled(const Rational& q) const {
  Elem r = *this;
  for (auto& c : r.c_) c *= q;
  return r;
}

Elem Elem::conj() const {
  if (!k_ || is_rational()) return *this;
  Elem r;
  r.k_ = k_;
  r.c_ = k_->apply_conj(padded(*this, k_->degree()));
  return r;
}

bool Elem::is_real() const {
  if (!k_ || is_rational()) return true;
  if (k_->generator().is_real()) return true;
  return conj() == *this;
}

CInterval Elem::enclosure(mpfr_prec_t prec) const {
  if (!k_ || is_rational()) return {Interval(coeff(0), prec), Interval(0, prec)};
  const auto& pw = k_->theta_powers(prec);
  mpfr_prec_t wp = pw[0].prec();
  CInterval acc(Interval(0, wp), Interval(0, wp));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    acc += Interval(c_[i], wp) * pw[i];
  }
  return acc;
}

int Elem::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coeff(0));
  for (mpfr_prec_t p = 64; p <= (1 << 20); p *= 2) {
    if (auto s = enclosure(p).re.sign()) return *s;
    if (p == 4096 && k_->has_conjugation() && !is_real())
      throw DomainError("sign of a non-real element");
  }
  throw DomainError("sign could not be determined");
}

QMatrix Elem::mul_matrix() const {
  int d = k_ ? k_->degree() : 1;
  QMatrix m(d, d, Rational(0));
  if (!k_) {
    m(0, 0) = coeff(0);
    return m;
  }
  Elem p(k_, Rational(1)), t = Elem::generator(k_);
  for (int j = 0; j < d; ++j) {
    Elem col = *this * p;
    for (int i = 0; i < d; ++i) m(i, j) = col.coeff(i);
    p = p * t;
  }
  return m;
}

AlgebraicNumber Elem::to_algebraic() const {
  if (is_rational()) return AlgebraicNumber(coeff(0));
  ZPoly cp = squarefree_part(to_primitive(charpoly(mul_matrix(), Rational(1))));
  return AlgebraicNumber::identify(cp, [this](mpfr_prec_t p) { return enclosure(p); });
}

std::string Elem::str() const {
  if (is_rational()) return to_string(coeff(0));
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    Rational a = abs(c_[i]);
    if (i == 0 || a != 1) os << to_string(a);
    if (i > 0) os << (a != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Elem embed(const Elem& x, const FieldPtr& target, const Elem& gimg) {
  if (!x.field() || x.is_rational()) return Elem(target, x.coeff(0));
  Elem acc(target, Rational(0));
  const auto& c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * gimg + Elem(target, c[i]);
  return acc;
}

std::vector<Elem> lift(const FieldPtr& k, const std::vector<Rational>& v) {
  std::vector<Elem> out;
  out.reserve(v.size());
  for (auto& q : v) out.emplace_back(k, q);
  return out;
}

ZPoly norm_poly(const KPoly& p0) {
  if (p0.degree() < 1) throw DomainError("norm of a constant polynomial");
  KPoly p = monic(p0);
  FieldPtr k;
  for (auto& c : p.coeffs())
    if (c.field()) k = c.field();
  int n = p.degree(), d = k ? k->degree() : 1;
  QMatrix big(n * d, n * d, Rational(0));
  for (int i = 1; i < n; ++i)
    for (int t = 0; t < d; ++t) big(i * d + t, (i - 1) * d + t) = 1;
  for (int i = 0; i < n; ++i) {
    QMatrix m = (-p[i]).mul_matrix();
    if (!k) m = QMatrix(1, 1, -p[i].coeff(0));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) big(i * d + r, (n - 1) * d + c) = m(r, c);
  }
  return to_primitive(charpoly(big, Rational(1)));
}

namespace {

KPoly lift_poly(const FieldPtr& k, const ZPoly& p) {
  std::vector<Elem> c;
  for (auto& z : p.coeffs()) c.emplace_back(k, Rational(z));
  return KPoly(std::move(c));
}

}  // namespace

FieldBuild build_field(const std::vector<AlgebraicNumber>& gens) {
  FieldPtr k = NumberField::rationals();
  std::size_t n = gens.size();
  std::vector<Elem> imgs(n);
  std::vector<bool> have(n, false);
  std::vector<Rational> kvec(n, Rational(0));  // theta = sum kvec[i] * gens[i]

  auto reembed = [&](const FieldPtr& k2, const Elem& theta_img) {
    for (std::size_t j = 0; j < n; ++j)
      if (have[j]) imgs[j] = embed(imgs[j], k2, theta_img);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const AlgebraicNumber& b = gens[i];
    if (b.is_rational()) {
      imgs[i] = Elem(k, b.rational_value());
      have[i] = true;
      continue;
    }
    bool dup = false;
    for (std::size_t j = 0; j < i && !dup; ++j)
      if (have[j] && gens[j] == b) {
        imgs[i] = imgs[j];
        have[i] = dup = true;
      }
    if (dup) continue;
    if (k->is_rational_field()) {
      FieldPtr k2 = NumberField::create(b);
      reembed(k2, Elem(k2, Rational(0)));
      imgs[i] = Elem::generator(k2);
      have[i] = true;
      kvec[i] = 1;
      k = k2;
      continue;
    }
    const AlgebraicNumber& theta = k->generator();
    QMatrix cm = companion(to_qpoly(theta.poly())), cb = companion(to_qpoly(b.poly()));
    QMatrix im = QMatrix::identity(cm.rows(), 0, 1), ib = QMatrix::identity(cb.rows(), 0, 1);
    bool done = false;
    for (long s = 1; s <= 64 && !done; ++s) {
      QMatrix sum = kron(cm, ib) + Rational(s) * kron(im, cb);
      ZPoly cp = squarefree_part(to_primitive(charpoly(sum, Rational(1))));
      AlgebraicNumber t2 = AlgebraicNumber::identify(cp, [&](mpfr_prec_t p) {
        CInterval sc(Interval(s, p + 16), Interval(0, p + 16));
        return theta.enclosure(p + 16) + sc * b.enclosure(p + 16);
      });
      FieldPtr k2 = NumberField::create(t2);
      // b is the common root of its minimal polynomial and m(t2 - s x)
      Elem g2 = Elem::generator(k2);
      KPoly shift({g2, Elem(k2, Rational(-s))});
      KPoly mt = lift_poly(k2, theta.poly()).compose(shift);
      KPoly g = gcd(lift_poly(k2, b.poly()), mt);
      if (g.degree() != 1) continue;
      Elem bimg = -g[0];
      Elem theta_img = g2 - bimg.scaled(Rational(s));
      reembed(k2, theta_img);
      imgs[i] = bimg;
      have[i] = true;
      kvec[i] += s;
      k = k2;
      done = true;
    }
    if (!done) throw DomainError("could not find a primitive element");
  }

  if (!k->generator().is_real() && k->degree() > 1) {
    std::vector<Rational> ct(k->degree(), Rational(0));
    Elem acc(k, Rational(0));
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      if (sgn(kvec[i]) == 0) continue;
      if (gens[i].is_real()) {
        acc = acc + imgs[i].scaled(kvec[i]);
        continue;
      }
      AlgebraicNumber cg = conj(gens[i]);
      bool found = false;
      for (std::size_t j = 0; j < n && !found; ++j)
        if (gens[j] == cg) {
          acc = acc + imgs[j].scaled(kvec[i]);
          found = true;
        }
      closed = found;
    }
    if (closed) k->set_conjugation(padded(acc, k->degree()));
  }
  return {k, imgs};
}

namespace {

bool all_rational(const KPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Elem& e) { return e.is_rational(); });
}

CInterval eval_encl(const KPoly& p, const CInterval& z, mpfr_prec_t prec) {
  CInterval acc(Interval(0, prec), Interval(0, prec));
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i].enclosure(prec);
  return acc;
}

}  // namespace

std::vector<AlgebraicNumber> kpoly_roots(const KPoly& chi) {
  if (all_rational(chi)) {
    std::vector<Rational> q;
    for (auto& e : chi.coeffs()) q.push_back(e.rational_value());
    return AlgebraicNumber::roots_of(to_primitive(QPoly(q)));
  }
  int distinct = chi.degree() - gcd(chi, chi.derivative()).degree();
  auto cands = AlgebraicNumber::roots_of(squarefree_part(norm_poly(chi)));
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    std::vector<AlgebraicNumber> alive;
    for (auto& c : cands)
      if (eval_encl(chi, c.enclosure(prec), prec).contains_zero()) alive.push_back(c);
    cands = std::move(alive);
    if (static_cast<int>(cands.size()) == distinct) return cands;
  }
  throw DomainError("could not isolate the roots");
}

}  // namespace polycol
