#include "polycol/interval.hpp"

#include <algorithm>
#include <utility>

namespace polycol {

namespace {

mpfr_prec_t pmax(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

void set_q(mpfr_ptr x, const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(x, q.get_mpq_t(), rnd); }

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  set_q(lo_, q, MPFR_RNDD);
  set_q(hi_, q, MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  set_q(lo_, lo, MPFR_RNDD);
  set_q(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.prec());
  mpfr_init2(hi_, o.prec());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec());
    mpfr_set_prec(hi_, o.prec());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

std::optional<int> Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return std::nullopt;
}

Rational to_rational(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) throw DomainError("non-finite MPFR value");
  if (mpfr_zero_p(x)) return Rational(0);
  Integer m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  Rational r(m);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

Rational Interval::lower() const { return to_rational(lo_); }
Rational Interval::upper() const { return to_rational(hi_); }
Rational Interval::mid() const { return (lower() + upper()) / 2; }

double Interval::mid_d() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width_d() const {
  mpfr_t w;
  mpfr_init2(w, prec());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

Interval Interval::mag() const {
  Interval r(prec());
  mpfr_set_zero(r.lo_, 1);
  if (mpfr_cmpabs(lo_, hi_) > 0)
    mpfr_abs(r.hi_, lo_, MPFR_RNDU);
  else
    mpfr_abs(r.hi_, hi_, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  return r;
}

Interval Interval::mig() const {
  Interval r(prec());
  if (contains_zero()) return r;
  if (mpfr_sgn(lo_) > 0)
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
  else
    mpfr_abs(r.lo_, hi_, MPFR_RNDD);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& b) { return *this = *this + b; }
Interval& Interval::operator-=(const Interval& b) { return *this = *this - b; }
Interval& Interval::operator*=(const Interval& b) { return *this = *this * b; }

std::string Interval::str(int digits) const {
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "[%.*Re, %.*Re]", digits, lo_, digits, hi_);
  return buf;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec());
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_prec_t p = r.prec();
  mpfr_t t;
  mpfr_init2(t, p);
  // four endpoint products; keep min for lo and max for hi
  mpfr_srcptr xs[2] = {a.lo(), a.hi()};
  mpfr_srcptr ys[2] = {b.lo(), b.hi()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (mpfr_nan_p(t)) mpfr_set_zero(t, 1);
      if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo(), t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (mpfr_nan_p(t)) mpfr_set_zero(t, 1);
      if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Interval r(pmax(a, b));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  mpfr_srcptr xs[2] = {a.lo(), a.hi()};
  mpfr_srcptr ys[2] = {b.lo(), b.hi()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo())) mpfr_set(r.lo(), t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi())) mpfr_set(r.hi(), t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  Interval r(a.prec());
  mpfr_sqr(r.lo(), m.lo(), MPFR_RNDD);
  mpfr_sqr(r.hi(), m.hi(), MPFR_RNDU);
  return r;
}

Interval abs(const Interval& a) {
  Interval r(a.prec());
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  mpfr_set_zero(r.lo(), 1);
  if (mpfr_cmpabs(a.lo(), a.hi()) > 0)
    mpfr_abs(r.hi(), a.lo(), MPFR_RNDU);
  else
    mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (a.negative()) throw DomainError("sqrt of a negative interval");
  Interval r(a.prec());
  if (mpfr_sgn(a.lo()) <= 0)
    mpfr_set_zero(r.lo(), 1);
  else
    mpfr_sqrt(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval mul_2si(const Interval& a, long e) {
  Interval r(a.prec());
  mpfr_mul_2si(r.lo(), a.lo(), e, MPFR_RNDD);
  mpfr_mul_2si(r.hi(), a.hi(), e, MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (!a.positive()) throw DomainError("log of a non-positive interval");
  Interval r(a.prec());
  mpfr_log(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_log(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.prec());
  mpfr_exp(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_exp(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

Interval pow_ui(const Interval& a, unsigned long e) {
  Interval result(1, a.prec());
  Interval base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = sqr(base);
  }
  return result;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_max(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi(), b.lo()); }

CInterval& CInterval::operator+=(const CInterval& b) { return *this = *this + b; }
CInterval& CInterval::operator-=(const CInterval& b) { return *this = *this - b; }
CInterval& CInterval::operator*=(const CInterval& b) { return *this = *this * b; }

CInterval operator+(const CInterval& a, const CInterval& b) { return {a.re + b.re, a.im + b.im}; }
CInterval operator-(const CInterval& a, const CInterval& b) { return {a.re - b.re, a.im - b.im}; }
CInterval operator-(const CInterval& a) { return {-a.re, -a.im}; }

CInterval operator*(const CInterval& a, const CInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInterval operator*(const Interval& a, const CInterval& b) { return {a * b.re, a * b.im}; }

CInterval operator/(const CInterval& a, const CInterval& b) {
  Interval d = b.norm2();
  CInterval num = a * b.conj();
  return {num.re / d, num.im / d};
}

CInterval pow_ui(const CInterval& a, unsigned long e) {
  CInterval result(Interval(1, a.prec()), Interval(0, a.prec()));
  CInterval base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool overlaps(const CInterval& a, const CInterval& b) {
  auto ov = [](const Interval& x, const Interval& y) {
    return !(mpfr_less_p(x.hi(), y.lo()) || mpfr_less_p(y.hi(), x.lo()));
  };
  return ov(a.re, b.re) && ov(a.im, b.im);
}

}  // namespace polycol
