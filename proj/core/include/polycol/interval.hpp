#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "polycol/rational.hpp"

namespace polycol {

// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
// outward so the true value is always enclosed. The working precision of a
// result is the larger of the operand precisions.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(long v, mpfr_prec_t prec);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

  bool contains_zero() const;
  bool contains(const Rational& q) const;
  // +1 / -1 when the interval excludes zero, nullopt otherwise.
  std::optional<int> sign() const;
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  bool nonpositive() const { return mpfr_sgn(hi_) <= 0; }

  Rational lower() const;
  Rational upper() const;
  Rational mid() const;
  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const;
  // Upper bound on hi - lo.
  double width_d() const;
  bool is_finite() const;

  // Largest |x| over the interval, rounded up.
  Interval mag() const;
  // Smallest |x| over the interval, rounded down (as a point interval).
  Interval mig() const;

  Interval& operator+=(const Interval& b);
  Interval& operator-=(const Interval& b);
  Interval& operator*=(const Interval& b);

  std::string str(int digits = 12) const;

 private:
  mpfr_t lo_, hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
// Throws DomainError when b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval abs(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
Interval mul_2si(const Interval& a, long e);
// Natural log; a must be positive.
Interval log(const Interval& a);
Interval exp(const Interval& a);
Interval pow_ui(const Interval& a, unsigned long e);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
// Certainly a < b.
bool certainly_less(const Interval& a, const Interval& b);

// Rectangular complex interval.
struct CInterval {
  Interval re, im;
  explicit CInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  mpfr_prec_t prec() const { return re.prec(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  CInterval conj() const { return {re, -im}; }
  Interval norm2() const { return sqr(re) + sqr(im); }
  Interval abs() const { return sqrt(norm2()); }
  CInterval& operator+=(const CInterval& b);
  CInterval& operator-=(const CInterval& b);
  CInterval& operator*=(const CInterval& b);
};

CInterval operator+(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a, const CInterval& b);
CInterval operator-(const CInterval& a);
CInterval operator*(const CInterval& a, const CInterval& b);
CInterval operator*(const Interval& a, const CInterval& b);
CInterval operator/(const CInterval& a, const CInterval& b);
CInterval pow_ui(const CInterval& a, unsigned long e);
bool overlaps(const CInterval& a, const CInterval& b);

// Exact rational value of a finite MPFR number.
Rational to_rational(mpfr_srcptr x);

}  // namespace polycol
