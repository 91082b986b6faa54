#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polycol/interval.hpp"
#include "polycol/linalg.hpp"
#include "polycol/poly.hpp"
#include "polycol/roots.hpp"

namespace polycol {

// Real or complex algebraic number in standard form: an irreducible,
// primitive integer polynomial with positive leading coefficient, plus a
// rational disc (center re + i*im, radius rad) that holds exactly that root.
// The radius is below a quarter of the Mignotte separation bound, so two
// representations with the same polynomial denote the same number iff their
// discs meet. Values are immutable; refinement is cached internally and is
// safe to share across threads.
class AlgebraicNumber {
 public:
  AlgebraicNumber();  // zero
  AlgebraicNumber(long v);  // NOLINT(google-explicit-constructor)
  explicit AlgebraicNumber(const Rational& q);

  // Validates irreducibility, the radius bound, and that the disc holds
  // exactly one root. Throws DomainError otherwise.
  static AlgebraicNumber from_standard(const ZPoly& poly, const Rational& re, const Rational& im,
                                       const Rational& rad);
  // All distinct roots of p (any integer polynomial), in isolation order per
  // irreducible factor, factors ordered canonically.
  static std::vector<AlgebraicNumber> roots_of(const ZPoly& p);
  // The root of irreducible `poly` selected by a certified disc.
  static AlgebraicNumber from_root_disc(const ZPoly& poly, const RootDisc& d);
  // Picks the unique root of p (not necessarily irreducible) consistent with
  // an enclosure oracle returning boxes of shrinking width for precision p.
  static AlgebraicNumber identify(const ZPoly& p, const std::function<CInterval(mpfr_prec_t)>& encl);

  const ZPoly& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  const Rational& re() const { return disc_.re; }
  const Rational& im() const { return disc_.im; }
  const Rational& rad() const { return disc_.rad; }
  const RootDisc& disc() const { return disc_; }
  bool is_real() const { return disc_.real; }
  bool is_rational() const { return poly_.degree() == 1; }
  // Exact value when rational.
  Rational rational_value() const;
  bool is_zero() const { return is_rational() && sgn(poly_[0]) == 0; }

  // Disc of radius <= eps around the root; successive calls only shrink it.
  RootDisc refine(const Rational& eps) const;
  // Box enclosure with relative width about 2^-prec.
  CInterval enclosure(mpfr_prec_t prec) const;

  bool operator==(const AlgebraicNumber& o) const;
  bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

  std::string str() const;

 private:
  struct Cache;
  ZPoly poly_;
  RootDisc disc_;
  std::shared_ptr<Cache> cache_;
  void init_cache();
};

enum class FieldOp { Add, Mul, Inv, Neg };

AlgebraicNumber field_op(FieldOp op, const AlgebraicNumber& a,
                         const AlgebraicNumber& b = AlgebraicNumber());
AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);
AlgebraicNumber inverse(const AlgebraicNumber& a);
AlgebraicNumber pow(const AlgebraicNumber& a, unsigned long e);

// Complex conjugate and modulus |a| (a real algebraic number).
AlgebraicNumber conj(const AlgebraicNumber& a);
AlgebraicNumber modulus(const AlgebraicNumber& a);
std::pair<AlgebraicNumber, AlgebraicNumber> conj_mod(const AlgebraicNumber& a);
AlgebraicNumber real_part(const AlgebraicNumber& a);
AlgebraicNumber imag_part(const AlgebraicNumber& a);

// Sign of a real algebraic number; DomainError when a is not real.
int real_sign(const AlgebraicNumber& a);

// Rational lower bound on the minimum distance between distinct roots of p:
// sqrt(6) / (d^((d+1)/2) * H^(d-1)).
Rational separation_bound(const ZPoly& p);

// For |g| = 1: the multiplicative order if g is a root of unity (checked for
// every d <= deg(g)^2), nullopt otherwise. DomainError when |g| != 1.
std::optional<unsigned> is_root_of_unity(const AlgebraicNumber& g);

// True when |g| = 1, decided exactly.
bool on_unit_circle(const AlgebraicNumber& g);

// Deterministic total order (degree, polynomial, then disc center).
bool canonical_less(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace polycol
