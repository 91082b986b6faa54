#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "polycol/algebraic.hpp"
#include "polycol/linalg.hpp"
#include "polycol/poly.hpp"

namespace polycol {

class Elem;

// Q(theta) for an algebraic theta with a fixed complex embedding. Elements
// are rational polynomials in theta of degree below [K:Q].
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static std::shared_ptr<const NumberField> rationals();
  static std::shared_ptr<const NumberField> create(const AlgebraicNumber& theta);

  int degree() const { return deg_; }
  const AlgebraicNumber& generator() const { return theta_; }
  const ZPoly& minpoly() const { return theta_.poly(); }
  bool is_rational_field() const { return deg_ == 1; }
  bool has_conjugation() const { return conj_.has_value(); }

  // Enclosures of theta^0 .. theta^(deg-1) at the given precision.
  const std::vector<CInterval>& theta_powers(mpfr_prec_t prec) const;

  // Internal helpers used by Elem.
  std::vector<Rational> reduce(std::vector<Rational> c) const;
  const QPoly& monic_minpoly() const { return mono_; }
  std::vector<Rational> apply_conj(const std::vector<Rational>& c) const;

  // Installs complex conjugation given conj(theta) as an element.
  void set_conjugation(const std::vector<Rational>& conj_theta) const;

 private:
  NumberField() = default;
  AlgebraicNumber theta_;
  int deg_ = 1;
  QPoly mono_;
  mutable std::optional<QMatrix> conj_;
  mutable std::mutex mu_;
  mutable std::map<mpfr_prec_t, std::vector<CInterval>> pow_cache_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field. A default-constructed Elem is the rational zero
// with no field attached; it adopts the field of the other operand.
class Elem {
 public:
  Elem() = default;
  Elem(long v);              // NOLINT(google-explicit-constructor)
  explicit Elem(const Rational& q);
  Elem(FieldPtr k, const Rational& q);
  Elem(FieldPtr k, std::vector<Rational> coeffs);
  static Elem generator(FieldPtr k);

  const FieldPtr& field() const { return k_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  Elem operator-() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  Elem inverse() const;
  Elem pow(unsigned long e) const;
  Elem scaled(const Rational& q) const;

  // Complex conjugate; requires a field with conjugation.
  Elem conj() const;
  // Exactly real (needs conjugation, or a rational element).
  bool is_real() const;

  CInterval enclosure(mpfr_prec_t prec) const;
  // Sign of a real element: zero test is exact, the sign is found by
  // refining enclosures.
  int sign() const;
  // Certified comparison of two real elements.
  int compare(const Elem& o) const { return (*this - o).sign(); }

  AlgebraicNumber to_algebraic() const;
  // Rational matrix of multiplication by this element.
  QMatrix mul_matrix() const;

  std::string str() const;

 private:
  FieldPtr k_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Elem& e) { return e.is_zero(); }
inline Elem inv(const Elem& e) { return e.inverse(); }

struct FieldBuild {
  FieldPtr field;
  std::vector<Elem> images;  // one per input generator
};

// Smallest field (via primitive elements theta + k * b) containing all the
// given numbers, with each number expressed in it. When every non-real input
// has its conjugate among the inputs, the field gets a conjugation map.
FieldBuild build_field(const std::vector<AlgebraicNumber>& gens);

// Re-express an element of a subfield in a field that contains it, given
// the image of the subfield generator.
Elem embed(const Elem& x, const FieldPtr& target, const Elem& generator_image);

// Lift a vector of rational numbers into a field.
std::vector<Elem> lift(const FieldPtr& k, const std::vector<Rational>& v);

// Polynomials over a number field.
using KPoly = Poly<Elem>;

// Minimal polynomial over Q of every root of p in K[x]: the characteristic
// polynomial of the block companion matrix (the norm of p).
ZPoly norm_poly(const KPoly& p);

// Distinct complex roots of p in K[x].
std::vector<AlgebraicNumber> kpoly_roots(const KPoly& p);

}  // namespace polycol
