#pragma once

#include <optional>
#include <vector>

#include "polycol/algebraic.hpp"
#include "polycol/number_field.hpp"

namespace polycol {

// f(z) = A z^2 + conj(A) conj(z)^2 + B z + conj(B) conj(z) + C on |z| = 1,
// with g(x) = f(e^{ix}). Points of the circle are charted by
// t -> ((1 - t^2) + 2 i t) / (1 + t^2); t = infinity is z = -1.
struct DominantFn {
  AlgebraicNumber a, b, c;
};

struct CircleRoot {
  bool at_infinity = false;  // z = -1
  AlgebraicNumber t;         // chart parameter when finite
  AlgebraicNumber x, y;      // z = x + i y
};

// Derivative data of g at a circle root.
struct TaylorData {
  int order = 0;          // least d with g^(d) != 0 (1..3)
  Interval deriv;         // enclosure of g^(d) at the root
  Rational eps1;          // Taylor-dominance and monotonicity radius
};

// Interval evaluation of f from enclosures of Re A, Im A, Re B, Im B, C.
struct CircleEnclosure {
  Interval a1, a2, b1, b2, c;
  // f at the chart points t (or at -z(t) when flipped).
  Interval eval(const Interval& t, bool flipped) const;
  // f at x + i y.
  Interval eval_xy(const Interval& x, const Interval& y) const;
};

struct SignArc {
  std::optional<std::size_t> from, to;  // root indices (none: no roots)
  Rational sample_t;                    // rational chart point inside the arc
  bool sample_at_infinity = false;
  int sign = 0;
};

class CircleFn {
 public:
  explicit CircleFn(const DominantFn& f);

  const DominantFn& fn() const { return f_; }
  // Real field holding Re A, Im A, Re B, Im B, C.
  const FieldPtr& field() const { return k_; }
  bool constant() const { return a_zero_b_zero_; }

  // (1 + t^2)^2 f(z(t)), a polynomial of degree <= 4 over field().
  const KPoly& chart_poly() const { return quad_; }
  // Exact sign of f at the chart point t (or at z = -1).
  int sign_at(const Rational& t) const;
  int sign_at_minus_one() const;

  const std::vector<CircleRoot>& roots() const;
  std::vector<SignArc> sign_arcs() const;

  // g^(m)(phi) at a root, exactly: returns the value as an element of a
  // field holding the root, plus its sign.
  int derivative_sign(const CircleRoot& r, int m) const;
  Interval derivative_enclosure(const CircleRoot& r, int m, mpfr_prec_t prec) const;
  TaylorData taylor_data(const CircleRoot& r) const;

  CircleEnclosure enclosure(mpfr_prec_t prec) const;
  // Upper bounds on |A| and |B|.
  Interval abs_a() const;
  Interval abs_b() const;

 private:
  DominantFn f_;
  FieldPtr k_;
  Elem a1_, a2_, b1_, b2_, c_;
  bool a_zero_b_zero_ = false;
  KPoly quad_;
  mutable std::optional<std::vector<CircleRoot>> roots_;
};

// Circle roots of f (at most four), via the chart polynomial.
std::vector<CircleRoot> circle_roots(const DominantFn& f);
std::vector<SignArc> sign_arcs(const DominantFn& f);
TaylorData taylor_data(const DominantFn& f, const CircleRoot& r);

// Exact real comparison of algebraic numbers (both real).
bool real_less(const AlgebraicNumber& a, const AlgebraicNumber& b);
// A rational strictly between distinct real algebraic numbers a < b.
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace polycol
