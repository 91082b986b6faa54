#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polycol/rational.hpp"

namespace polycol {

inline Rational inv(const Rational& q) {
  if (sgn(q) == 0) throw DomainError("division by zero");
  return 1 / q;
}

// Dense univariate polynomial, coefficients stored lowest degree first and
// kept trimmed (no zero leading coefficient). The zero polynomial is empty.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  // c * x^k
  static Poly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, zero_like(c));
    v[k] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const T& lc() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  // Coefficient of x^i, or `fallback` beyond the degree.
  T coeff(std::size_t i, const T& fallback) const { return i < c_.size() ? c_[i] : fallback; }

  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Poly(std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    std::vector<T> v = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (std::size_t i = 0; i < s.size(); ++i) v[i] = v[i] + s[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.zero() || b.zero()) return Poly();
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const T& s, const Poly& b) {
    std::vector<T> v;
    v.reserve(b.c_.size());
    for (const auto& x : b.c_) v.push_back(s * x);
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(T(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(v));
  }

  // Horner evaluation in any ring U that accepts T by multiplication.
  template <class U>
  U eval(const U& x, const U& zero) const {
    U acc = zero;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // f(g(x))
  Poly compose(const Poly& g) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly::constant(c_[i]);
    return acc;
  }

 private:
  static T zero_like(const T& x) { return x - x; }
  std::vector<T> c_;
};

using QPoly = Poly<Rational>;
using ZPoly = Poly<Integer>;

// Division with remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  T zero = r[0] - r[0];
  std::vector<T> q(a.degree() - b.degree() + 1, zero);
  T ilc = inv(b.lc());
  int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const T& top = r[k + db];
    if (is_zero(top)) continue;
    T f = top * ilc;
    q[k] = f;
    for (int j = 0; j <= db; ++j) r[k + j] = r[k + j] - f * b[j];
  }
  r.resize(db);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
  if (a.zero()) return a;
  return inv(a.lc()) * a;
}

// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class T>
struct XGcd {
  Poly<T> g, s, t;
};

template <class T>
XGcd<T> xgcd(const Poly<T>& a, const Poly<T>& b, const T& one) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(one), s1, t0, t1 = Poly<T>::constant(one);
  while (!r1.zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.zero()) return {r0, s0, t0};
  T il = inv(r0.lc());
  return {il * r0, il * s0, il * t0};
}

// Integer-coefficient helpers.
Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);
// Primitive integer polynomial with positive leading coefficient that is a
// rational multiple of q.
ZPoly to_primitive(const QPoly& q);
QPoly to_qpoly(const ZPoly& p);
Integer height(const ZPoly& p);
// Sum of squares of coefficients.
Integer norm2_sq(const ZPoly& p);
ZPoly zderivative(const ZPoly& p);
// p(-x)
ZPoly negate_variable(const ZPoly& p);
// x^deg p(1/x)
ZPoly reverse(const ZPoly& p);
// Exact quotient over Z; throws when b does not divide a.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
bool divides(const ZPoly& b, const ZPoly& a);
// Primitive gcd over Z with positive leading coefficient.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);
ZPoly squarefree_part(const ZPoly& p);
// Yun decomposition: list of (factor, multiplicity), factors square-free and
// pairwise coprime, primitive.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p);
int sign_at(const ZPoly& p, const Rational& x);
Rational eval(const ZPoly& p, const Rational& x);

// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const ZPoly& p, const Rational& a, const Rational& b);
// Number of distinct real roots.
int real_root_count(const ZPoly& p);

std::string to_string(const ZPoly& p, const std::string& var = "x");

}  // namespace polycol
