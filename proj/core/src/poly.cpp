#include "polycol/poly.hpp"

#include <sstream>

namespace polycol {

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.zero()) return p;
  Integer g = content(p);
  if (sgn(p.lc()) < 0) g = -g;
  std::vector<Integer> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    v.push_back(q);
  }
  return ZPoly(std::move(v));
}

ZPoly to_primitive(const QPoly& q) {
  if (q.zero()) return ZPoly();
  Integer l = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  v.reserve(q.size());
  for (const auto& c : q.coeffs()) {
    Integer t = c.get_num() * (l / c.get_den());
    v.push_back(t);
  }
  return primitive_part(ZPoly(std::move(v)));
}

QPoly to_qpoly(const ZPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

Integer height(const ZPoly& p) {
  Integer h = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > h) h = abs(c);
  return h;
}

Integer norm2_sq(const ZPoly& p) {
  Integer s = 0;
  for (const auto& c : p.coeffs()) s += c * c;
  return s;
}

ZPoly zderivative(const ZPoly& p) {
  if (p.degree() <= 0) return ZPoly();
  std::vector<Integer> v;
  for (std::size_t i = 1; i < p.size(); ++i) v.push_back(p[i] * static_cast<unsigned long>(i));
  return ZPoly(std::move(v));
}

ZPoly negate_variable(const ZPoly& p) {
  std::vector<Integer> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return ZPoly(std::move(v));
}

ZPoly reverse(const ZPoly& p) {
  std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
  return ZPoly(std::move(v));
}

namespace {

// Pseudo-division style exact division over Z; returns false if not exact.
bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly* out) {
  if (b.zero()) throw DomainError("polynomial division by zero");
  if (a.zero()) {
    *out = ZPoly();
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(a.degree() - b.degree() + 1);
  int db = b.degree();
  const Integer& l = b.lc();
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), l.get_mpz_t())) return false;
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), l.get_mpz_t());
    q[k] = f;
    for (int j = 0; j <= db; ++j) r[k + j] -= f * b[j];
  }
  for (int j = 0; j < db; ++j)
    if (r[j] != 0) return false;
  *out = ZPoly(std::move(q));
  return true;
}

}  // namespace

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_exact_div(a, b, &q)) throw DomainError("inexact polynomial division");
  return q;
}

bool divides(const ZPoly& b, const ZPoly& a) {
  ZPoly q;
  return try_exact_div(a, b, &q);
}

ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
  if (a.zero()) return primitive_part(b);
  if (b.zero()) return primitive_part(a);
  // primitive remainder sequence
  ZPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.zero()) {
    // pseudo-remainder of x by y
    std::vector<Integer> r = x.coeffs();
    int dy = y.degree();
    const Integer& l = y.lc();
    for (int k = x.degree() - dy; k >= 0; --k) {
      Integer top = r[k + dy];
      for (auto& c : r) c *= l;
      for (int j = 0; j <= dy; ++j) r[k + j] -= top * y[j];
    }
    r.resize(dy);
    ZPoly rem(std::move(r));
    x = std::move(y);
    y = primitive_part(rem);
  }
  return primitive_part(x);
}

ZPoly squarefree_part(const ZPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  ZPoly g = zgcd(p, zderivative(p));
  return primitive_part(exact_div(primitive_part(p), g));
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& p0) {
  // Yun's algorithm over Q on the monic associate
  std::vector<std::pair<ZPoly, int>> out;
  if (p0.degree() <= 0) return out;
  QPoly f = monic(to_qpoly(p0));
  QPoly df = f.derivative();
  QPoly a0 = gcd(f, df);
  QPoly b = divmod(f, a0).first;
  QPoly c = divmod(df, a0).first;
  QPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(to_primitive(a), i);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

Rational eval(const ZPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_at(const ZPoly& p, const Rational& x) { return sgn(eval(p, x)); }

namespace {

std::vector<QPoly> sturm_sequence(const ZPoly& p) {
  std::vector<QPoly> seq;
  QPoly a = to_qpoly(p), b = a.derivative();
  seq.push_back(a);
  while (!b.zero()) {
    seq.push_back(b);
    QPoly r = -(a % b);
    a = std::move(b);
    b = std::move(r);
  }
  return seq;
}

int variations_at(const std::vector<QPoly>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& f : seq) {
    Rational acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    int s = sgn(acc);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at_inf(const std::vector<QPoly>& seq, int dir) {
  int v = 0, last = 0;
  for (const auto& f : seq) {
    int s = sgn(f.lc());
    if (dir < 0 && (f.degree() % 2)) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sturm_count(const ZPoly& p, const Rational& a, const Rational& b) {
  ZPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  auto seq = sturm_sequence(s);
  return variations_at(seq, a) - variations_at(seq, b);
}

int real_root_count(const ZPoly& p) {
  ZPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  auto seq = sturm_sequence(s);
  return variations_at_inf(seq, -1) - variations_at_inf(seq, 1);
}

std::string to_string(const ZPoly& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << (a != 1 ? "*" : "") << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace polycol
