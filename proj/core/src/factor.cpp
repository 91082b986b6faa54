#include "polycol/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace polycol {

namespace {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;  // coefficients mod a small prime, low first

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mpow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 minv(u64 a, u64 p) { return mpow(a, p - 2, p); }

MPoly msub(const MPoly& a, const MPoly& b, u64 p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  mtrim(r);
  return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

MPoly mscale(const MPoly& a, u64 s, u64 p) {
  MPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s % p;
  mtrim(r);
  return r;
}

// quotient and remainder
std::pair<MPoly, MPoly> mdivmod(const MPoly& a, const MPoly& b, u64 p) {
  if (a.size() < b.size()) return {{}, a};
  MPoly r = a;
  std::size_t db = b.size() - 1;
  MPoly q(a.size() - db, 0);
  u64 il = minv(b.back(), p);
  for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
    u64 top = r[k + db];
    if (!top) continue;
    u64 f = top * il % p;
    q[k] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = (r[k + j] + p - f * b[j] % p) % p;
  }
  r.resize(db);
  mtrim(r);
  mtrim(q);
  return {q, r};
}

MPoly mmod(const MPoly& a, const MPoly& b, u64 p) { return mdivmod(a, b, p).second; }

MPoly mmonic(const MPoly& a, u64 p) {
  if (a.empty()) return a;
  return mscale(a, minv(a.back(), p), p);
}

MPoly mgcd(MPoly a, MPoly b, u64 p) {
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
void mxgcd(const MPoly& a, const MPoly& b, u64 p, MPoly* s, MPoly* t) {
  MPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    MPoly s2 = msub(s0, mmul(q, s1, p), p), t2 = msub(t0, mmul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 il = minv(r0.back(), p);
  *s = mscale(s0, il, p);
  *t = mscale(t0, il, p);
}

MPoly mpowmod(MPoly base, const Integer& e, const MPoly& m, u64 p) {
  MPoly r = {1};
  base = mmod(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mmod(mmul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mmod(mmul(r, base, p), m, p);
  }
  return r;
}

MPoly mderiv(const MPoly& a, u64 p) {
  MPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  mtrim(r);
  return r;
}

MPoly to_mpoly(const ZPoly& f, u64 p) {
  MPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  mtrim(r);
  return r;
}

ZPoly from_mpoly(const MPoly& a) {
  std::vector<Integer> v;
  for (u64 c : a) v.emplace_back(static_cast<unsigned long>(c));
  return ZPoly(std::move(v));
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<MPoly, int>> ddf(MPoly f, u64 p) {
  std::vector<std::pair<MPoly, int>> out;
  MPoly h = {0, 1};
  const MPoly x = {0, 1};
  Integer P(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = mpowmod(h, P, f, p);
    MPoly g = mgcd(f, msub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = mdivmod(f, g, p).first;
      h = mmod(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(mmonic(f, p), static_cast<int>(f.size()) - 1);
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p).
void edf(const MPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(mmonic(g, p));
    return;
  }
  Integer e = ipow(Integer(static_cast<unsigned long>(p)), d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    MPoly a(n);
    for (auto& c : a) c = dist(rng);
    mtrim(a);
    if (a.size() <= 1) continue;
    MPoly b = mpowmod(a, e, g, p);
    b = msub(b, {1}, p);
    MPoly h = mgcd(g, b, p);
    if (h.size() > 1 && h.size() < g.size()) {
      edf(h, d, p, rng, out);
      edf(mdivmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- arithmetic in (Z / M)[x] with Integer coefficients ----

ZPoly zmod(const ZPoly& a, const Integer& m) {
  std::vector<Integer> v = a.coeffs();
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return ZPoly(std::move(v));
}

ZPoly zmulm(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(a * b, m); }

// Division by a monic polynomial over Z/m.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.degree() < b.degree()) return {ZPoly(), zmod(a, m)};
  std::vector<Integer> r = zmod(a, m).coeffs();
  r.resize(a.size());
  int db = b.degree();
  std::vector<Integer> q(a.degree() - db + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer f = r[k + db];
    mpz_fdiv_r(f.get_mpz_t(), f.get_mpz_t(), m.get_mpz_t());
    if (f == 0) continue;
    q[k] = f;
    for (int j = 0; j <= db; ++j) {
      r[k + j] -= f * b[j];
      mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  r.resize(db);
  return {zmod(ZPoly(std::move(q)), m), zmod(ZPoly(std::move(r)), m)};
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  std::vector<Integer> v = zmod(a, m).coeffs();
  Integer half = m / 2;
  for (auto& c : v)
    if (c > half) c -= m;
  return ZPoly(std::move(v));
}

// One quadratic Hensel step from modulus m to m^2. h stays monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zmod(f - g * h, m2);
  auto [q, r] = zdivmod_monic(zmulm(s, e, m2), h, m2);
  ZPoly gs = zmod(g + t * e + q * g, m2);
  ZPoly hs = zmod(h + r, m2);
  ZPoly b = zmod(s * gs + t * hs - ZPoly::constant(Integer(1)), m2);
  auto [c, d] = zdivmod_monic(zmulm(s, b, m2), hs, m2);
  s = zmod(s - d, m2);
  t = zmod(t - t * b - c * gs, m2);
  g = std::move(gs);
  h = std::move(hs);
}

// Lift f = lc * prod(factors) mod p to modulus M; returns monic lifts.
void lift_tree(const ZPoly& f, const std::vector<MPoly>& factors, u64 p, const Integer& M,
               std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer l = f.lc(), il;
    mpz_invert(il.get_mpz_t(), l.get_mpz_t(), M.get_mpz_t());
    out.push_back(zmod(il * f, M));
    return;
  }
  std::size_t half = factors.size() / 2;
  MPoly gm = {1}, hm = {1};
  for (std::size_t i = 0; i < half; ++i) gm = mmul(gm, factors[i], p);
  for (std::size_t i = half; i < factors.size(); ++i) hm = mmul(hm, factors[i], p);
  u64 lcp = mpz_fdiv_ui(f.lc().get_mpz_t(), p);
  gm = mscale(gm, lcp, p);
  MPoly sm, tm;
  mxgcd(gm, hm, p, &sm, &tm);
  ZPoly g = from_mpoly(gm), h = from_mpoly(hm), s = from_mpoly(sm), t = from_mpoly(tm);
  Integer m(static_cast<unsigned long>(p));
  while (m < M) {
    m = m * m;
    hensel_step(f, g, h, s, t, m);
  }
  g = zmod(g, M);
  h = zmod(h, M);
  lift_tree(g, std::vector<MPoly>(factors.begin(), factors.begin() + half), p, M, out);
  lift_tree(h, std::vector<MPoly>(factors.begin() + half, factors.end()), p, M, out);
}

bool next_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  int n = f.degree();
  std::mt19937_64 rng(0x5eed);
  // choose a prime giving few modular factors
  u64 best_p = 0;
  std::size_t best_count = SIZE_MAX;
  int tried = 0;
  for (u64 p = 3; tried < 5 && p < 100000; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0) continue;
    MPoly fm = to_mpoly(f, p);
    if (mgcd(fm, mderiv(fm, p), p).size() != 1) continue;
    ++tried;
    auto parts = ddf(mmonic(fm, p), p);
    std::size_t count = 0;
    for (auto& [g, d] : parts) count += (g.size() - 1) / d;
    if (count < best_count) {
      best_count = count;
      best_p = p;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {f};
  u64 p = best_p;
  std::vector<MPoly> mf;
  for (auto& [g, d] : ddf(mmonic(to_mpoly(f, p), p), p)) edf(g, d, p, rng, mf);
  std::sort(mf.begin(), mf.end());

  // modulus bound: 2 * |lc| * 2^n * ||f||_2
  Integer bound = isqrt_ceil(norm2_sq(f)) * abs(f.lc());
  bound <<= (n + 1);
  Integer M(static_cast<unsigned long>(p));
  while (M <= bound) M *= static_cast<unsigned long>(p);

  std::vector<ZPoly> lifted;
  lift_tree(f, mf, p, M, lifted);

  std::vector<ZPoly> result;
  std::vector<int> alive(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) alive[i] = static_cast<int>(i);
  ZPoly rest = f;
  int s = 1;
  while (2 * s <= static_cast<int>(alive.size())) {
    bool found = false;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly g = ZPoly::constant(rest.lc());
      for (int i : idx) g = zmulm(g, lifted[alive[i]], M);
      g = primitive_part(symmetric(g, M));
      ZPoly q;
      if (g.degree() > 0 && divides(g, rest)) {
        result.push_back(g);
        rest = exact_div(rest, g);
        std::vector<int> keep;
        for (int i = 0, j = 0; i < static_cast<int>(alive.size()); ++i) {
          if (j < s && idx[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(alive[i]);
        }
        alive = std::move(keep);
        found = true;
        break;
      }
    } while (next_subset(idx, static_cast<int>(alive.size())));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  return result;
}

}  // namespace

bool poly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& p0) {
  ZPoly p = primitive_part(p0);
  std::vector<ZPoly> out;
  if (p.degree() <= 0) return out;
  // pull out the factor x
  if (p[0] == 0) {
    out.push_back(ZPoly{Integer(0), Integer(1)});
    std::vector<Integer> v(p.coeffs().begin() + 1, p.coeffs().end());
    p = ZPoly(std::move(v));
  }
  if (p.degree() == 1) {
    out.push_back(p);
  } else if (p.degree() > 1) {
    for (auto& g : zassenhaus(p)) out.push_back(primitive_part(g));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

Factorization factor(const ZPoly& p) {
  Factorization fz;
  if (p.zero()) throw DomainError("factor of the zero polynomial");
  Integer c = content(p);
  if (sgn(p.lc()) < 0) c = -c;
  fz.unit = c;
  if (p.degree() == 0) return fz;
  for (auto& [sq, mult] : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(sq)) fz.factors.emplace_back(g, mult);
  }
  std::sort(fz.factors.begin(), fz.factors.end(),
            [](const auto& a, const auto& b) {
              if (poly_less(a.first, b.first)) return true;
              if (poly_less(b.first, a.first)) return false;
              return a.second < b.second;
            });
  return fz;
}

bool is_irreducible(const ZPoly& p) {
  if (p.degree() <= 0) return false;
  if (content(p) != 1) return false;
  if (squarefree_part(p).degree() != p.degree()) return false;
  return factor_squarefree(p).size() == 1;
}

}  // namespace polycol
