#include "polycol/escape.hpp"

#include <cmath>

namespace polycol {

namespace {

constexpr mpfr_prec_t kPrec = 128;

bool same_point(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Lower bound on the distance from 0 to the convex hull of the points,
// via support lines in a fan of directions; 0 when nothing separates.
Rational hull_gap(const std::vector<CInterval>& zs) {
  constexpr int kDirs = 64;
  Rational best = 0;
  for (int k = 0; k < kDirs; ++k) {
    double th = 2 * M_PI * k / kDirs;
    Interval c(Rational(std::cos(th)), kPrec), s(Rational(std::sin(th)), kPrec);
    Interval len = sqrt(sqr(c) + sqr(s));
    bool ok = true;
    Rational lo;
    for (std::size_t i = 0; i < zs.size(); ++i) {
      Interval v = c * zs[i].re + s * zs[i].im;
      Rational l = (v / len).lower();
      if (i == 0 || l < lo) lo = l;
      if (lo <= best) {
        ok = false;
        break;
      }
    }
    if (ok) best = lo;
  }
  return best;
}

}  // namespace

std::optional<std::vector<Vec>> polytope_vertices(const Polytope& p) {
  const std::size_t d = p.ambient;
  auto cons = p.constraints();
  std::vector<Vec> out;
  std::vector<std::size_t> pick(d);
  // Every d-subset of constraint planes.
  auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
    if (depth == d) {
      EMatrix m = zero_matrix(d, d);
      Vec rhs;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m(r, c) = cons[pick[r]].a[c];
        rhs.push_back(cons[pick[r]].b);
      }
      auto inv = try_inverse(m);
      if (!inv) return;
      Vec x = mat_vec(*inv, rhs);
      if (!contains(p, x)) return;
      for (const auto& y : out)
        if (same_point(x, y)) return;
      out.push_back(std::move(x));
      return;
    }
    for (std::size_t i = from; i < cons.size(); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  if (out.empty()) return std::nullopt;
  // Bounded exactly when nothing lies outside the vertex bounding box.
  for (std::size_t k = 0; k < d; ++k) {
    Elem lo = out[0][k], hi = out[0][k];
    for (const auto& x : out) {
      if (x[k].compare(lo) < 0) lo = x[k];
      if (x[k].compare(hi) > 0) hi = x[k];
    }
    for (int side : {1, -1}) {
      auto sys = cons;
      Vec e = unit_vec(d, k);
      if (side > 0) sys.push_back({e, hi, Rel::Gt});
      else sys.push_back({Elem(-1) * e, -lo, Rel::Gt});
      if (fm_feasible(sys, d)) return std::nullopt;
    }
  }
  return out;
}

std::optional<unsigned long> escape_bound(const Spectrum& s, const Polytope& p1, const Polytope& p2) {
  auto v1 = polytope_vertices(p1);
  if (!v1) return std::nullopt;
  auto v2 = polytope_vertices(p2);
  if (!v2) return std::nullopt;
  const std::size_t d = s.a.rows();
  std::optional<unsigned long> best;
  for (std::size_t i = 0; i < d; ++i) {
    // Row i of v^{-1} is a left eigenvector unless a Jordan chain continues.
    if (i + 1 < d && !s.j(i, i + 1).is_zero()) continue;
    const Elem& lam = s.j(i, i);
    auto image = [&](const Vec& x) {
      CInterval z(Interval(0, kPrec), Interval(0, kPrec));
      for (std::size_t k = 0; k < d; ++k) z += s.b(i, k).enclosure(kPrec) * x[k].enclosure(kPrec);
      return z;
    };
    auto images = [&](const std::vector<Vec>& vs) {
      std::vector<CInterval> out;
      for (const auto& x : vs) out.push_back(image(x));
      return out;
    };
    auto max_abs = [&](const std::vector<CInterval>& zs) {
      Interval m(0, kPrec);
      for (const auto& z : zs) m = max(m, z.abs());
      return m;
    };
    if (lam.is_zero()) {
      // u.A^n x = 0 for n >= 1.
      if (hull_gap(images(*v2)) > 0) best = std::min<unsigned long>(best.value_or(1), 1);
      continue;
    }
    Interval mod = lam.enclosure(kPrec).abs();
    bool grow = mod.lower() > 1;
    if (!grow && !(mod.upper() < 1)) continue;
    // Growing: the image of P1 leaves the range on P2. Shrinking: it
    // collapses below the distance of P2 from the kernel.
    Rational gap = hull_gap(images(grow ? *v1 : *v2));
    if (gap <= 0) continue;
    Interval reach = max_abs(images(grow ? *v2 : *v1));
    Interval ratio = reach / Interval(gap, kPrec);
    unsigned long n = 0;
    if (!(ratio.upper() < 1)) {
      Interval rate = grow ? mod : Interval(1, kPrec) / mod;
      Interval t = log(ratio) / log(rate);
      if (!t.is_finite() || t.hi_d() > 1e12) continue;
      n = static_cast<unsigned long>(std::floor(t.hi_d())) + 1;
    }
    if (!best || n < *best) best = n;
  }
  return best;
}

}  // namespace polycol
