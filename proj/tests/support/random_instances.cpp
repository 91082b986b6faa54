#include "random_instances.hpp"

namespace polycol::testing {

Rational random_rational(std::mt19937_64& rng, int bound, int den) {
  int d = std::uniform_int_distribution<int>(1, den)(rng);
  int n = std::uniform_int_distribution<int>(-bound * d, bound * d)(rng);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Polytope box(const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
  Polytope p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.hs.push_back({unit_vec(3, i), Elem(lo[i]), false});
    p.hs.push_back({Elem(-1) * unit_vec(3, i), Elem(Rational(-hi[i])), false});
  }
  return p;
}

Polytope random_box(std::mt19937_64& rng, int center_bound) {
  std::vector<Rational> lo, hi;
  for (int i = 0; i < 3; ++i) {
    Rational c = random_rational(rng, center_bound, 2);
    Rational w(std::uniform_int_distribution<int>(0, 4)(rng), 4);
    w.canonicalize();
    lo.push_back(c - w);
    hi.push_back(c + w);
  }
  return box(lo, hi);
}

namespace {

std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Rational dot3(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

Polytope random_simplex(std::mt19937_64& rng, int bound) {
  for (;;) {
    std::vector<std::vector<Rational>> v(4);
    for (auto& p : v)
      for (int i = 0; i < 3; ++i) p.push_back(random_rational(rng, bound, 2));
    if (dot3(cross(sub(v[1], v[0]), sub(v[2], v[0])), sub(v[3], v[0])) == 0) continue;
    Polytope p;
    for (int f = 0; f < 4; ++f) {
      const auto& a = v[(f + 1) % 4];
      const auto& b = v[(f + 2) % 4];
      const auto& c = v[(f + 3) % 4];
      auto n = cross(sub(b, a), sub(c, a));
      Rational off = dot3(n, a);
      if (dot3(n, v[f]) < off) {
        for (auto& x : n) x = -x;
        off = -off;
      }
      p.hs.push_back({Vec{Elem(n[0]), Elem(n[1]), Elem(n[2])}, Elem(off), false});
    }
    return p;
  }
}

Polytope random_polytope(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? random_box(rng) : random_simplex(rng);
}

EMatrix random_matrix(std::mt19937_64& rng, double singular_rate) {
  bool singular = std::bernoulli_distribution(singular_rate)(rng);
  for (;;) {
    EMatrix m = zero_matrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = Elem(random_rational(rng, 3, 4));
    if (singular) {
      // Third row a combination of the first two.
      Rational s = random_rational(rng, 1, 2), t = random_rational(rng, 1, 2);
      for (std::size_t j = 0; j < 3; ++j) m(2, j) = Elem(s) * m(0, j) + Elem(t) * m(1, j);
      return m;
    }
    if (!det(m).is_zero()) return m;
  }
}

Instance random_instance(std::mt19937_64& rng, double singular_rate) {
  Instance in;
  in.matrix = random_matrix(rng, singular_rate);
  in.p1 = random_polytope(rng);
  in.p2 = random_polytope(rng);
  return in;
}

}  // namespace polycol::testing
