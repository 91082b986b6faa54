// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "polycol/circle.hpp"
#include "polycol/elimination.hpp"
#include "polycol/engine.hpp"
#include "polycol/expsolve.hpp"
#include "polycol/oracle.hpp"
#include "polycol/report.hpp"
#include "random_instances.hpp"

using namespace polycol;
using polycol::testing::gaussian;
using polycol::testing::mat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Instance load(const std::string& name) {
  std::ifstream f(polycol::testing::data_file(name));
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---- 1: random suite against the oracle -----------------------------------

Outcome oracle_agreement() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(2026);
  int mismatches = 0, sat = 0, cert = 0, cond = 0, unknown = 0;
  std::map<std::string, int> paths;
  for (int i = 0; i < 200; ++i) {
    Instance in = polycol::testing::random_instance(rng);
    Verdict v = run(in);
    OracleResult o = scan(in.matrix, in.p1, in.p2, 500, 1);
    for (auto& [p, c] : v.trace.paths) paths[p] += c > 0;
    switch (v.kind) {
      case VerdictKind::Sat:
        ++sat;
        if (o.hits.empty() || o.hits[0].n != v.n) {
          ++mismatches;
          std::cerr << "  instance " << i << ": SAT(" << v.n << ") but oracle "
                    << (o.hits.empty() ? std::string("none") : std::to_string(o.hits[0].n)) << "\n";
        }
        break;
      case VerdictKind::UnsatCertified:
        ++cert;
        if (!o.hits.empty()) {
          ++mismatches;
          std::cerr << "  instance " << i << ": UNSAT but oracle hit at " << o.hits[0].n << "\n";
        }
        break;
      case VerdictKind::UnsatConditional: ++cond; break;
      case VerdictKind::Unknown: ++unknown; break;
    }
  }
  double secs = seconds_since(t0);
  Outcome r;
  r.pass = mismatches == 0 && secs < 15 * 60;
  std::string ps;
  for (auto& [p, c] : paths) ps += " " + p + ":" + std::to_string(c);
  r.detail = fmt("%d mismatches; SAT %d, UNSAT certified %d, conditional %d, unknown %d "
                 "(uncounted rate %.1f%%); %.0f s; paths%s",
                 mismatches, sat, cert, cond, unknown, 100.0 * (cond + unknown) / 200, secs, ps.c_str());
  return r;
}

// ---- 2: named instances ----------------------------------------------------

Outcome named_instances() {
  Outcome r;
  auto check = [&](const std::string& file, VerdictKind kind, std::optional<unsigned long> n) {
    Instance in = load(file);
    Verdict v = run(in);
    bool ok = v.kind == kind && (!n || v.n == *n);
    if (ok && kind == VerdictKind::Sat) {
      OracleResult o = scan(in.matrix, in.p1, in.p2, v.n, 1);
      ok = !o.hits.empty() && o.hits[0].n == v.n;
    }
    r.detail += file + "=" + verdict_name(v.kind) + (kind == VerdictKind::Sat ? "(" + std::to_string(v.n) + ")" : "") + " ";
    r.pass &= ok;
  };
  check("diag_two.json", VerdictKind::Sat, 2);
  check("rotation_quarter.json", VerdictKind::Sat, 2);
  check("diverging.json", VerdictKind::UnsatCertified, std::nullopt);
  check("rotation_scale.json", VerdictKind::Sat, std::nullopt);
  return r;
}

// ---- 3: root separation ------------------------------------------------------

Outcome mignotte() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-100, 100), deg(2, 6);
  int done = 0, pairs = 0, violations = 0;
  while (done < 500) {
    int d = deg(rng);
    std::vector<Integer> c;
    for (int i = 0; i <= d; ++i) c.push_back(coef(rng));
    if (c.back() == 0) c.back() = 1 + done % 100;
    ZPoly p(c);
    if (squarefree_part(p).degree() != p.degree()) continue;
    ++done;
    Rational sep = separation_bound(p);
    auto discs = isolate_roots(p, sep / 10);
    for (std::size_t i = 0; i < discs.size(); ++i)
      for (std::size_t j = i + 1; j < discs.size(); ++j) {
        ++pairs;
        // Certified: center distance minus both radii exceeds the bound.
        Rational dx = discs[i].re - discs[j].re, dy = discs[i].im - discs[j].im;
        Rational need = sep + discs[i].rad + discs[j].rad;
        if (!(dx * dx + dy * dy > need * need)) ++violations;
      }
  }
  Outcome r;
  r.pass = violations == 0;
  r.detail = fmt("%d polynomials, %d root pairs, %d violations", done, pairs, violations);
  return r;
}

// ---- 4: elimination equivalence ------------------------------------------

Outcome elimination_equivalence() {
  std::mt19937_64 rng(4);
  auto rv = [&] {
    return Vec{Elem(polycol::testing::random_rational(rng, 2, 2)), Elem(polycol::testing::random_rational(rng, 2, 2)),
               Elem(polycol::testing::random_rational(rng, 2, 2))};
  };
  int triples = 0, mismatches = 0;
  std::size_t systems = 0;
  while (triples < 50) {
    EMatrix a = polycol::testing::random_matrix(rng, 0);
    if (det(a).is_zero()) continue;
    Spectrum s = spectrum(a);
    if (s.field->degree() > 4) continue;  // keeps exact evaluation at desk scale
    auto ctx = spectral_context(s);
    Edge e{rv(), rv(), triples % 2 == 0};
    if (is_zero_vec(e.v)) continue;
    Cell c{CellKind(triples % 3), rv(), rv(), rv()};
    Sentence sen = build_sentence(e, c, s, ctx);
    Disjunction d = fourier_motzkin(sen);
    systems += d.size();
    for (unsigned n = 0; n <= 15; ++n) {
      bool lhs = sentence_holds(sen, n), rhs = false;
      for (const auto& sys : d)
        if (system_holds(sys, n)) {
          rhs = true;
          break;
        }
      mismatches += lhs != rhs;
    }
    ++triples;
  }
  Outcome r;
  r.pass = mismatches == 0;
  r.detail = fmt("%d triples x 16 exponents, %zu systems, %d mismatches", triples, systems, mismatches);
  return r;
}

// ---- 5: cell decomposition -------------------------------------------------

Outcome cell_decomposition() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-3, 3), pick(0, 99);
  int faces = 0, bounded = 0, mismatches = 0;
  while (faces < 30) {
    // A polygon in the plane z = c from 2..5 random halfplanes.
    Polytope p;
    Rational zc = polycol::testing::random_rational(rng, 2, 2);
    p.hs.push_back({polycol::testing::vec({0, 0, 1}), Elem(zc), true});
    int k = 2 + faces % 4;
    for (int i = 0; i < k; ++i) {
      int a = small(rng), b = small(rng);
      if (a == 0 && b == 0) a = 1;
      p.hs.push_back({polycol::testing::vec({a, b, 0}), Elem(polycol::testing::random_rational(rng, 3, 2))});
    }
    if (dimension(p) != 2) continue;
    Boundary bd = boundary_structure(p);
    if (bd.faces.size() != 1) continue;
    const Face& f = bd.faces[0];
    bool has_cone_or_strip = false;
    for (auto& c : f.cells) has_cone_or_strip |= c.kind != CellKind::Triangle;
    bounded += !has_cone_or_strip;
    for (int t = 0; t < 1000; ++t) {
      Vec x{Elem(Rational(pick(rng) - 50, 10)), Elem(Rational(pick(rng) - 50, 10)), Elem(zc)};
      bool in_face = contains(f.carrier, x), in_cell = false;
      for (auto& c : f.cells)
        if (cell_contains(c, x)) {
          in_cell = true;
          break;
        }
      mismatches += in_face != in_cell;
    }
    ++faces;
  }
  Outcome r;
  r.pass = mismatches == 0 && bounded > 0 && bounded < faces;
  r.detail = fmt("%d faces (%d bounded) x 1000 points, %d mismatches", faces, bounded, mismatches);
  return r;
}

// ---- 6: circle roots ---------------------------------------------------------

Outcome circle_roots_check() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> mode(0, 3);
  int fns = 0, roots = 0, violations = 0;
  for (; fns < 200; ++fns) {
    auto q = [&] { return polycol::testing::random_rational(rng, 2, 3); };
    DominantFn f;
    switch (mode(rng)) {
      case 0: f = {gaussian(q(), q()), gaussian(q(), q()), AlgebraicNumber(q())}; break;
      case 1: f = {AlgebraicNumber(0), gaussian(q(), q()), AlgebraicNumber(q())}; break;
      case 2: f = {gaussian(q(), 0), AlgebraicNumber(0), AlgebraicNumber(q())}; break;
      default: {
        // Tangential: C chosen so that f has a double root at z = 1.
        AlgebraicNumber b = gaussian(q(), 0);
        f = {AlgebraicNumber(0), b, -b * AlgebraicNumber(2)};
      }
    }
    CircleFn c(f);
    const auto& rs = c.roots();
    if (rs.size() > 4) ++violations;
    for (const auto& r : rs) {
      ++roots;
      if (c.derivative_sign(r, 0) != 0) ++violations;
      bool some = false;
      for (int m = 1; m <= 3; ++m) some |= c.derivative_sign(r, m) != 0;
      if (!some) ++violations;
    }
  }
  Outcome r;
  r.pass = violations == 0;
  r.detail = fmt("%d functions, %d roots, %d violations", fns, roots, violations);
  return r;
}

// ---- 7: atoms past their bound ----------------------------------------------

Outcome atom_semantics() {
  std::mt19937_64 rng(7);
  int atoms = 0, violations = 0, exact_fallbacks = 0;
  unsigned long max_n = 0;
  std::vector<EMatrix> rotations = {
      mat({{Rational(3, 5), Rational(-4, 5), 0}, {Rational(4, 5), Rational(3, 5), 0}, {0, 0, Rational(1, 2)}}),
      mat({{3, -4, 0}, {4, 3, 0}, {0, 0, 2}}),
      mat({{1, -2, 0}, {2, 1, 0}, {1, 0, 1}}),
      mat({{Rational(5, 13), Rational(-12, 13), 0}, {Rational(12, 13), Rational(5, 13), 0}, {1, 1, Rational(1, 3)}}),
  };
  SolveOptions opt;
  while (atoms < 50) {
    const EMatrix& a = rotations[atoms % rotations.size()];
    Spectrum s = spectrum(a);
    auto ctx = spectral_context(s);
    if (rou_period(ctx)) continue;
    Vec v{Elem(polycol::testing::random_rational(rng, 2, 2)), Elem(polycol::testing::random_rational(rng, 2, 2)),
          Elem(polycol::testing::random_rational(rng, 2, 2))};
    auto o = orbit(s, ctx, v);
    std::uniform_int_distribution<int> coord(0, 2);
    ExpPoly f = o[coord(rng)] - ExpPoly::constant(ctx, Elem(polycol::testing::random_rational(rng, 1, 3)));
    if (f.is_zero() || f.is_constant()) continue;
    Atom at{f, atoms % 2 ? ARel::Gt : ARel::Eq};
    NormalizedAtom na = normalize(at);
    BoundReport b = bound_N(na, opt);
    if (!b.finite) continue;
    ++atoms;
    // Exact sign of the dominant part: the top terms share the modulus R^n > 0.
    ExpPoly top(ctx);
    for (auto& [mono, c] : na.top) top = top + ExpPoly::term(ctx, mono, 0, c);
    for (unsigned long n = b.n + 1; n <= b.n + 200; ++n) {
      int dom = 0, tot = 0;
      for (mpfr_prec_t p = 128; p <= 1024 && (dom == 0 || tot == 0); p *= 2) {
        CInterval d = na.dominant_at(n, p), r = na.residual_at(n, p);
        Interval sum = d.re + r.re;
        if (!d.re.contains_zero()) dom = *d.re.sign();
        if (!sum.contains_zero()) tot = *sum.sign();
      }
      if (dom == 0 || tot == 0) {
        ++exact_fallbacks;
        dom = top.sign_at(n);
        tot = f.sign_at(n);
      }
      if (dom == 0 || tot != dom) ++violations;
    }
    max_n = std::max(max_n, b.n);
  }
  Outcome r;
  r.pass = violations == 0;
  r.detail = fmt("%d atoms x 200 exponents past N (largest N %lu), %d exact fallbacks, %d violations", atoms, max_n,
                 exact_fallbacks, violations);
  return r;
}

// ---- 8: singular reduction ------------------------------------------------

Outcome singular_reduction() {
  std::mt19937_64 rng(8);
  int instances = 0, mismatches = 0, tries = 0;
  while (instances < 20 && tries < 500) {
    ++tries;
    EMatrix a = polycol::testing::random_matrix(rng, 1.0);
    Polytope p = polycol::testing::random_polytope(rng), q = polycol::testing::random_polytope(rng);
    Reduction red = reduce_singular(a, p, q);
    ++instances;
    const unsigned long sh = red.shift;
    for (unsigned long n = 0; n <= sh + 25; ++n) {
      bool orig = collide_at(a, p, q, n).has_value();
      bool reduced;
      if (n < sh) {
        reduced = orig;  // small exponents are patched by the direct check
      } else if (red.nilpotent || red.p_empty || red.r_empty) {
        // Constant past the shift: A^n = 0, or an empty reduced side.
        reduced = red.nilpotent ? collide_at(a, p, q, sh).has_value() : false;
      } else {
        Lifted l = lift_dimension(red.b, red.p, red.r);
        bool low = collide_at(red.b, red.p, red.r, n - sh).has_value();
        bool lifted = collide_at(l.a, l.p, l.r, n - sh).has_value();
        if (low != lifted) ++mismatches;
        reduced = low;
      }
      if (orig != reduced) ++mismatches;
    }
  }
  Outcome r;
  r.pass = mismatches == 0 && instances == 20;
  r.detail = fmt("%d instances, n up to shift + 25, %d mismatches", instances, mismatches);
  return r;
}

// ---- 9: root-of-unity detector --------------------------------------------

Outcome rou_detector() {
  int detected = 0, wrong = 0, bound_violations = 0;
  std::string violators;
  for (unsigned k = 1; k <= 12; ++k) {
    std::vector<Integer> c(k + 1, 0);
    c[0] = -1;
    c[k] = 1;
    for (auto& z : AlgebraicNumber::roots_of(ZPoly(c))) {
      // z is a root of unity of order dividing k; exact order from the powers.
      unsigned order = 1;
      while (pow(z, order) != AlgebraicNumber(1)) ++order;
      auto d = is_root_of_unity(z);
      if (!d || *d != order) ++wrong;
      else if (order == k) ++detected;
      if (d && *d > static_cast<unsigned>(z.degree() * z.degree())) {
        ++bound_violations;
        violators += " d=" + std::to_string(*d) + "/deg=" + std::to_string(z.degree());
      }
    }
  }
  int expected = 0;
  for (unsigned k = 1; k <= 12; ++k)
    for (unsigned j = 1; j <= k; ++j) expected += std::gcd(j, k) == 1;
  // (a^2 - b^2 + 2abi) / (a^2 + b^2) for coprime a > b > 0 of opposite parity.
  int rejected = 0, pyth = 0;
  for (int m = 2; pyth < 50; ++m)
    for (int n = 1; n < m && pyth < 50; ++n) {
      if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
      Rational den = m * m + n * n;
      AlgebraicNumber g = gaussian(Rational(m * m - n * n) / den, Rational(2 * m * n) / den);
      ++pyth;
      if (!on_unit_circle(g)) ++wrong;
      else if (!is_root_of_unity(g)) ++rejected;
    }
  Outcome r;
  r.pass = wrong == 0 && detected == expected && rejected == 50 && bound_violations == 0;
  r.detail = fmt("%d/%d primitive roots (k <= 12) with exact order, %d/50 Pythagorean rejected, %d bound violations",
                 detected, expected, rejected, bound_violations);
  r.detail += violators;
  return r;
}

// ---- 10: determinism and conditional bookkeeping ------------------------

Outcome determinism() {
  std::vector<Instance> ins;
  for (const char* f : {"diag_two.json", "rotation_quarter.json", "diverging.json", "rotation_scale.json",
                        "rotation_plane.json"})
    ins.push_back(load(f));
  std::mt19937_64 rng(10);
  for (int i = 0; i < 15; ++i) ins.push_back(polycol::testing::random_instance(rng));
  int differ = 0, conditional = 0, unnamed = 0;
  for (const auto& in : ins) {
    Verdict a = run(in), b = run(in);
    if (verdict_block(a) != verdict_block(b)) ++differ;
    if (a.kind == VerdictKind::UnsatConditional) {
      ++conditional;
      const auto& atoms = a.trace.conditional_atoms;
      bool named = !atoms.empty() && std::all_of(atoms.begin(), atoms.end(), [](auto& s) { return !s.empty(); });
      if (!named || verdict_block(a).find(atoms.empty() ? "?" : atoms[0]) == std::string::npos) ++unnamed;
    }
  }
  Outcome r;
  r.pass = differ == 0 && unnamed == 0 && conditional > 0;
  r.detail = fmt("%zu instances run twice, %d differing blocks; %d conditional verdicts, %d without a named atom",
                 ins.size(), differ, conditional, unnamed);
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
  };
  std::vector<Criterion> all = {
      {"1 oracle agreement (200 random instances, n <= 500)", oracle_agreement},
      {"2 named instances", named_instances},
      {"3 root separation bound (500 polynomials)", mignotte},
      {"4 elimination equivalence (50 triples, n = 0..15)", elimination_equivalence},
      {"5 face cell decomposition (30 faces x 1000 points)", cell_decomposition},
      {"6 circle roots and derivatives (200 functions)", circle_roots_check},
      {"7 atom signs past the bound (50 atoms x 200)", atom_semantics},
      {"8 singular reduction (20 instances)", singular_reduction},
      {"9 root-of-unity detector", rou_detector},
      {"10 determinism and conditional atoms", determinism},
  };
  int failed = 0;
  for (auto& c : all) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail
              << fmt(" [%.1f s]", seconds_since(t0)) << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
