#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycol/circle.hpp"
#include "polycol/exppoly.hpp"

namespace polycol {

enum class VerdictKind { Sat, UnsatCertified, UnsatConditional, Unknown };
std::string verdict_name(VerdictKind k);

struct SolveOptions {
  unsigned baker_exponent = 3;
  unsigned long search_cap = 1000000;  // longest bounded or density search
  unsigned long start = 0;             // only n >= start are considered
};

struct SolveReport {
  VerdictKind kind = VerdictKind::UnsatCertified;
  unsigned long n = 0;      // least witness when Sat
  unsigned long bound = 0;  // largest bound used
  std::string path;         // real, rou, circle-density, circle-margin, circle-baker, ...
  std::string baker_atom;   // the atom whose bound consumed baker_exponent
  std::vector<std::string> notes;
};

// Least witness wins; otherwise Unknown beats conditional beats certified.
SolveReport join(const SolveReport& a, const SolveReport& b);

// Smallest N >= floor such that sum_k coef_k * n^pow_k * base_k^n < 1 for
// every n >= N, with 0 < base_k <= 1 (pow_k < 0 required when base_k = 1).
// nullopt when no such N below 2^62 is found.
struct DecayTerm {
  Interval coef;  // nonnegative
  int pow;
  Interval base;
};
std::optional<unsigned long> decay_threshold(const std::vector<DecayTerm>& terms, unsigned long floor = 1);

// ---- real bases ----------------------------------------------------------

struct EventualSign {
  int sign = 0;             // sign of the dominant term
  unsigned long from = 0;   // sign(f(n)) == sign for all n >= from
};
// f over a context with positive real bases.
EventualSign eventual_sign(const ExpPoly& f);

SolveReport decide_real(const System& sys, const SolveOptions& opt);

// ---- root-of-unity case --------------------------------------------------

// Order d with alpha^d real positive when alpha / conj(alpha) is a root of
// unity (all bases of the d-th power context are then real).
std::optional<unsigned> rou_period(const ContextPtr& ctx);
SolveReport decide_rou(const System& sys, unsigned d, const SolveOptions& opt);

// ---- non-root-of-unity case ----------------------------------------------

// f / R^n = f_top(gamma^n) + r(n) with R the dominant modulus and
// gamma = alpha / |alpha|.
struct NormalizedAtom {
  ContextPtr ctx;
  ARel rel = ARel::Gt;
  Elem level;                            // R^2
  Elem a, b, c;                          // coefficients of z^2, z, 1
  std::vector<std::pair<int, Elem>> top;       // (monomial, coefficient)
  std::vector<std::pair<int, Elem>> residual;  // strictly smaller modulus
  // Upper bounds S, beta with |r(n)| <= S beta^n, beta < 1.
  Interval res_scale, res_base;

  CircleEnclosure dominant(mpfr_prec_t prec) const;
  CInterval dominant_at(unsigned long n, mpfr_prec_t prec) const;
  CInterval residual_at(unsigned long n, mpfr_prec_t prec) const;
};

// ctx bases (rho, alpha, conj alpha) with rho > 0.
NormalizedAtom normalize(const Atom& at);

struct BoundReport {
  unsigned long n = 0;  // max(N1, N2, N3, N4)
  unsigned long n1 = 0, n2 = 2, n3 = 0, n4 = 0;
  unsigned long exponent = 0;  // k^D
  bool consumed_baker = false;
  bool finite = true;
};
BoundReport bound_N(const NormalizedAtom& at, const SolveOptions& opt);

// Residual decay: |r(n)| < (1 - eps)^n for n > n3.
struct Decay {
  Rational eps;
  unsigned long n3 = 0;
};
Decay residual_decay(const NormalizedAtom& at);

SolveReport decide_circle(const System& sys, const SolveOptions& opt);

// ---- entry points ----------------------------------------------------------

SolveReport bounded_search(const System& sys, unsigned long from, unsigned long to,
                           const SolveOptions& opt);
SolveReport decide_system(const System& sys, const SolveOptions& opt);

// Sign of f on every n >= from when it can be certified cheaply.
std::optional<int> settled_sign(const ExpPoly& f, unsigned long from);

}  // namespace polycol
