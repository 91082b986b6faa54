#pragma once

#include <optional>
#include <vector>

#include "polycol/exppoly.hpp"
#include "polycol/geometry.hpp"
#include "polycol/spectral.hpp"

namespace polycol {

// Context over the distinct eigenvalues: (rho, alpha, conj alpha) for a
// complex pair, otherwise the real eigenvalues in ascending order.
ContextPtr spectral_context(const Spectrum& s);

// Coordinates of M^n v as functions of n (v over the entry field).
std::vector<ExpPoly> orbit(const Spectrum& s, const ContextPtr& ctx, const Vec& v);

// a alpha^n + conj(a) conj(alpha)^n + b rho^n + c
struct SymCoeff {
  Elem a, b, c;
};

// Per-coordinate coefficients of M^n v; complex-pair spectra only.
std::vector<SymCoeff> entry_coefficients(const Spectrum& s, const Vec& v);
// Reads a degree-one function back as a SymCoeff, if it has that shape.
std::optional<SymCoeff> sym_coeff(const ExpPoly& f);
ExpPoly from_sym(const ContextPtr& ctx, const SymCoeff& c);

// sum coef[i] x_i + c rel 0
struct LinAtom {
  std::vector<ExpPoly> coef;
  ExpPoly c;
  Rel rel = Rel::Ge;
};

// Variables are (lambda, mu, nu) = (edge, first cell, second cell parameter).
struct Sentence {
  ContextPtr ctx;
  std::size_t nvars = 0;
  std::vector<LinAtom> atoms;
};

// M^n (u + lambda v) = c + mu s + nu t with the edge and cell domains.
Sentence build_sentence(const Edge& e, const Cell& cell, const Spectrum& s, const ContextPtr& ctx);
// M^n (u + lambda v) in the polytope.
Sentence build_edge_polytope_sentence(const Edge& e, const Polytope& p, const Spectrum& s,
                                      const ContextPtr& ctx);
// M^n x in the polytope (no variables).
Sentence build_point_sentence(const Vec& x, const Polytope& p, const Spectrum& s,
                              const ContextPtr& ctx);

struct EliminationStats {
  std::size_t branches = 0;
  std::size_t pruned = 0;
};

// Eliminates the variables in the given order (default: last to first),
// splitting three ways on every symbolic coefficient sign. Non-strict
// atoms are kept as >= rather than split into = and >.
// Only n >= from matter: coefficient signs fixed on that tail are not split.
Disjunction fourier_motzkin(const Sentence& s, std::vector<std::size_t> order = {},
                            EliminationStats* stats = nullptr, unsigned long from = 0);

// Same pipeline for real spectra (any Jordan shape).
Disjunction build_real_sentence(const Edge& e, const Cell& cell, const Spectrum& s,
                                const ContextPtr& ctx);

// Drops duplicate atoms and constant ones; nullopt when the system is
// trivially false.
std::optional<System> simplify(const System& s);

// Truth of a system at n by exact evaluation.
bool system_holds(const System& s, unsigned long n);
// Truth of the sentence at n by exact feasibility in the variables.
bool sentence_holds(const Sentence& s, unsigned long n);

std::string system_str(const System& s);

}  // namespace polycol
