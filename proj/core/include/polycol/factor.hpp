#pragma once

#include <utility>
#include <vector>

#include "polycol/poly.hpp"

namespace polycol {

struct Factorization {
  // Signed content: p = unit * product(f_i ^ e_i).
  Integer unit;
  std::vector<std::pair<ZPoly, int>> factors;
};

// Complete factorization over Z. Factors are primitive, irreducible, with
// positive leading coefficient, sorted by (degree, coefficients).
Factorization factor(const ZPoly& p);

// Irreducible factors of a square-free primitive polynomial.
std::vector<ZPoly> factor_squarefree(const ZPoly& p);

bool is_irreducible(const ZPoly& p);

// Deterministic total order used for canonical output.
bool poly_less(const ZPoly& a, const ZPoly& b);

}  // namespace polycol
