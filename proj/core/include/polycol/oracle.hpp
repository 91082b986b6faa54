#pragma once

#include <optional>
#include <vector>

#include "polycol/spectral.hpp"

namespace polycol {

struct OracleHit {
  unsigned long n;
  Vec point;  // x in P1 with A^n x in P2
};

struct OracleResult {
  std::vector<OracleHit> hits;
  unsigned long scanned_upto = 0;
};

// Exact feasibility of {x in p1, A^n x in p2}. Works in any ambient dimension.
std::optional<Vec> collide_at(const EMatrix& a, const Polytope& p1, const Polytope& p2, unsigned long n);
// Same, with the power already computed.
std::optional<Vec> collide_with(const EMatrix& an, const Polytope& p1, const Polytope& p2);

// All hits for n in 0..n_max, in order; stops after max_hits when nonzero.
OracleResult scan(const EMatrix& a, const Polytope& p1, const Polytope& p2, unsigned long n_max,
                  std::size_t max_hits = 0);

// Decimal rendering of an exact point.
std::string point_str(const Vec& x, int digits = 30);

}  // namespace polycol
