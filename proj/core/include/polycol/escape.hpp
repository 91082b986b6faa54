#pragma once

#include <optional>
#include <vector>

#include "polycol/geometry.hpp"
#include "polycol/spectral.hpp"

namespace polycol {

// Vertices of a bounded nonempty polytope; nullopt when it is unbounded.
std::optional<std::vector<Vec>> polytope_vertices(const Polytope& p);

// An exponent N with A^n P1 and P2 disjoint for every n >= N, read off a
// left eigenvector u: |u.A^n x| = |lambda|^n |u.x| leaves the range of u on
// the target (or, for |lambda| < 1, collapses below it). Needs both
// polytopes bounded; nullopt when no eigenvector separates.
std::optional<unsigned long> escape_bound(const Spectrum& s, const Polytope& p1, const Polytope& p2);

}  // namespace polycol
