#pragma once

#include <vector>

#include "polycol/interval.hpp"
#include "polycol/poly.hpp"

namespace polycol {

// Closed disc in the complex plane holding exactly one root of a known
// polynomial. Real roots have im == 0 and `real` set; for them the disc is
// read as the real interval [re - rad, re + rad].
struct RootDisc {
  Rational re, im, rad;
  bool real = false;
};

// Certified isolation of all complex roots of a square-free integer
// polynomial. Discs are pairwise disjoint and each radius is at most
// `max_rad` when max_rad > 0. Order: real roots ascending, then non-real
// roots by (re, im).
std::vector<RootDisc> isolate_roots(const ZPoly& p, const Rational& max_rad = 0);

// Shrinks a disc around its root until rad <= target; the result lies inside
// the input disc. p must be square-free.
RootDisc refine_root(const ZPoly& p, const RootDisc& d, const Rational& target);

// Interval enclosure of the root held by `d` (as a rectangle).
CInterval disc_box(const RootDisc& d, mpfr_prec_t prec);

// Interval evaluation of an integer polynomial.
CInterval eval(const ZPoly& p, const CInterval& z);
Interval eval(const ZPoly& p, const Interval& x);

// Cauchy bound: every root has modulus below this.
Rational cauchy_bound(const ZPoly& p);

}  // namespace polycol
