#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycol/geometry.hpp"
#include "polycol/number_field.hpp"

namespace polycol {

using EMatrix = Matrix<Elem>;

EMatrix zero_matrix(std::size_t r, std::size_t c);
EMatrix identity_matrix(std::size_t n);
EMatrix embed_matrix(const EMatrix& m, const FieldPtr& k, const Elem& gen_image);
FieldPtr field_of(const EMatrix& m);
std::optional<EMatrix> try_inverse(const EMatrix& m);
Elem det(const EMatrix& m);
EMatrix power(const EMatrix& m, unsigned long n);

enum class JordanShape { Diagonal, OneBlock, FullBlock };
std::string shape_name(JordanShape s);

// (A^n)_{ij} = sum over terms of coeff * n^npow * eig[eig]^n, valid for all
// n >= 0 when A is invertible.
struct PowerTerm {
  int eig;
  int npow;
  Elem coeff;
};

struct Spectrum {
  FieldPtr field;     // contains the entries and all eigenvalues
  Elem base_image;    // image of the entry field's generator
  EMatrix a;          // the matrix over `field`
  bool complex_pair = false;
  JordanShape shape = JordanShape::Diagonal;
  // Distinct eigenvalues; for a complex pair the order is (rho, alpha,
  // conj alpha) with Im alpha > 0, otherwise real ascending.
  std::vector<Elem> eig;
  std::vector<AlgebraicNumber> eig_alg;
  std::vector<int> mult;
  EMatrix v, b, j;    // a = v j b, b = v^{-1}
  std::vector<std::vector<std::vector<PowerTerm>>> entries;  // needs invertible a

  Elem to_field(const Elem& x) const;
  Vec to_field(const Vec& x) const;
};

Spectrum spectrum(const EMatrix& a);

// Exact inverse; DomainError when singular.
EMatrix invert(const EMatrix& a);

// Singular instance {x in p : a^n x in r} reduced to an invertible one in
// lower dimension, valid for n >= shift (reduced exponent n - shift).
struct Reduction {
  int shift = 0;
  bool nilpotent = false;      // a^n = 0 for n >= shift
  EMatrix b;                   // size 3 - shift, invertible
  Polytope p, r;               // ambient 3 - shift
  bool p_empty = false, r_empty = false;
};

Reduction reduce_singular(const EMatrix& a, const Polytope& p, const Polytope& r);

// diag(1, b) (padded to 3x3) with the polytopes lifted as {1} x p.
struct Lifted {
  EMatrix a;
  Polytope p, r;
};

Lifted lift_dimension(const EMatrix& b, const Polytope& p, const Polytope& r);

}  // namespace polycol
