#pragma once

#include <string>
#include <vector>

#include "polycol/algebraic.hpp"
#include "polycol/spectral.hpp"

namespace polycol::testing {

inline EMatrix mat(const std::vector<std::vector<Rational>>& r) {
  EMatrix m = zero_matrix(r.size(), r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) m(i, j) = Elem(r[i][j]);
  return m;
}

inline Vec vec(const std::vector<Rational>& v) {
  Vec out;
  for (const auto& q : v) out.push_back(Elem(q));
  return out;
}

// re + i im as an algebraic number.
inline AlgebraicNumber gaussian(const Rational& re, const Rational& im) {
  if (im == 0) return AlgebraicNumber(re);
  QPoly q({re * re + im * im, -2 * re, Rational(1)});
  for (auto& r : AlgebraicNumber::roots_of(to_primitive(q)))
    if ((r.im() > 0) == (im > 0)) return r;
  throw DomainError("gaussian: no root");
}

inline std::string data_file(const std::string& name) { return std::string(POLYCOL_TEST_DATA) + "/" + name; }

}  // namespace polycol::testing
