#include "polycol/oracle.hpp"

#include <sstream>

namespace polycol {

std::optional<Vec> collide_with(const EMatrix& an, const Polytope& p1, const Polytope& p2) {
  const std::size_t d = an.cols();
  std::vector<LinCon> sys = p1.constraints();
  for (const auto& h : p2.hs) {
    // normal . (A^n x) = (A^n^T normal) . x
    Vec row(d, Elem(0));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < an.rows(); ++i) row[j] = row[j] + h.normal[i] * an(i, j);
    sys.push_back({row, h.offset, h.equality ? Rel::Eq : Rel::Ge});
  }
  return fm_feasible(sys, d);
}

std::optional<Vec> collide_at(const EMatrix& a, const Polytope& p1, const Polytope& p2, unsigned long n) {
  return collide_with(power(a, n), p1, p2);
}

OracleResult scan(const EMatrix& a, const Polytope& p1, const Polytope& p2, unsigned long n_max,
                  std::size_t max_hits) {
  OracleResult r;
  EMatrix an = identity_matrix(a.rows());
  for (unsigned long n = 0;; ++n) {
    r.scanned_upto = n;
    if (auto x = collide_with(an, p1, p2)) {
      r.hits.push_back({n, std::move(*x)});
      if (max_hits && r.hits.size() >= max_hits) break;
    }
    if (n == n_max) break;
    an = a * an;
  }
  return r;
}

std::string point_str(const Vec& x, int digits) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    CInterval e = x[i].enclosure(4 * digits + 16);
    mpfr_t m;
    mpfr_init2(m, 4 * digits + 16);
    Rational mid = e.re.mid();
    mpfr_set_q(m, mid.get_mpq_t(), MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, m);
    mpfr_clear(m);
    os << buf;
  }
  os << ")";
  return os.str();
}

}  // namespace polycol
