#pragma once

#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycol/number_field.hpp"

namespace polycol {

// Monomials b^e = prod bases[i]^e[i] of total degree <= 2 over up to three
// exponential bases. Monomials with equal values share one index.
class ExpContext {
 public:
  struct Mono {
    std::vector<int> exp;
    Elem value;
    int degree;
  };

  static std::shared_ptr<const ExpContext> create(FieldPtr k, std::vector<Elem> bases,
                                                  std::vector<std::string> names = {});

  const FieldPtr& field() const { return k_; }
  const std::vector<Elem>& bases() const { return bases_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return monos_.size(); }
  const Mono& mono(int i) const { return monos_[i]; }
  // Canonical index of an exponent vector.
  int index(const std::vector<int>& e) const;
  int times(int a, int b) const;
  bool all_real() const;
  std::string mono_str(int i) const;

  // Context for the bases raised to q (substitution n = s + q m).
  std::shared_ptr<const ExpContext> powered(unsigned q) const;

 private:
  ExpContext() = default;
  FieldPtr k_;
  std::vector<Elem> bases_;
  std::vector<std::string> names_;
  std::vector<Mono> monos_;          // canonical representatives first-seen order
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> times_;
  mutable std::mutex powered_mu_;
  mutable std::map<unsigned, std::shared_ptr<const ExpContext>> powered_;
};

using ContextPtr = std::shared_ptr<const ExpContext>;

// Finite sum of c * n^j * m^n for monomials m of a context.
class ExpPoly {
 public:
  using Key = std::pair<int, int>;  // (monomial, power of n)

  ExpPoly() = default;
  explicit ExpPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  static ExpPoly constant(ContextPtr ctx, const Elem& c);
  static ExpPoly term(ContextPtr ctx, int mono, int npow, const Elem& c);

  const ContextPtr& context() const { return ctx_; }
  const std::map<Key, Elem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Elem constant_value() const;
  int degree() const;

  ExpPoly operator-() const;
  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(const Elem& s, const ExpPoly& a);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b);
  friend bool operator<(const ExpPoly& a, const ExpPoly& b);

  // Some q with q * a == b, if one exists.
  std::optional<Elem> ratio_to(const ExpPoly& b) const;
  // Sign of the real ratio b / *this when b is a nonzero multiple of *this (both
  // real-valued), without dividing in the field.
  std::optional<int> proportional(const ExpPoly& b) const;

  Elem eval(unsigned long n) const;
  CInterval enclosure(unsigned long n, mpfr_prec_t prec) const;
  // Exact sign of the (real) value at n.
  int sign_at(unsigned long n) const;

  // f(s + q m) as a function of m over ctx->powered(q).
  ExpPoly substitute(unsigned s, unsigned q, const ContextPtr& target) const;

  std::string str() const;

 private:
  ContextPtr ctx_;
  std::map<Key, Elem> t_;
  void add(const Key& k, const Elem& c);
};

enum class ARel { Gt, Ge, Eq };
std::string rel_str(ARel r);

// f(n) rel 0
struct Atom {
  ExpPoly f;
  ARel rel;
};

bool holds(int sign, ARel rel);

struct System {
  std::vector<Atom> atoms;
};

using Disjunction = std::vector<System>;

// View of an atom over bases (rho, alpha, conj alpha) as the coefficients
// A..G of alpha^2n, alpha^n rho^n, rho^2n, |alpha|^2n, alpha^n, rho^n, 1
// (the conjugate terms are implied).
struct ExpAtomView {
  Elem a, b, c, d, e, f, g;
  ARel rel;
};
ExpAtomView exp_atom_view(const Atom& at);

// Incremental evaluation of atoms at consecutive n with interval powers,
// falling back to exact arithmetic when the sign is unresolved.
class SeqEvaluator {
 public:
  SeqEvaluator(ContextPtr ctx, unsigned long start, mpfr_prec_t prec = 128);
  unsigned long n() const { return n_; }
  void advance();
  int sign(const ExpPoly& f);
  bool holds(const Atom& a) { return polycol::holds(sign(a.f), a.rel); }

 private:
  ContextPtr ctx_;
  unsigned long n_;
  mpfr_prec_t prec_;
  bool complex_ = false;
  std::vector<CInterval> vals_, pows_;
};

}  // namespace polycol
