#include "polycol/exppoly.hpp"

#include <sstream>

#include "polycol/rational.hpp"

namespace polycol {

namespace {

Rational binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

std::vector<std::vector<int>> exponents(std::size_t m) {
  std::vector<std::vector<int>> out;
  out.emplace_back(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> e(m, 0);
    e[i] = 1;
    out.push_back(e);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::vector<int> e(m, 0);
      e[i] += 1;
      e[j] += 1;
      out.push_back(e);
    }
  return out;
}

}  // namespace

ContextPtr ExpContext::create(FieldPtr k, std::vector<Elem> bases, std::vector<std::string> names) {
  std::shared_ptr<ExpContext> c(new ExpContext());
  c->k_ = std::move(k);
  for (auto& b : bases)
    if (b.field() == nullptr) b = Elem(c->k_, b.rational_value());
  c->bases_ = std::move(bases);
  if (names.empty())
    for (std::size_t i = 0; i < c->bases_.size(); ++i) names.push_back("b" + std::to_string(i));
  c->names_ = std::move(names);

  for (const auto& e : exponents(c->bases_.size())) {
    Elem v(c->k_, Rational(1));
    int deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) v = v * c->bases_[i].pow(static_cast<unsigned long>(e[i]));
      deg += e[i];
    }
    int found = -1;
    for (std::size_t j = 0; j < c->monos_.size(); ++j)
      if (c->monos_[j].value == v) {
        found = static_cast<int>(j);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(c->monos_.size());
      c->monos_.push_back({e, v, deg});
    }
    c->index_[e] = found;
  }

  // Product table on canonical representatives; -1 when the degree exceeds 2.
  const std::size_t n = c->monos_.size();
  c->times_.assign(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> e = c->monos_[a].exp;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += c->monos_[b].exp[i];
      auto it = c->index_.find(e);
      if (it != c->index_.end()) {
        c->times_[a][b] = it->second;
        continue;
      }
      // A higher-degree product may still coincide with a stored value.
      Elem v = c->monos_[a].value * c->monos_[b].value;
      for (std::size_t j = 0; j < n; ++j)
        if (c->monos_[j].value == v) {
          c->times_[a][b] = static_cast<int>(j);
          break;
        }
    }
  return c;
}

int ExpContext::index(const std::vector<int>& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw DomainError("exponent vector outside the context");
  return it->second;
}

int ExpContext::times(int a, int b) const {
  int r = times_[a][b];
  if (r < 0) throw DomainError("exponential degree exceeds 2");
  return r;
}

bool ExpContext::all_real() const {
  for (const auto& b : bases_)
    if (!b.is_real()) return false;
  return true;
}

std::string ExpContext::mono_str(int i) const {
  const auto& e = monos_[i].exp;
  std::string s;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (!e[j]) continue;
    if (!s.empty()) s += "*";
    s += names_[j];
    if (e[j] > 1) s += "^" + std::to_string(e[j]);
  }
  return s.empty() ? "1" : s;
}

ContextPtr ExpContext::powered(unsigned q) const {
  std::lock_guard<std::mutex> lk(powered_mu_);
  if (auto it = powered_.find(q); it != powered_.end()) return it->second;
  std::vector<Elem> b;
  std::vector<std::string> nm;
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    b.push_back(bases_[i].pow(q));
    nm.push_back(q == 1 ? names_[i] : names_[i] + "^" + std::to_string(q));
  }
  return powered_[q] = create(k_, std::move(b), std::move(nm));
}

// ---------------------------------------------------------------------------

void ExpPoly::add(const Key& k, const Elem& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

ExpPoly ExpPoly::constant(ContextPtr ctx, const Elem& c) {
  ExpPoly p(ctx);
  p.add({ctx->index(std::vector<int>(ctx->bases().size(), 0)), 0}, c);
  return p;
}

ExpPoly ExpPoly::term(ContextPtr ctx, int mono, int npow, const Elem& c) {
  ExpPoly p(std::move(ctx));
  p.add({mono, npow}, c);
  return p;
}

bool ExpPoly::is_constant() const {
  if (t_.empty()) return true;
  if (t_.size() > 1) return false;
  const auto& [k, c] = *t_.begin();
  return k.second == 0 && ctx_->mono(k.first).value == Elem(1);
}

Elem ExpPoly::constant_value() const {
  if (t_.empty()) return Elem(0);
  return t_.begin()->second;
}

int ExpPoly::degree() const {
  int d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r(ctx_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  if (!a.ctx_) return b;
  ExpPoly r = a;
  for (const auto& [k, c] : b.t_) r.add(k, c);
  return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly r(a.ctx_ ? a.ctx_ : b.ctx_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r.add({r.ctx_->times(ka.first, kb.first), ka.second + kb.second}, ca * cb);
  return r;
}

ExpPoly operator*(const Elem& s, const ExpPoly& a) {
  ExpPoly r(a.ctx_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.t_) r.t_.emplace(k, s * c);
  return r;
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto ib = b.t_.begin();
  for (const auto& [k, c] : a.t_) {
    if (k != ib->first || !(c == ib->second)) return false;
    ++ib;
  }
  return true;
}

namespace {
bool coeffs_less(const Elem& a, const Elem& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational u = a.coeff(i), v = b.coeff(i);
    if (u != v) return u < v;
  }
  return false;
}
}  // namespace

bool operator<(const ExpPoly& a, const ExpPoly& b) {
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) return coeffs_less(ia->second, ib->second);
  }
  return ia == a.t_.end() && ib != b.t_.end();
}

std::optional<Elem> ExpPoly::ratio_to(const ExpPoly& b) const {
  if (t_.empty() || t_.size() != b.t_.size()) return std::nullopt;
  auto ib = b.t_.begin();
  if (t_.begin()->first != ib->first) return std::nullopt;
  Elem q = ib->second / t_.begin()->second;
  for (const auto& [k, c] : t_) {
    if (k != ib->first || !(q * c == ib->second)) return std::nullopt;
    ++ib;
  }
  return q;
}

std::optional<int> ExpPoly::proportional(const ExpPoly& b) const {
  if (t_.empty() || t_.size() != b.t_.size()) return std::nullopt;
  auto ib = b.t_.begin();
  const Elem& fa = t_.begin()->second;
  const Elem& fb = ib->second;
  for (const auto& [k, c] : t_) {
    if (k != ib->first) return std::nullopt;
    ++ib;
  }
  // Cheap numeric rejection before exact products.
  CInterval ea = fa.enclosure(64), eb = fb.enclosure(64);
  ib = b.t_.begin();
  for (const auto& [k, c] : t_) {
    CInterval d = c.enclosure(64) * eb - ib->second.enclosure(64) * ea;
    if (!d.contains_zero()) return std::nullopt;
    ++ib;
  }
  ib = b.t_.begin();
  for (const auto& [k, c] : t_) {
    if (!(c * fb == ib->second * fa)) return std::nullopt;
    ++ib;
  }
  // b = q a with q real: q |fa|^2 = fb conj(fa).
  const auto& k = fa.field();
  if (!k || k->has_conjugation()) return (fb * fa.conj()).sign();
  return (fb * fa).sign();
}

Elem ExpPoly::eval(unsigned long n) const {
  Elem s(ctx_->field(), Rational(0));
  Elem nn(ctx_->field(), Rational(static_cast<long>(n)));
  for (const auto& [k, c] : t_)
    s = s + c * nn.pow(static_cast<unsigned long>(k.second)) * ctx_->mono(k.first).value.pow(n);
  return s;
}

CInterval ExpPoly::enclosure(unsigned long n, mpfr_prec_t prec) const {
  mpfr_prec_t p = prec + 16;
  for (unsigned long m = n; m; m >>= 1) ++p;
  CInterval s(p);
  s.re = Interval(0, p);
  s.im = Interval(0, p);
  Interval nn(static_cast<long>(n), p);
  for (const auto& [k, c] : t_) {
    CInterval t = c.enclosure(p) * pow_ui(ctx_->mono(k.first).value.enclosure(p), n);
    if (k.second) t = pow_ui(nn, static_cast<unsigned long>(k.second)) * t;
    s += t;
  }
  return s;
}

int ExpPoly::sign_at(unsigned long n) const {
  if (t_.empty()) return 0;
  for (mpfr_prec_t p = 64; p <= 1024; p *= 2)
    if (auto s = enclosure(n, p).re.sign()) return *s;
  return eval(n).sign();
}

ExpPoly ExpPoly::substitute(unsigned s, unsigned q, const ContextPtr& target) const {
  ExpPoly r(target);
  for (const auto& [k, c] : t_) {
    const auto& mono = ctx_->mono(k.first);
    int idx = target->index(mono.exp);
    Elem base = c * mono.value.pow(s);
    int j = k.second;
    for (int i = 0; i <= j; ++i) {
      Rational w = binom(j, i);
      Integer sp, qp;
      mpz_ui_pow_ui(sp.get_mpz_t(), s, static_cast<unsigned long>(j - i));
      mpz_ui_pow_ui(qp.get_mpz_t(), q, static_cast<unsigned long>(i));
      w *= Rational(sp * qp);
      r.add({idx, i}, base.scaled(w));
    }
  }
  return r;
}

std::string ExpPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k.second == 1) os << "*n";
    if (k.second > 1) os << "*n^" << k.second;
    std::string m = ctx_->mono_str(k.first);
    if (m != "1") os << "*(" << m << ")^n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

std::string rel_str(ARel r) {
  switch (r) {
    case ARel::Gt: return ">";
    case ARel::Ge: return ">=";
    case ARel::Eq: return "=";
  }
  return "?";
}

bool holds(int sign, ARel rel) {
  switch (rel) {
    case ARel::Gt: return sign > 0;
    case ARel::Ge: return sign >= 0;
    case ARel::Eq: return sign == 0;
  }
  return false;
}

ExpAtomView exp_atom_view(const Atom& at) {
  const auto& ctx = at.f.context();
  ExpAtomView v;
  v.rel = at.rel;
  Elem zero(ctx->field(), Rational(0));
  v.a = v.b = v.c = v.d = v.e = v.f = v.g = zero;
  for (const auto& [k, c] : at.f.terms()) {
    if (k.second != 0) throw DomainError("polynomial factor in an exponential atom");
    const auto& e = ctx->mono(k.first).exp;
    if (e.size() != 3) throw DomainError("atom view needs three bases");
    // e = (rho, alpha, conj alpha) exponents; conjugate-side terms are implied.
    if (e == std::vector<int>{0, 2, 0}) v.a = v.a + c;
    else if (e == std::vector<int>{1, 1, 0}) v.b = v.b + c;
    else if (e == std::vector<int>{2, 0, 0}) v.c = v.c + c;
    else if (e == std::vector<int>{0, 1, 1}) v.d = v.d + c;
    else if (e == std::vector<int>{0, 1, 0}) v.e = v.e + c;
    else if (e == std::vector<int>{1, 0, 0}) v.f = v.f + c;
    else if (e == std::vector<int>{0, 0, 0}) v.g = v.g + c;
  }
  return v;
}

SeqEvaluator::SeqEvaluator(ContextPtr ctx, unsigned long start, mpfr_prec_t prec)
    : ctx_(std::move(ctx)), n_(start), prec_(prec) {
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    vals_.push_back(ctx_->mono(static_cast<int>(i)).value.enclosure(prec_ + 32));
    pows_.push_back(pow_ui(vals_.back(), start));
    if (!vals_.back().im.contains_zero() || vals_.back().im.width_d() > 0) complex_ = true;
  }
}

void SeqEvaluator::advance() {
  ++n_;
  for (std::size_t i = 0; i < vals_.size(); ++i) pows_[i] *= vals_[i];
  // Real widths grow linearly, rectangular complex ones geometrically.
  if (n_ % (complex_ ? 64 : 4096) == 0)
    for (std::size_t i = 0; i < vals_.size(); ++i) pows_[i] = pow_ui(vals_[i], n_);
}

int SeqEvaluator::sign(const ExpPoly& f) {
  if (f.is_zero()) return 0;
  CInterval s(prec_);
  s.re = Interval(0, prec_);
  s.im = Interval(0, prec_);
  Interval nn(static_cast<long>(n_), prec_);
  for (const auto& [k, c] : f.terms()) {
    CInterval t = c.enclosure(prec_) * pows_[k.first];
    if (k.second) t = pow_ui(nn, static_cast<unsigned long>(k.second)) * t;
    s += t;
  }
  if (auto sg = s.re.sign()) return *sg;
  return f.sign_at(n_);
}

}  // namespace polycol
