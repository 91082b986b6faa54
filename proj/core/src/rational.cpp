#include "polycol/rational.hpp"

#include <cctype>

namespace polycol {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    out = Rational(Integer{std::string(num)}, d);
  } else if (dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    Integer whole{ip.empty() ? std::string("0") : std::string(ip)};
    Integer frac{fp.empty() ? std::string("0") : std::string(fp)};
    Integer scale = ipow(10, fp.size());
    out = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    out = Rational(Integer{std::string(s)});
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

long ilog2(const Integer& z) {
  if (z == 0) throw DomainError("ilog2 of zero");
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)) - 1;
}

Integer isqrt_floor(const Integer& z) {
  if (z < 0) throw DomainError("isqrt of negative");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

Integer isqrt_ceil(const Integer& z) {
  Integer r = isqrt_floor(z);
  if (r * r < z) r += 1;
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational qpow(const Rational& base, unsigned long e) {
  Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

long bit_size(const Rational& q) {
  Integer n = abs(q.get_num());
  long nb = n == 0 ? 1 : static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  return nb + static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  // sqrt(n/d) = sqrt(n*d)/d, scaled by 2^bits for accuracy
  Integer s = q.get_num() * q.get_den();
  s <<= 2 * bits;
  Rational r(isqrt_floor(s), q.get_den() << bits);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw DomainError("sqrt of negative rational");
  Integer s = q.get_num() * q.get_den();
  s <<= 2 * bits;
  Rational r(isqrt_ceil(s), q.get_den() << bits);
  r.canonicalize();
  return r;
}

}  // namespace polycol
