#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycol {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown for malformed user input (files, DSL, JSON values).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an operation is called outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Accepts "p/q", "-p/q", integers and plain decimals such as "1.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// floor(log2 |z|) for z != 0, i.e. bit length minus one.
long ilog2(const Integer& z);
Integer isqrt_ceil(const Integer& z);
Integer isqrt_floor(const Integer& z);
Integer ipow(const Integer& base, unsigned long e);
Rational qpow(const Rational& base, unsigned long e);
Integer binomial(unsigned long n, unsigned long k);

// Bit length of numerator plus denominator, used as an encoding size.
long bit_size(const Rational& q);

// Lower bound for sqrt(q), q >= 0, with relative accuracy about 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits = 64);
Rational sqrt_upper(const Rational& q, unsigned bits = 64);

}  // namespace polycol
