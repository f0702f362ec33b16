#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace adic {

// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// Least common multiple of the denominators of a rational family.
Integer lcm_denominators(const Rational* begin, const Rational* end);

// floor(q) as an integer.
Integer floor_rational(const Rational& q);

bool is_perfect_square(const Integer& n);
bool is_squarefree(const Integer& n);

}  // namespace adic
