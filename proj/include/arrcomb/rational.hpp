#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace arrcomb {

// GMP keeps mpq_class canonical (gcd 1, positive denominator) as long as every
// value passes through parse_rational or arithmetic, never raw set_str.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p". Throws ParseError on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// "p/q" when the denominator is not 1, otherwise "p".
std::string format_rational(const Rational& value);

Rational dot(const Vector& a, const Vector& b);

bool is_zero(const Vector& v);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace arrcomb
