// Exact arithmetic helpers on top of GMP: factorials, double factorials,
// and the "p/q" string form used by every exact value in the project.
#pragma once

#include <gmpxx.h>

#include <string>

namespace psi {

using BigInt   = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

// k!! for odd k >= -1, with (-1)!! = 1 so weights like (2d-1)!! stay
// well-defined at d = 0. Even or smaller arguments are rejected.
BigInt double_factorial(long k);

// k!! for any k >= -1 (even arguments allowed, 0!! = (-1)!! = 1).
BigInt double_factorial_any(long k);

BigInt int_pow(unsigned long base, unsigned long exp);

// Canonical rational: lowest terms, positive denominator, zero is 0/1.
Rational rational_of(const BigInt& num, const BigInt& den);

// Parses "p/q" or "p". Rejects empty input, zero denominators and trailing
// garbage.
Rational rational_from_string(const std::string& text);

// Lowest-terms rendering: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

} // namespace psi
