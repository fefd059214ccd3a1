#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eroot {

// Arbitrary-size integers and canonical rationals, backed by GMP.
// Every Rational in this library is kept canonical: denominator > 0 and
// gcd(|num|, den) = 1.
using Int = mpz_class;
using Rational = mpq_class;

// Thrown when a ball-arithmetic result is too wide for the caller's
// tolerance and the escalation ceiling has been reached.
struct insufficient_precision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an exact construction violates one of its own structural
// guarantees (an implementation bug, not bad input).
struct construction_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Thrown when an upward integer search hits its configured ceiling.
struct search_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// num/den reduced to canonical form (den > 0, coprime).
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

// Exact i!, memoized up to the largest index requested so far.
// Thread-safe; the returned reference stays valid for the process lifetime.
const Int& factorial(unsigned long i);

// Exact binomial coefficient.
Int binomial(unsigned long n, unsigned long k);

// Exact base^exp for integer base.
Int pow_int(const Int& base, unsigned long exp);

// Exact q^exp (exp >= 0).
Rational pow_rational(const Rational& q, unsigned long exp);

std::string to_string(const Int& z);
std::string to_string(const Rational& q);

}  // namespace eroot
