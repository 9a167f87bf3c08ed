#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fatness {

using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(long n);
Integer binomial(long n, long k);

/// num / den in lowest terms; throws InvalidArgument for a zero denominator.
Rational fraction(const Integer& num, const Integer& den);

/// Parses "a", "-a", "a/b"; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidArgument : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct UnsupportedGroup : Error {
    using Error::Error;
};
struct ComplexityLimit : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    ZeroVector() : Error("zero vector") {}
};

}  // namespace fatness
