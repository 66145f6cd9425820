#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace tmg {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

// High-precision float for bound arithmetic with fractional exponents.
// Exact predicates never touch it.
using BigFloat = mp::number<mp::cpp_bin_float<50>, mp::et_off>;

// num/den in canonical reduced form with positive denominator.
// Throws DomainError for den == 0.
Rational make_rational(const Int& num, const Int& den);

// Accepts "p" and "p/q" with optional sign. Throws ParseError.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);
BigFloat to_bigfloat(const Rational& value);

// base^exp for integer exp (negative allowed; base must be nonzero then).
Rational pow_rational(const Rational& base, long exp);

// Exact k-th root of a nonnegative integer, if it is a perfect k-th power.
std::optional<Int> exact_root(const Int& value, unsigned long k);

// base^(p/q) as an exact rational, when representable.
std::optional<Rational> exact_pow(const Rational& base, const Rational& exp);

}  // namespace tmg
