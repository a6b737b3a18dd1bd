#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace extremal {

using Rational = mpq_class;
using Integer = mpz_class;

Integer pow_int(const Integer& base, std::uint64_t exponent);
Rational pow_rational(const Rational& base, std::uint64_t exponent);

// "p/q" in lowest terms; integers keep the "/1" so every value has the same
// shape in reports.
std::string to_fraction_string(const Rational& value);
// Accepts "p/q", "p" or a finite decimal such as "0.25". Throws
// std::invalid_argument.
Rational parse_rational(std::string_view text);

// Best rational approximation with denominator <= max_denominator
// (continued-fraction convergents and semiconvergents).
Rational limit_denominator(double value, std::uint64_t max_denominator);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace extremal
