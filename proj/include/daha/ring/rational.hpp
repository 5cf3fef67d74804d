#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace daha {

// GMP keeps mpq values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);

}  // namespace daha
