#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace condinfo {

using Rational = mpq_class;
using BigInt = mpz_class;

// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q" with q > 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace condinfo
