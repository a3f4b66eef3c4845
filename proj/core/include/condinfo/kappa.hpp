#pragma once

#include "condinfo/entropy.hpp"
#include "condinfo/log_real.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace condinfo {

/// The least kappa >= 0 with star_expression(kappa) >= 0 at a vector, kept as
/// the exact quotient I(C;D) / (six-term premise sum). The quotient of two
/// LogReals is not a LogReal, so both parts are stored.
struct MinKappa {
    enum class Kind { zero, finite, infinite };

    Kind kind = Kind::zero;
    LogReal numerator;    // I(C;D) when finite
    LogReal denominator;  // premise sum when finite

    double to_double() const;
    std::string to_string() const;
};

MinKappa min_kappa(const EntropyVector& v);

// Exact: min_kappa > kappa.
bool exceeds(const MinKappa& value, const Rational& kappa);

// Orders two values by refining enclosures of both quotients. Equal finite
// quotients cannot be told apart this way, so after `max_bits` fractional bits
// this throws std::runtime_error.
Sign compare(const MinKappa& a, const MinKappa& b, unsigned max_bits = 1u << 14);

struct KappaSearchHit {
    std::uint64_t q;
    MinKappa value;
};

// Doubling search over primes (3, next_prime(2q), ...) on the closed-form
// path; the first q with min_kappa(q) > kappa, or nullopt past q_max.
std::optional<KappaSearchHit> find_prime_exceeding(const Rational& kappa, std::uint64_t q_max);

}  // namespace condinfo
