#pragma once

#include "condinfo/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace condinfo {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Closed rational enclosure [lower, upper] of a real number.
struct Enclosure {
    Rational lower;
    Rational upper;
};

/// An exact real of the form r + sum_p c_p * log2(p) with r, c_p rational and
/// p ranging over odd primes.
///
/// The form is kept canonical: no zero coefficient is stored and log2(2) is
/// folded into the rational part. Since {1} together with {log2 p : p odd
/// prime} is linearly independent over the rationals, two values are equal
/// exactly when their canonical forms coincide, so equality and the zero test
/// are syntactic. Ordering goes through sign(), which refines rigorous
/// enclosures of each log2(p).
class LogReal {
public:
    using LogMap = std::map<std::uint64_t, Rational>;

    LogReal() = default;
    LogReal(Rational r);  // NOLINT: rationals embed implicitly
    LogReal(long r) : LogReal(Rational(r)) {}  // NOLINT
    LogReal(int r) : LogReal(Rational(r)) {}   // NOLINT

    // Exact log2(n) by trial-division factorization. Throws on n == 0.
    static LogReal log2_of(std::uint64_t n);

    const Rational& rational_part() const { return rational_; }
    const LogMap& log_coeffs() const { return logs_; }
    bool is_zero() const { return rational_ == 0 && logs_.empty(); }

    LogReal& operator+=(const LogReal& other);
    LogReal& operator-=(const LogReal& other);
    LogReal& operator*=(const Rational& factor);

    friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
    friend LogReal operator-(LogReal a, const LogReal& b) { return a -= b; }
    friend LogReal operator*(LogReal a, const Rational& k) { return a *= k; }
    friend LogReal operator*(const Rational& k, LogReal a) { return a *= k; }
    LogReal operator-() const;

    friend bool operator==(const LogReal& a, const LogReal& b)
    {
        return a.rational_ == b.rational_ && a.logs_ == b.logs_;
    }

    // Rigorous enclosure using log2 bounds with at least `fraction_bits`
    // fractional bits per prime.
    Enclosure enclose(unsigned fraction_bits) const;

    // Exact sign. Refinement starts at 64 fractional bits and doubles until
    // the enclosure excludes zero; it terminates for every nonzero value.
    Sign sign() const;

    // Nearest double (computed from a 128-bit enclosure).
    double to_double() const;

    // Human-readable form such as "2 + log2(3) - 1/2*log2(5)".
    std::string to_string() const;

private:
    void add_log(std::uint64_t prime, const Rational& coeff);

    Rational rational_;
    LogMap logs_;
};

// Three-way exact comparison via sign(a - b).
Sign compare(const LogReal& a, const LogReal& b);

inline bool operator<(const LogReal& a, const LogReal& b) { return compare(a, b) == Sign::negative; }
inline bool operator>(const LogReal& a, const LogReal& b) { return compare(a, b) == Sign::positive; }
inline bool operator<=(const LogReal& a, const LogReal& b) { return compare(a, b) != Sign::positive; }
inline bool operator>=(const LogReal& a, const LogReal& b) { return compare(a, b) != Sign::negative; }

// Prime factorization by trial division, ascending primes with multiplicity.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

}  // namespace condinfo
