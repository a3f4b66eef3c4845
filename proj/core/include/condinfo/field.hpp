#pragma once

#include <cstdint>
#include <optional>

namespace condinfo {

bool is_prime(std::uint64_t n);

// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

using FieldElement = std::uint64_t;

/// The prime field F_q for an odd prime q < 2^32. Elements are reduced
/// representatives in [0, q).
class FieldSize {
public:
    // Throws std::invalid_argument("q must be an odd prime") otherwise.
    explicit FieldSize(std::uint64_t q);

    std::uint64_t q() const { return q_; }

    FieldElement reduce(std::int64_t a) const;
    FieldElement add(FieldElement a, FieldElement b) const { return (a + b) % q_; }
    FieldElement sub(FieldElement a, FieldElement b) const { return (a + q_ - b) % q_; }
    FieldElement neg(FieldElement a) const { return a == 0 ? 0 : q_ - a; }
    FieldElement mul(FieldElement a, FieldElement b) const { return (a * b) % q_; }
    FieldElement pow(FieldElement base, std::uint64_t exponent) const;
    // Throws std::domain_error on zero.
    FieldElement inv(FieldElement a) const;

    // Euler's criterion: a != 0 and a^((q-1)/2) == 1.
    bool is_nonzero_square(FieldElement a) const;

    // A square root of a (Tonelli-Shanks), or nullopt if a is a non-residue.
    std::optional<FieldElement> sqrt(FieldElement a) const;

    friend bool operator==(const FieldSize&, const FieldSize&) = default;

private:
    std::uint64_t q_;
};

inline bool qr_nonzero(FieldElement a, const FieldSize& field)
{
    return field.is_nonzero_square(a);
}

}  // namespace condinfo
