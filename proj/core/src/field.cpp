#include "condinfo/field.hpp"

#include <stdexcept>

namespace condinfo {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t next_prime(std::uint64_t n)
{
    while (!is_prime(n))
        ++n;
    return n;
}

FieldSize::FieldSize(std::uint64_t q) : q_(q)
{
    if (q < 3 || q >= (std::uint64_t{1} << 32) || !is_prime(q))
        throw std::invalid_argument("q must be an odd prime");
}

FieldElement FieldSize::reduce(std::int64_t a) const
{
    const auto m = static_cast<std::int64_t>(q_);
    auto r = a % m;
    return static_cast<FieldElement>(r < 0 ? r + m : r);
}

FieldElement FieldSize::pow(FieldElement base, std::uint64_t exponent) const
{
    FieldElement result = 1 % q_;
    base %= q_;
    while (exponent > 0) {
        if (exponent & 1)
            result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

FieldElement FieldSize::inv(FieldElement a) const
{
    if (a % q_ == 0)
        throw std::domain_error("zero has no inverse");
    return pow(a, q_ - 2);
}

bool FieldSize::is_nonzero_square(FieldElement a) const
{
    a %= q_;
    return a != 0 && pow(a, (q_ - 1) / 2) == 1;
}

std::optional<FieldElement> FieldSize::sqrt(FieldElement a) const
{
    a %= q_;
    if (a == 0)
        return FieldElement{0};
    if (!is_nonzero_square(a))
        return std::nullopt;
    if (q_ % 4 == 3)
        return pow(a, (q_ + 1) / 4);

    // q - 1 = odd * 2^twos
    std::uint64_t odd = q_ - 1;
    unsigned twos = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++twos;
    }
    FieldElement z = 2;
    while (is_nonzero_square(z))
        ++z;

    unsigned m = twos;
    FieldElement c = pow(z, odd);
    FieldElement t = pow(a, odd);
    FieldElement r = pow(a, (odd + 1) / 2);
    while (t != 1) {
        unsigned i = 0;
        for (FieldElement t2 = t; t2 != 1; t2 = mul(t2, t2))
            ++i;
        FieldElement b = c;
        for (unsigned k = 0; k + i + 1 < m; ++k)
            b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

}  // namespace condinfo
