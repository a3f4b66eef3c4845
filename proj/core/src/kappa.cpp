#include "condinfo/kappa.hpp"

#include "condinfo/geometry.hpp"

#include <limits>
#include <stdexcept>

namespace condinfo {

MinKappa min_kappa(const EntropyVector& v)
{
    const auto vars = default_variable_names(4);
    const auto numerator = eval_measure(v, mutual_term(vars, VarSet::single(2), VarSet::single(3)));
    const auto denominator = premise_residuals(v).sum;

    MinKappa out;
    if (numerator.sign() != Sign::positive)
        return out;
    if (denominator.is_zero()) {
        out.kind = MinKappa::Kind::infinite;
        return out;
    }
    out.kind = MinKappa::Kind::finite;
    out.numerator = numerator;
    out.denominator = denominator;
    return out;
}

double MinKappa::to_double() const
{
    switch (kind) {
    case Kind::zero:
        return 0.0;
    case Kind::infinite:
        return std::numeric_limits<double>::infinity();
    case Kind::finite:
        break;
    }
    return numerator.to_double() / denominator.to_double();
}

std::string MinKappa::to_string() const
{
    switch (kind) {
    case Kind::zero:
        return "0";
    case Kind::infinite:
        return "inf";
    case Kind::finite:
        break;
    }
    return "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
}

bool exceeds(const MinKappa& value, const Rational& kappa)
{
    switch (value.kind) {
    case MinKappa::Kind::zero:
        return kappa < 0;
    case MinKappa::Kind::infinite:
        return true;
    case MinKappa::Kind::finite:
        break;
    }
    // denominator > 0
    return (value.numerator - value.denominator * kappa).sign() == Sign::positive;
}

Sign compare(const MinKappa& a, const MinKappa& b, unsigned max_bits)
{
    auto rank = [](MinKappa::Kind k) { return k == MinKappa::Kind::zero ? 0 : k == MinKappa::Kind::finite ? 1 : 2; };
    if (a.kind != b.kind || a.kind != MinKappa::Kind::finite) {
        const int d = rank(a.kind) - rank(b.kind);
        return d < 0 ? Sign::negative : d > 0 ? Sign::positive : Sign::zero;
    }
    if (a.numerator == b.numerator && a.denominator == b.denominator)
        return Sign::zero;

    // Quotient enclosures; numerators and denominators are positive.
    auto quotient = [](const MinKappa& k, unsigned bits) {
        const auto num = k.numerator.enclose(bits);
        const auto den = k.denominator.enclose(bits);
        if (den.lower <= 0 || num.lower < 0)
            return Enclosure{Rational(0), Rational(-1)};  // not yet informative
        return Enclosure{num.lower / den.upper, num.upper / den.lower};
    };
    for (unsigned bits = 64; bits <= max_bits; bits *= 2) {
        const auto qa = quotient(a, bits);
        const auto qb = quotient(b, bits);
        if (qa.upper < qa.lower || qb.upper < qb.lower)
            continue;
        if (qa.upper < qb.lower)
            return Sign::negative;
        if (qb.upper < qa.lower)
            return Sign::positive;
    }
    throw std::runtime_error("could not separate min_kappa values " + a.to_string() + " and " + b.to_string());
}

std::optional<KappaSearchHit> find_prime_exceeding(const Rational& kappa, std::uint64_t q_max)
{
    for (std::uint64_t q = 3; q <= q_max; q = next_prime(2 * q)) {
        auto value = min_kappa(closed_form_vector(FieldSize(q)));
        if (exceeds(value, kappa))
            return KappaSearchHit{q, std::move(value)};
    }
    return std::nullopt;
}

}  // namespace condinfo
