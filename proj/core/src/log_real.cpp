#include "condinfo/log_real.hpp"

#include <mpfr.h>

#include <bit>
#include <sstream>
#include <stdexcept>

namespace condinfo {

namespace {

// RAII wrapper around an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
    ~Mpfr() { mpfr_clear(value_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;

    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
};

Rational to_rational(Mpfr& x)
{
    Rational out;
    mpfr_get_q(out.get_mpq_t(), x.get());
    return out;
}

// Bounds lo <= log2(p) <= hi, each with >= fraction_bits fractional bits.
Enclosure log2_bounds(std::uint64_t p, unsigned fraction_bits)
{
    // The integer part of log2(p) is below bit_width(p), which needs bit_width(bit_width(p)) bits.
    const auto prec = static_cast<mpfr_prec_t>(fraction_bits + std::bit_width(std::bit_width(p)));
    Mpfr arg(prec);
    Mpfr lo(prec);
    Mpfr hi(prec);
    mpfr_set_ui(arg.get(), static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_log2(lo.get(), arg.get(), MPFR_RNDD);
    mpfr_log2(hi.get(), arg.get(), MPFR_RNDU);
    return {to_rational(lo), to_rational(hi)};
}

}  // namespace

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("cannot factorize 0");
    std::map<std::uint64_t, unsigned> factors;
    while (n % 2 == 0) {
        ++factors[2];
        n /= 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1)
        ++factors[n];
    return factors;
}

LogReal::LogReal(Rational r) : rational_(std::move(r))
{
    rational_.canonicalize();
}

LogReal LogReal::log2_of(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("log2 of zero is undefined");
    LogReal out;
    for (const auto& [prime, power] : factorize(n)) {
        if (prime == 2)
            out.rational_ += power;
        else
            out.logs_.emplace(prime, Rational(power));
    }
    return out;
}

void LogReal::add_log(std::uint64_t prime, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = logs_.try_emplace(prime, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            logs_.erase(it);
    }
}

LogReal& LogReal::operator+=(const LogReal& other)
{
    rational_ += other.rational_;
    for (const auto& [prime, coeff] : other.logs_)
        add_log(prime, coeff);
    return *this;
}

LogReal& LogReal::operator-=(const LogReal& other)
{
    rational_ -= other.rational_;
    for (const auto& [prime, coeff] : other.logs_)
        add_log(prime, -coeff);
    return *this;
}

LogReal& LogReal::operator*=(const Rational& factor)
{
    if (factor == 0) {
        rational_ = 0;
        logs_.clear();
        return *this;
    }
    rational_ *= factor;
    for (auto& [prime, coeff] : logs_)
        coeff *= factor;
    return *this;
}

LogReal LogReal::operator-() const
{
    LogReal out = *this;
    out *= Rational(-1);
    return out;
}

Enclosure LogReal::enclose(unsigned fraction_bits) const
{
    Enclosure out{rational_, rational_};
    for (const auto& [prime, coeff] : logs_) {
        const auto bounds = log2_bounds(prime, fraction_bits);
        if (coeff > 0) {
            out.lower += coeff * bounds.lower;
            out.upper += coeff * bounds.upper;
        } else {
            out.lower += coeff * bounds.upper;
            out.upper += coeff * bounds.lower;
        }
    }
    return out;
}

Sign LogReal::sign() const
{
    if (logs_.empty())
        return rational_ > 0 ? Sign::positive : (rational_ < 0 ? Sign::negative : Sign::zero);
    for (unsigned bits = 64;; bits *= 2) {
        const auto box = enclose(bits);
        if (box.lower > 0)
            return Sign::positive;
        if (box.upper < 0)
            return Sign::negative;
    }
}

double LogReal::to_double() const
{
    Rational value = rational_;
    if (!logs_.empty()) {
        const auto box = enclose(128);
        value = (box.lower + box.upper) / 2;
    }
    Mpfr x(192);
    mpfr_set_q(x.get(), value.get_mpq_t(), MPFR_RNDN);
    return mpfr_get_d(x.get(), MPFR_RNDN);
}

std::string LogReal::to_string() const
{
    std::ostringstream out;
    bool first = true;
    if (rational_ != 0 || logs_.empty()) {
        out << condinfo::to_string(rational_);
        first = false;
    }
    for (const auto& [prime, coeff] : logs_) {
        Rational mag = abs(coeff);
        if (first)
            out << (coeff < 0 ? "-" : "");
        else
            out << (coeff < 0 ? " - " : " + ");
        if (mag != 1)
            out << condinfo::to_string(mag) << '*';
        out << "log2(" << prime << ')';
        first = false;
    }
    return out.str();
}

Sign compare(const LogReal& a, const LogReal& b)
{
    return (a - b).sign();
}

}  // namespace condinfo
