#include "condinfo/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace condinfo {

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    if (text.empty())
        throw fail();

    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+')
        ++pos;
    const auto slash = text.find('/');
    auto all_digits = [&](std::size_t from, std::size_t to) {
        if (from >= to)
            return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                return false;
        return true;
    };
    const std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
    if (!all_digits(pos, num_end))
        throw fail();
    if (slash != std::string_view::npos && !all_digits(slash + 1, text.size()))
        throw fail();

    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw fail();
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

}  // namespace condinfo
