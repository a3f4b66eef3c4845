#include "condinfo/elemental.hpp"

#include <stdexcept>

namespace condinfo {

namespace {

std::string letter_list(VarSet s, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t v = 0; v < names.size(); ++v) {
        if (!s.contains(v))
            continue;
        if (!out.empty())
            out += ',';
        out += names[v];
    }
    return out;
}

}  // namespace

std::string ElementalInequality::id() const
{
    const auto& names = functional.variables();
    if (kind == Kind::monotonicity) {
        const auto rest = VarSet::full(names.size()) - VarSet::single(i);
        return "H(" + names[i] + (rest.empty() ? "" : "|" + letter_list(rest, names)) + ")";
    }
    return "I(" + names[i] + ";" + names[j] + (given.empty() ? "" : "|" + letter_list(given, names)) + ")";
}

std::vector<ElementalInequality> elemental_inequalities(const std::vector<std::string>& variables)
{
    const std::size_t n = variables.size();
    if (n < 2 || n > kMaxVariables)
        throw std::invalid_argument("elemental inequalities need between 2 and 5 variables");
    const auto all = VarSet::full(n);

    std::vector<ElementalInequality> out;
    for (std::size_t i = 0; i < n; ++i) {
        const auto rest = all - VarSet::single(i);
        out.push_back({ElementalInequality::Kind::monotonicity, i, i, rest,
                       entropy_term(variables, VarSet::single(i), rest)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto others = all - VarSet::single(i) - VarSet::single(j);
            for (std::uint32_t k = 0; k <= all.mask; ++k) {
                const VarSet given(k);
                if (!given.subset_of(others))
                    continue;
                out.push_back({ElementalInequality::Kind::mutual_information, i, j, given,
                               mutual_term(variables, VarSet::single(i), VarSet::single(j), given)});
            }
        }
    }
    return out;
}

std::vector<ElementalInequality> elemental_inequalities(std::size_t n)
{
    return elemental_inequalities(default_variable_names(n));
}

}  // namespace condinfo
