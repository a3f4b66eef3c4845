#include "condinfo/measure.hpp"

#include <sstream>
#include <stdexcept>

namespace condinfo {

std::string format_varset(VarSet s, std::span<const std::string> names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (s.contains(i))
            out += names[i];
    return out;
}

std::vector<std::string> default_variable_names(std::size_t n)
{
    check_arity(n);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.emplace_back(1, static_cast<char>('A' + i));
    return names;
}

MeasureExpression::MeasureExpression(std::vector<std::string> variables) : variables_(std::move(variables))
{
    check_arity(variables_.size());
}

Rational MeasureExpression::coefficient(VarSet s) const
{
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void MeasureExpression::add(VarSet s, const Rational& k)
{
    if (s.empty() || k == 0)
        return;
    if (!s.subset_of(VarSet::full(arity())))
        throw std::out_of_range("subset outside the declared variables");
    auto [it, inserted] = coeffs_.try_emplace(s, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

void MeasureExpression::require_same_variables(const MeasureExpression& other) const
{
    if (variables_ != other.variables_)
        throw std::invalid_argument("measure expressions over different variable sets");
}

MeasureExpression& MeasureExpression::operator+=(const MeasureExpression& other)
{
    require_same_variables(other);
    for (const auto& [s, k] : other.coeffs_)
        add(s, k);
    return *this;
}

MeasureExpression& MeasureExpression::operator-=(const MeasureExpression& other)
{
    require_same_variables(other);
    for (const auto& [s, k] : other.coeffs_)
        add(s, -k);
    return *this;
}

MeasureExpression& MeasureExpression::operator*=(const Rational& k)
{
    if (k == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [s, c] : coeffs_)
        c *= k;
    return *this;
}

std::string MeasureExpression::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, k] : coeffs_) {
        if (!first)
            out << ' ';
        out << (k < 0 ? '-' : '+');
        if (!first)
            out << ' ';
        out << condinfo::to_string(abs(k)) << "*H(" << format_varset(s, variables_) << ')';
        first = false;
    }
    return out.str();
}

MeasureExpression entropy_term(const std::vector<std::string>& variables, VarSet target, VarSet given)
{
    MeasureExpression m(variables);
    m.add(target | given, 1);
    m.add(given, -1);
    return m;
}

MeasureExpression mutual_term(const std::vector<std::string>& variables, VarSet left, VarSet right, VarSet given)
{
    MeasureExpression m(variables);
    m.add(left | given, 1);
    m.add(right | given, 1);
    m.add(left | right | given, -1);
    m.add(given, -1);
    return m;
}

}  // namespace condinfo
