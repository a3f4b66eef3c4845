#include "condinfo/entropy.hpp"

#include <map>
#include <stdexcept>

namespace condinfo {

EntropyVector::EntropyVector(std::vector<std::string> variables, std::vector<LogReal> entries)
    : variables_(std::move(variables)), entries_(std::move(entries))
{
    check_arity(variables_.size());
    if (entries_.size() != (std::size_t{1} << variables_.size()))
        throw std::invalid_argument("entropy vector needs 2^n entries (including the empty set)");
    if (!entries_[0].is_zero())
        throw std::invalid_argument("H(empty) must be 0");
}

namespace detail {

LogReal entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t total)
{
    std::map<std::uint64_t, std::uint64_t> multiplicity;
    for (auto m : counts)
        ++multiplicity[m];

    LogReal weighted;
    for (const auto& [m, times] : multiplicity) {
        if (m == 1)
            continue;
        // times * m <= total, so the product fits.
        weighted += LogReal::log2_of(m) * Rational(BigInt(times) * BigInt(m));
    }
    return LogReal::log2_of(total) - weighted * (Rational(1) / Rational(BigInt(total)));
}

}  // namespace detail

LogReal subset_entropy(const JointDistribution& dist, VarSet s)
{
    if (s.empty())
        throw std::invalid_argument("subset_entropy needs a nonempty subset");
    if (!s.subset_of(VarSet::full(dist.arity())))
        throw std::out_of_range("subset outside the distribution's variables");
    // Rows are distinct, so the full projection is the outcome table itself.
    if (s == VarSet::full(dist.arity()))
        return detail::entropy_from_counts(dist.counts(), dist.total());
    const auto counts = detail::marginal_counts(dist, s);
    return detail::entropy_from_counts(counts, dist.total());
}

EntropyVector entropy_vector(const JointDistribution& dist)
{
    const std::size_t subsets = std::size_t{1} << dist.arity();
    std::vector<LogReal> entries(subsets);
    for (std::uint32_t mask = 1; mask < subsets; ++mask)
        entries[mask] = subset_entropy(dist, VarSet(mask));
    return EntropyVector(dist.variables(), std::move(entries));
}

LogReal eval_measure(const EntropyVector& v, const MeasureExpression& m)
{
    if (v.variables() != m.variables())
        throw std::invalid_argument("measure and entropy vector have different variables");
    LogReal out;
    for (const auto& [s, k] : m.coefficients())
        out += v.at(s) * k;
    return out;
}

std::vector<std::pair<std::string, MeasureExpression>> premise_measures()
{
    const auto vars = default_variable_names(4);
    const VarSet a = VarSet::single(0), b = VarSet::single(1), c = VarSet::single(2), d = VarSet::single(3);
    return {
        {"I(A;B|C)", mutual_term(vars, a, b, c)},
        {"I(A;B|D)", mutual_term(vars, a, b, d)},
        {"H(C|A,B)", entropy_term(vars, c, a | b)},
        {"I(C;D|A)", mutual_term(vars, c, d, a)},
        {"I(C;D|B)", mutual_term(vars, c, d, b)},
        {"I(A;B)", mutual_term(vars, a, b)},
    };
}

PremiseResiduals premise_residuals(const EntropyVector& v)
{
    if (v.variables() != default_variable_names(4))
        throw std::invalid_argument("premise residuals need variables A, B, C, D");
    PremiseResiduals out;
    for (auto& [name, m] : premise_measures()) {
        auto value = eval_measure(v, m);
        out.sum += value;
        out.terms.emplace_back(name, std::move(value));
    }
    return out;
}

}  // namespace condinfo
