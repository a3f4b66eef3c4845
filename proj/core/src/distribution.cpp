#include "condinfo/distribution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace condinfo {

JointDistribution::JointDistribution(std::vector<std::string> variables, std::vector<ValueId> values,
                                     std::vector<std::uint64_t> counts)
    : variables_(std::move(variables)), values_(std::move(values)), counts_(std::move(counts))
{
    check_arity(variables_.size());
    const std::size_t n = arity();
    if (values_.size() != counts_.size() * n)
        throw std::invalid_argument("outcome table width does not match the variable count");
    if (counts_.empty())
        throw std::invalid_argument("distribution has no outcomes");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (variables_[i] == variables_[j])
                throw std::invalid_argument("duplicate variable name '" + variables_[i] + "'");

    for (auto c : counts_) {
        if (c == 0)
            throw std::invalid_argument("outcome counts must be positive");
        if (total_ > UINT64_MAX - c)
            throw std::overflow_error("outcome counts overflow 64 bits");
        total_ += c;
    }

    std::vector<std::size_t> order(counts_.size());
    std::iota(order.begin(), order.end(), 0);
    auto row_less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(values_.begin() + a * n, values_.begin() + (a + 1) * n,
                                            values_.begin() + b * n, values_.begin() + (b + 1) * n);
    };
    std::sort(order.begin(), order.end(), row_less);
    for (std::size_t k = 1; k < order.size(); ++k)
        if (!row_less(order[k - 1], order[k]))
            throw std::invalid_argument("duplicate outcome tuple in distribution");
}

}  // namespace condinfo
