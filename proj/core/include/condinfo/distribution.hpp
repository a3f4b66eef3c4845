#pragma once

#include "condinfo/var_set.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace condinfo {

using ValueId = std::uint32_t;

/// A finite joint distribution with probabilities count / total.
///
/// Outcomes are stored flat: row i occupies values()[i*arity, (i+1)*arity).
/// Construction validates that counts are positive, rows are distinct, and
/// every row has one value per variable; total is the sum of counts.
class JointDistribution {
public:
    JointDistribution(std::vector<std::string> variables, std::vector<ValueId> values,
                      std::vector<std::uint64_t> counts);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t arity() const { return variables_.size(); }
    std::size_t size() const { return counts_.size(); }
    std::uint64_t total() const { return total_; }

    std::span<const ValueId> row(std::size_t i) const
    {
        return {values_.data() + i * arity(), arity()};
    }
    std::uint64_t count(std::size_t i) const { return counts_[i]; }

    std::span<const ValueId> values() const { return values_; }
    std::span<const std::uint64_t> counts() const { return counts_; }

private:
    std::vector<std::string> variables_;
    std::vector<ValueId> values_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

}  // namespace condinfo
