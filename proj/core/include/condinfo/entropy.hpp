#pragma once

#include "condinfo/distribution.hpp"
#include "condinfo/log_real.hpp"
#include "condinfo/measure.hpp"

#include <array>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace condinfo {

/// Subset entropies H(S) for every nonempty S, indexed by mask (entry 0 is H(empty) = 0).
class EntropyVector {
public:
    EntropyVector(std::vector<std::string> variables, std::vector<LogReal> entries);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t arity() const { return variables_.size(); }
    const LogReal& at(VarSet s) const { return entries_.at(s.mask); }
    const std::vector<LogReal>& entries() const { return entries_; }

    friend bool operator==(const EntropyVector&, const EntropyVector&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<LogReal> entries_;
};

namespace detail {

using ProjectionKey = std::array<ValueId, kMaxVariables>;

struct ProjectionHash {
    std::size_t operator()(const ProjectionKey& key) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto v : key) {
            h ^= v;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

// Marginal counts of the projection onto s, grouped by a hash map keyed on the
// projected tuple. Hash is a template parameter so tests can force collisions.
template <typename Hash = ProjectionHash>
std::vector<std::uint64_t> marginal_counts(const JointDistribution& dist, VarSet s, Hash hash = {})
{
    std::unordered_map<ProjectionKey, std::uint64_t, Hash> groups(0, std::move(hash));
    for (std::size_t i = 0; i < dist.size(); ++i) {
        ProjectionKey key{};
        const auto row = dist.row(i);
        for (std::size_t v = 0; v < dist.arity(); ++v)
            if (s.contains(v))
                key[v] = row[v];
        groups[key] += dist.count(i);
    }
    std::vector<std::uint64_t> out;
    out.reserve(groups.size());
    for (const auto& [key, n] : groups)
        out.push_back(n);
    return out;
}

// H = log2(total) - (1/total) * sum_m m*log2(m), grouping equal counts first.
LogReal entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t total);

}  // namespace detail

// Exact entropy of the marginal on s. Throws if s is empty or out of range.
LogReal subset_entropy(const JointDistribution& dist, VarSet s);

EntropyVector entropy_vector(const JointDistribution& dist);

// sum_S coeff_S * H(S). Throws std::invalid_argument on variable mismatch.
LogReal eval_measure(const EntropyVector& v, const MeasureExpression& m);

struct PremiseResiduals {
    std::vector<std::pair<std::string, LogReal>> terms;
    LogReal sum;
};

// The six quantities whose vanishing is the premise of the weak conditional
// statement, in the order I(A;B|C), I(A;B|D), H(C|A,B), I(C;D|A), I(C;D|B),
// I(A;B). Requires variables named A, B, C, D in that order.
PremiseResiduals premise_residuals(const EntropyVector& v);

// The measure expressions behind premise_residuals, same order and names.
std::vector<std::pair<std::string, MeasureExpression>> premise_measures();

}  // namespace condinfo
