#include "condinfo/entropy.hpp"
#include "condinfo/geometry.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace condinfo;

namespace {

JointDistribution one_variable(std::vector<std::uint64_t> counts)
{
    std::vector<ValueId> values;
    for (ValueId i = 0; i < counts.size(); ++i)
        values.push_back(i);
    return JointDistribution({"X"}, std::move(values), std::move(counts));
}

JointDistribution copied_bit()
{
    return JointDistribution({"X", "Y"}, {0, 0, 1, 1}, {1, 1});
}

JointDistribution independent_bits()
{
    return JointDistribution({"X", "Y"}, {0, 0, 0, 1, 1, 0, 1, 1}, {1, 1, 1, 1});
}

// n variables with random small supports and counts.
JointDistribution random_distribution(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<ValueId> value(0, 2);
    std::uniform_int_distribution<std::uint64_t> count(1, 6);
    std::uniform_int_distribution<int> rows(1, 12);
    std::set<std::vector<ValueId>> seen;
    std::vector<ValueId> values;
    std::vector<std::uint64_t> counts;
    const int target = rows(rng);
    for (int r = 0; r < target; ++r) {
        std::vector<ValueId> row(n);
        for (auto& v : row)
            v = value(rng);
        if (!seen.insert(row).second)
            continue;
        values.insert(values.end(), row.begin(), row.end());
        counts.push_back(count(rng));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.emplace_back(1, static_cast<char>('A' + i));
    return JointDistribution(names, values, counts);
}

}  // namespace

TEST(JointDistribution, RejectsBadTables)
{
    EXPECT_THROW(JointDistribution({"X"}, {0, 0}, {1, 1}), std::invalid_argument);  // duplicate row
    EXPECT_THROW(JointDistribution({"X"}, {0}, {0}), std::invalid_argument);        // zero count
    EXPECT_THROW(JointDistribution({"X", "Y"}, {0}, {1}), std::invalid_argument);   // ragged
    EXPECT_THROW(JointDistribution({"X", "X"}, {0, 1}, {1}), std::invalid_argument);
    EXPECT_THROW(JointDistribution({"A", "B", "C", "D", "E", "F"}, {0, 0, 0, 0, 0, 0}, {1}),
                 std::invalid_argument);
    EXPECT_THROW(JointDistribution({"X"}, {}, {}), std::invalid_argument);
}

TEST(SubsetEntropy, UniformAndSkewed)
{
    EXPECT_EQ(subset_entropy(one_variable({1, 1, 1, 1}), VarSet(1)), LogReal(2));
    EXPECT_EQ(subset_entropy(one_variable({2, 1, 1}), VarSet(1)), LogReal(Rational(3, 2)));
    EXPECT_THROW(subset_entropy(one_variable({1}), VarSet()), std::invalid_argument);
}

TEST(SubsetEntropy, CopyOfABit)
{
    const auto v = entropy_vector(copied_bit());
    EXPECT_EQ(v.at(VarSet(1)), LogReal(1));
    EXPECT_EQ(v.at(VarSet(2)), LogReal(1));
    EXPECT_EQ(v.at(VarSet(3)), LogReal(1));
}

TEST(EntropyVector, IndependentBits)
{
    const auto v = entropy_vector(independent_bits());
    EXPECT_EQ(v.at(VarSet(1)), LogReal(1));
    EXPECT_EQ(v.at(VarSet(2)), LogReal(1));
    EXPECT_EQ(v.at(VarSet(3)), LogReal(2));
}

TEST(EntropyVector, ConstructionFullEntryIsLogOfTotal)
{
    const auto dist = build_joint(FieldSize(3));
    EXPECT_EQ(dist.total(), 108u);
    EXPECT_EQ(subset_entropy(dist, VarSet(15)), LogReal::log2_of(108));
}

TEST(EvalMeasure, MutualInformation)
{
    const std::vector<std::string> xy{"X", "Y"};
    const auto mi = mutual_term(xy, VarSet(1), VarSet(2));
    EXPECT_TRUE(eval_measure(entropy_vector(independent_bits()), mi).is_zero());
    EXPECT_EQ(eval_measure(entropy_vector(copied_bit()), mi), LogReal(1));
    EXPECT_THROW(eval_measure(entropy_vector(copied_bit()), mutual_term({"A", "B"}, VarSet(1), VarSet(2))),
                 std::invalid_argument);
}

TEST(EvalMeasure, ConditionalMutualOnConstruction)
{
    const auto v = entropy_vector(build_joint(FieldSize(5)));
    const auto vars = default_variable_names(4);
    EXPECT_EQ(eval_measure(v, mutual_term(vars, VarSet(4), VarSet(8), VarSet(1))),
              LogReal::log2_of(5) - LogReal::log2_of(4));
}

TEST(PremiseResiduals, ConstructionAtThree)
{
    const auto r = premise_residuals(entropy_vector(build_joint(FieldSize(3))));
    ASSERT_EQ(r.terms.size(), 6u);
    EXPECT_EQ(r.terms[2].first, "H(C|A,B)");
    EXPECT_TRUE(r.terms[2].second.is_zero());
    EXPECT_EQ(r.terms[3].first, "I(C;D|A)");
    EXPECT_EQ(r.terms[3].second, LogReal::log2_of(3) - LogReal(1));

    LogReal sum;
    for (const auto& [name, value] : r.terms)
        sum += value;
    EXPECT_EQ(sum, r.sum);
}

TEST(PremiseResiduals, IndependentPointsAndConstantLineVanish)
{
    // A, B, D independent uniform bits; C constant.
    std::vector<ValueId> values;
    for (ValueId m = 0; m < 8; ++m)
        for (ValueId x : {m & 1u, (m >> 1) & 1u, 0u, (m >> 2) & 1u})
            values.push_back(x);
    const JointDistribution dist(default_variable_names(4), values, std::vector<std::uint64_t>(8, 1));
    const auto r = premise_residuals(entropy_vector(dist));
    for (const auto& [name, value] : r.terms)
        EXPECT_TRUE(value.is_zero()) << name;
    EXPECT_TRUE(r.sum.is_zero());
}

TEST(PremiseResiduals, RequiresABCD)
{
    EXPECT_THROW(premise_residuals(entropy_vector(copied_bit())), std::invalid_argument);
}

TEST(EntropyProperty, PolymatroidAxiomsHoldExactly)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto v = entropy_vector(random_distribution(rng, n));
        const std::uint32_t full = (1u << n) - 1;
        for (std::uint32_t s = 0; s <= full; ++s) {
            EXPECT_NE(v.at(VarSet(s)).sign(), Sign::negative);
            for (std::uint32_t t = 0; t <= full; ++t) {
                if ((s & ~t) == 0)
                    EXPECT_LE(v.at(VarSet(s)), v.at(VarSet(t)));
                EXPECT_GE(v.at(VarSet(s)) + v.at(VarSet(t)), v.at(VarSet(s | t)) + v.at(VarSet(s & t)));
            }
        }
    }
}

TEST(EntropyProperty, MatchesFloatingPointOracle)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto dist = random_distribution(rng, 3);
        const auto v = entropy_vector(dist);
        for (std::uint32_t s = 1; s < 8; ++s) {
            std::map<std::vector<ValueId>, std::uint64_t> groups;
            for (std::size_t i = 0; i < dist.size(); ++i) {
                std::vector<ValueId> key;
                for (std::size_t k = 0; k < 3; ++k)
                    if ((s >> k) & 1u)
                        key.push_back(dist.row(i)[k]);
                groups[key] += dist.count(i);
            }
            std::vector<std::uint64_t> counts;
            for (const auto& [key, c] : groups)
                counts.push_back(c);
            EXPECT_NEAR(v.at(VarSet(s)).to_double(), oracle::entropy_bits(counts), 1e-12);
        }
    }
}

TEST(EntropyProperty, RelabelingValuesChangesNothing)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto dist = random_distribution(rng, 4);
        std::vector<ValueId> relabeled(dist.values().begin(), dist.values().end());
        // Variable k gets the bijection v -> 7*v + k + 100.
        for (std::size_t i = 0; i < relabeled.size(); ++i)
            relabeled[i] = 7 * relabeled[i] + static_cast<ValueId>(i % 4) + 100;
        const JointDistribution other(dist.variables(), relabeled,
                                      std::vector<std::uint64_t>(dist.counts().begin(), dist.counts().end()));
        EXPECT_EQ(entropy_vector(dist), entropy_vector(other));
    }
}

TEST(EntropyProperty, AllDistinctFullSetIsLogTotal)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const auto dist = random_distribution(rng, 3);
        std::vector<std::uint64_t> ones(dist.size(), 1);
        const JointDistribution uniform(dist.variables(), std::vector<ValueId>(dist.values().begin(), dist.values().end()),
                                        ones);
        EXPECT_EQ(subset_entropy(uniform, VarSet(7)), LogReal::log2_of(uniform.total()));
    }
}

TEST(MarginalCounts, ConstantHashStillGroupsCorrectly)
{
    struct Collide {
        std::size_t operator()(const detail::ProjectionKey&) const noexcept { return 42; }
    };
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto dist = random_distribution(rng, 4);
        for (std::uint32_t s = 1; s < 16; ++s) {
            auto good = detail::marginal_counts(dist, VarSet(s));
            auto bad = detail::marginal_counts(dist, VarSet(s), Collide{});
            std::sort(good.begin(), good.end());
            std::sort(bad.begin(), bad.end());
            EXPECT_EQ(good, bad);
        }
    }
}
