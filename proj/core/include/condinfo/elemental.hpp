#pragma once

#include "condinfo/measure.hpp"

#include <string>
#include <vector>

namespace condinfo {

struct ElementalInequality {
    enum class Kind { monotonicity, mutual_information };

    Kind kind;
    std::size_t i;       // the dropped variable (monotonicity) or first argument
    std::size_t j;       // second argument; unused for monotonicity
    VarSet given;        // K for I(i;j|K); N \ {i} for monotonicity
    MeasureExpression functional;

    // DSL spelling, e.g. "H(A|B,C,D)" or "I(A;B|C)".
    std::string id() const;
};

/// Elemental inequalities of n variables: H(N) - H(N \ {i}) >= 0 for each i,
/// then I(i;j|K) >= 0 for i < j and K ranging over subsets of N \ {i,j} in
/// increasing mask order. n + C(n,2) * 2^(n-2) entries. Throws unless 2 <= n <= 5.
std::vector<ElementalInequality> elemental_inequalities(const std::vector<std::string>& variables);
std::vector<ElementalInequality> elemental_inequalities(std::size_t n);

}  // namespace condinfo
