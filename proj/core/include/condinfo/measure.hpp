#pragma once

#include "condinfo/rational.hpp"
#include "condinfo/var_set.hpp"

#include <map>
#include <string>
#include <vector>

namespace condinfo {

/// A linear functional over subset entropies: sum_S coeff_S * H(S).
///
/// Canonical by construction: only nonempty subsets, no zero coefficients.
/// The H(empty) = 0 convention lets conditional terms drop out naturally.
class MeasureExpression {
public:
    using CoeffMap = std::map<VarSet, Rational>;

    MeasureExpression() = default;
    explicit MeasureExpression(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t arity() const { return variables_.size(); }
    const CoeffMap& coefficients() const { return coeffs_; }
    Rational coefficient(VarSet s) const;
    bool is_zero() const { return coeffs_.empty(); }

    // coeff_S += k. Empty subsets are ignored.
    void add(VarSet s, const Rational& k);

    MeasureExpression& operator+=(const MeasureExpression& other);
    MeasureExpression& operator-=(const MeasureExpression& other);
    MeasureExpression& operator*=(const Rational& k);

    friend MeasureExpression operator+(MeasureExpression a, const MeasureExpression& b) { return a += b; }
    friend MeasureExpression operator-(MeasureExpression a, const MeasureExpression& b) { return a -= b; }
    friend MeasureExpression operator*(const Rational& k, MeasureExpression a) { return a *= k; }

    friend bool operator==(const MeasureExpression& a, const MeasureExpression& b)
    {
        return a.variables_ == b.variables_ && a.coeffs_ == b.coeffs_;
    }

    // "+1*H(AB) - 2/3*H(C)" style, subsets in mask order; "0" if empty.
    std::string to_string() const;

private:
    void require_same_variables(const MeasureExpression& other) const;

    std::vector<std::string> variables_;
    CoeffMap coeffs_;
};

// H(target | given) = H(target u given) - H(given).
MeasureExpression entropy_term(const std::vector<std::string>& variables, VarSet target, VarSet given = {});

// I(left ; right | given) = H(left u given) + H(right u given) - H(all) - H(given).
MeasureExpression mutual_term(const std::vector<std::string>& variables, VarSet left, VarSet right,
                              VarSet given = {});

std::vector<std::string> default_variable_names(std::size_t n);

}  // namespace condinfo
