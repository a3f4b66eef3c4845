#include "condinfo/derivability.hpp"

#include "condinfo/simplex.hpp"

#include <stdexcept>

namespace condinfo {

Rational evaluate_at(const MeasureExpression& m, const std::vector<Rational>& point)
{
    Rational out = 0;
    for (const auto& [s, k] : m.coefficients())
        out += k * point.at(s.mask - 1);
    return out;
}

bool verify_certificate(const DerivabilityVerdict& v, const MeasureExpression& m,
                        const std::vector<MeasureExpression>& eqs)
{
    if (!v.implied() || v.multipliers.size() != eqs.size())
        return false;
    const auto elementals = elemental_inequalities(m.variables());
    MeasureExpression sum(m.variables());
    std::size_t next = 0;
    for (const auto& e : elementals) {
        if (next < v.certificate.size() && v.certificate[next].first == e.id()) {
            if (v.certificate[next].second < 0)
                return false;
            sum += v.certificate[next].second * e.functional;
            ++next;
        }
    }
    if (next != v.certificate.size())
        return false;
    for (std::size_t j = 0; j < eqs.size(); ++j)
        sum += v.multipliers[j] * eqs[j];
    return sum == m;
}

bool verify_witness(const DerivabilityVerdict& v, const MeasureExpression& m,
                    const std::vector<MeasureExpression>& eqs)
{
    if (v.implied() || !v.witness)
        return false;
    const auto& point = *v.witness;
    if (point.size() != (std::size_t{1} << m.arity()) - 1)
        return false;
    for (const auto& e : elemental_inequalities(m.variables()))
        if (evaluate_at(e.functional, point) < 0)
            return false;
    for (const auto& eq : eqs)
        if (evaluate_at(eq, point) != 0)
            return false;
    return evaluate_at(m, point) < 0;
}

DerivabilityVerdict implied_with_equalities(const MeasureExpression& m, const std::vector<MeasureExpression>& eqs)
{
    for (const auto& eq : eqs)
        if (eq.variables() != m.variables())
            throw std::invalid_argument("equality constraint over different variables");

    const auto elementals = elemental_inequalities(m.variables());
    const std::size_t rows = (std::size_t{1} << m.arity()) - 1;
    const std::size_t cols = elementals.size() + 2 * eqs.size();

    // Row r is the coefficient of H(S) with S.mask = r + 1. The free
    // multiplier pairs come first, so Bland's rule prefers them on ties.
    const std::size_t offset = 2 * eqs.size();
    RationalMatrix a(rows, std::vector<Rational>(cols));
    auto put = [&](std::size_t col, const MeasureExpression& f, int sign) {
        for (const auto& [s, k] : f.coefficients())
            a[s.mask - 1][col] = sign * k;
    };
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        put(2 * j, eqs[j], 1);
        put(2 * j + 1, eqs[j], -1);
    }
    for (std::size_t e = 0; e < elementals.size(); ++e)
        put(offset + e, elementals[e].functional, 1);
    std::vector<Rational> b(rows);
    for (const auto& [s, k] : m.coefficients())
        b[s.mask - 1] = k;

    const auto lp = solve_feasibility(a, b);

    DerivabilityVerdict verdict;
    verdict.variables = m.variables();
    verdict.pivots = lp.pivots;
    if (lp.feasible) {
        verdict.status = DerivabilityVerdict::Status::implied;
        for (std::size_t e = 0; e < elementals.size(); ++e)
            if (lp.solution[offset + e] != 0)
                verdict.certificate.emplace_back(elementals[e].id(), lp.solution[offset + e]);
        for (std::size_t j = 0; j < eqs.size(); ++j)
            verdict.multipliers.push_back(lp.solution[2 * j] - lp.solution[2 * j + 1]);
        if (!verify_certificate(verdict, m, eqs))
            throw std::logic_error("simplex certificate failed exact re-verification");
    } else {
        verdict.status = DerivabilityVerdict::Status::not_implied;
        verdict.witness = lp.farkas;
        if (!verify_witness(verdict, m, eqs))
            throw std::logic_error("Farkas witness failed exact re-verification");
    }
    return verdict;
}

DerivabilityVerdict implied_shannon(const MeasureExpression& m)
{
    return implied_with_equalities(m, {});
}

}  // namespace condinfo
