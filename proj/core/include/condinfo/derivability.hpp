#pragma once

#include "condinfo/elemental.hpp"
#include "condinfo/measure.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace condinfo {

/// Outcome of asking whether m >= 0 follows from the Shannon inequalities
/// (optionally given equalities e_j = 0).
///
/// "implied" is relative to the Shannon cone only. A "not_implied" verdict
/// says nothing about non-Shannon inequalities: the functional may still be
/// valid on all entropic vectors.
struct DerivabilityVerdict {
    enum class Status { implied, not_implied };

    Status status = Status::not_implied;
    std::vector<std::string> variables;
    // Nonzero lambda_e by elemental id, in elemental order (implied only).
    std::vector<std::pair<std::string, Rational>> certificate;
    // mu_j per supplied equality (implied only; empty if none were supplied).
    std::vector<Rational> multipliers;
    // h(S) for masks 1 .. 2^n - 1: all elementals >= 0, equalities = 0, m < 0.
    std::optional<std::vector<Rational>> witness;
    std::size_t pivots = 0;

    bool implied() const { return status == Status::implied; }
};

// Both throw std::logic_error if the LP answer fails exact re-verification.
DerivabilityVerdict implied_shannon(const MeasureExpression& m);
DerivabilityVerdict implied_with_equalities(const MeasureExpression& m, const std::vector<MeasureExpression>& eqs);

// Exact checks used before a verdict is returned; exposed for tests.
bool verify_certificate(const DerivabilityVerdict& v, const MeasureExpression& m,
                        const std::vector<MeasureExpression>& eqs);
bool verify_witness(const DerivabilityVerdict& v, const MeasureExpression& m,
                    const std::vector<MeasureExpression>& eqs);

// sum_S coeff_S * h(S) for a rational point indexed by mask - 1.
Rational evaluate_at(const MeasureExpression& m, const std::vector<Rational>& point);

}  // namespace condinfo
