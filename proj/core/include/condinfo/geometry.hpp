#pragma once

#include "condinfo/distribution.hpp"
#include "condinfo/entropy.hpp"
#include "condinfo/field.hpp"

#include <cstdint>
#include <vector>

namespace condinfo {

// y = c0 + c1*x
struct LineCoeffs {
    FieldElement c0 = 0;
    FieldElement c1 = 0;
    friend bool operator==(const LineCoeffs&, const LineCoeffs&) = default;
};

// y = d0 + d1*x + d2*x^2, d2 != 0
struct ParabolaCoeffs {
    FieldElement d0 = 0;
    FieldElement d1 = 0;
    FieldElement d2 = 1;
    friend bool operator==(const ParabolaCoeffs&, const ParabolaCoeffs&) = default;
};

struct PointXY {
    FieldElement x = 0;
    FieldElement y = 0;
    friend bool operator==(const PointXY&, const PointXY&) = default;
    friend auto operator<=>(const PointXY&, const PointXY&) = default;
};

// One equiprobable outcome: a line, a parabola meeting it twice, and the two
// intersection points in a chosen order.
struct Configuration {
    LineCoeffs line;
    ParabolaCoeffs parabola;
    PointXY first;
    PointXY second;
};

bool on_line(const FieldSize& f, const LineCoeffs& line, const PointXY& p);
bool on_parabola(const FieldSize& f, const ParabolaCoeffs& parabola, const PointXY& p);
bool is_valid(const FieldSize& f, const Configuration& c);

// Roots of d2*x^2 + (d1-c1)*x + (d0-c0) = 0 as points, ascending in x.
// Two points iff the discriminant is a nonzero square, one if it is zero.
std::vector<PointXY> intersect(const FieldSize& f, const LineCoeffs& line, const ParabolaCoeffs& parabola);

// Brute force over all q^2(q-1) parabolas.
std::uint64_t count_valid_parabolas(const FieldSize& f, const LineCoeffs& line);

// Row-major value ids: point (x,y) -> x*q + y, line (c0,c1) -> c0*q + c1,
// parabola (d0,d1,d2) -> (d0*q + d1)*(q-1) + (d2-1).
ValueId point_id(const FieldSize& f, const PointXY& p);
ValueId line_id(const FieldSize& f, const LineCoeffs& line);
ValueId parabola_id(const FieldSize& f, const ParabolaCoeffs& parabola);
PointXY point_from_id(const FieldSize& f, ValueId id);
LineCoeffs line_from_id(const FieldSize& f, ValueId id);
ParabolaCoeffs parabola_from_id(const FieldSize& f, ValueId id);

Configuration decode_configuration(const FieldSize& f, std::span<const ValueId> row);

inline constexpr std::uint64_t kDefaultEnumerationCap = 31;

struct ConstructionInfo {
    std::uint64_t q = 0;
    std::uint64_t total = 0;
    std::uint64_t lines = 0;
    std::uint64_t parabolas_per_line = 0;
};

// Closed-form counts; build_joint checks them against its enumeration.
ConstructionInfo construction_info(const FieldSize& f);

/// Uniform distribution over every Configuration for F_q, variables
/// (A, B, C, D) = (first point, second point, line, parabola).
///
/// Enumerates all q^2 * q^2(q-1) line/parabola pairs and keeps both orderings
/// of every two-point intersection. Work is split by the parabola's leading
/// coefficient across `workers` threads (0 = hardware concurrency); blocks are
/// concatenated in order, so the table does not depend on the worker count.
/// Throws std::out_of_range when q exceeds `cap`; use closed_form_vector then.
JointDistribution build_joint(const FieldSize& f, std::uint64_t cap = kDefaultEnumerationCap,
                              unsigned workers = 0);

/// Entropy vector of build_joint(f) without enumerating.
///
/// Every subset's fiber is uniform under the affine maps x -> x+t,
/// y -> y + s*x + u (transitive on lines, points and parabolas) and the
/// scaling y -> l*y, so H(S) = log2(total) - log2(fiber(S)) with fiber sizes
/// counted directly from the construction.
EntropyVector closed_form_vector(const FieldSize& f);

// Largest q for which closed_form_vector is checked against enumeration by the test suite.
inline constexpr std::uint64_t kOracleValidatedUpTo = 13;

}  // namespace condinfo
