#include "condinfo/geometry.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace condinfo {

bool on_line(const FieldSize& f, const LineCoeffs& line, const PointXY& p)
{
    return f.add(line.c0, f.mul(line.c1, p.x)) == p.y;
}

bool on_parabola(const FieldSize& f, const ParabolaCoeffs& parabola, const PointXY& p)
{
    const auto x2 = f.mul(p.x, p.x);
    return f.add(f.add(parabola.d0, f.mul(parabola.d1, p.x)), f.mul(parabola.d2, x2)) == p.y;
}

bool is_valid(const FieldSize& f, const Configuration& c)
{
    return c.parabola.d2 != 0 && c.first.x != c.second.x && on_line(f, c.line, c.first) &&
           on_line(f, c.line, c.second) && on_parabola(f, c.parabola, c.first) &&
           on_parabola(f, c.parabola, c.second);
}

namespace {

// Coefficients of d2*x^2 + b*x + c = 0 and its discriminant.
struct Quadratic {
    FieldElement a;
    FieldElement b;
    FieldElement c;
    FieldElement discriminant;
};

Quadratic difference(const FieldSize& f, const LineCoeffs& line, const ParabolaCoeffs& parabola)
{
    Quadratic eq{parabola.d2, f.sub(parabola.d1, line.c1), f.sub(parabola.d0, line.c0), 0};
    eq.discriminant = f.sub(f.mul(eq.b, eq.b), f.mul(4 % f.q(), f.mul(eq.a, eq.c)));
    return eq;
}

}  // namespace

std::vector<PointXY> intersect(const FieldSize& f, const LineCoeffs& line, const ParabolaCoeffs& parabola)
{
    if (parabola.d2 == 0)
        throw std::invalid_argument("degenerate parabola (d2 = 0)");
    const auto eq = difference(f, line, parabola);
    const auto root = f.sqrt(eq.discriminant);
    if (!root)
        return {};
    const auto inv_2a = f.inv(f.mul(2, eq.a));
    auto point_at = [&](FieldElement x) { return PointXY{x, f.add(line.c0, f.mul(line.c1, x))}; };
    const auto x1 = f.mul(f.sub(f.neg(eq.b), *root), inv_2a);
    if (*root == 0)
        return {point_at(x1)};
    const auto x2 = f.mul(f.add(f.neg(eq.b), *root), inv_2a);
    std::vector<PointXY> out{point_at(x1), point_at(x2)};
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_valid_parabolas(const FieldSize& f, const LineCoeffs& line)
{
    const auto q = f.q();
    std::uint64_t count = 0;
    for (FieldElement d2 = 1; d2 < q; ++d2)
        for (FieldElement d1 = 0; d1 < q; ++d1)
            for (FieldElement d0 = 0; d0 < q; ++d0)
                if (f.is_nonzero_square(difference(f, line, {d0, d1, d2}).discriminant))
                    ++count;
    return count;
}

ValueId point_id(const FieldSize& f, const PointXY& p)
{
    return static_cast<ValueId>(p.x * f.q() + p.y);
}

ValueId line_id(const FieldSize& f, const LineCoeffs& line)
{
    return static_cast<ValueId>(line.c0 * f.q() + line.c1);
}

ValueId parabola_id(const FieldSize& f, const ParabolaCoeffs& parabola)
{
    return static_cast<ValueId>((parabola.d0 * f.q() + parabola.d1) * (f.q() - 1) + (parabola.d2 - 1));
}

PointXY point_from_id(const FieldSize& f, ValueId id)
{
    return {id / f.q(), id % f.q()};
}

LineCoeffs line_from_id(const FieldSize& f, ValueId id)
{
    return {id / f.q(), id % f.q()};
}

ParabolaCoeffs parabola_from_id(const FieldSize& f, ValueId id)
{
    const auto q = f.q();
    const FieldElement d2 = id % (q - 1) + 1;
    const auto rest = id / (q - 1);
    return {rest / q, rest % q, d2};
}

Configuration decode_configuration(const FieldSize& f, std::span<const ValueId> row)
{
    if (row.size() != 4)
        throw std::invalid_argument("configuration rows have four entries");
    return {line_from_id(f, row[2]), parabola_from_id(f, row[3]), point_from_id(f, row[0]),
            point_from_id(f, row[1])};
}

ConstructionInfo construction_info(const FieldSize& f)
{
    const auto q = f.q();
    ConstructionInfo info;
    info.q = q;
    info.lines = q * q;
    info.parabolas_per_line = q * (q - 1) * (q - 1) / 2;
    info.total = info.lines * info.parabolas_per_line * 2;
    return info;
}

JointDistribution build_joint(const FieldSize& f, std::uint64_t cap, unsigned workers)
{
    const auto q = f.q();
    if (q > cap)
        throw std::out_of_range("q = " + std::to_string(q) + " exceeds the enumeration cap " +
                                std::to_string(cap) + "; use closed_form_vector instead");

    // One block per leading coefficient d2.
    const std::size_t blocks = q - 1;
    std::vector<std::vector<ValueId>> rows(blocks);
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t block = next++; block < blocks; block = next++) {
            const FieldElement d2 = block + 1;
            auto& out = rows[block];
            for (FieldElement d0 = 0; d0 < q; ++d0) {
                for (FieldElement d1 = 0; d1 < q; ++d1) {
                    const ParabolaCoeffs parabola{d0, d1, d2};
                    const auto pid = parabola_id(f, parabola);
                    for (FieldElement c0 = 0; c0 < q; ++c0) {
                        for (FieldElement c1 = 0; c1 < q; ++c1) {
                            const LineCoeffs line{c0, c1};
                            const auto points = intersect(f, line, parabola);
                            if (points.size() != 2)
                                continue;
                            const auto a = point_id(f, points[0]);
                            const auto b = point_id(f, points[1]);
                            const auto c = line_id(f, line);
                            out.insert(out.end(), {a, b, c, pid, b, a, c, pid});
                        }
                    }
                }
            }
        }
    };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, blocks));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    std::vector<ValueId> values;
    std::size_t width = 0;
    for (const auto& r : rows)
        width += r.size();
    values.reserve(width);
    for (auto& r : rows) {
        values.insert(values.end(), r.begin(), r.end());
        r = {};
    }

    const auto info = construction_info(f);
    if (values.size() / 4 != info.total)
        throw std::logic_error("enumeration produced " + std::to_string(values.size() / 4) +
                               " configurations, expected " + std::to_string(info.total));

    std::vector<std::uint64_t> counts(values.size() / 4, 1);
    return JointDistribution(default_variable_names(4), std::move(values), std::move(counts));
}

EntropyVector closed_form_vector(const FieldSize& f)
{
    // fiber(S) = 2^e2 * q^eq * (q-1)^ep, indexed by mask (A=1, B=2, C=4, D=8).
    struct Fiber {
        int e2;
        int eq;
        int ep;
    };
    static constexpr std::array<Fiber, 16> fibers{{
        {0, 0, 0},  // {}      (unused)
        {0, 1, 2},  // A:    line through A, second point on it, d2
        {0, 1, 2},  // B
        {0, 0, 1},  // AB:   d2 (the line is determined)
        {0, 1, 2},  // C:    ordered point pair on C, d2
        {0, 0, 2},  // AC:   second point on C, d2
        {0, 0, 2},  // BC
        {0, 0, 1},  // ABC:  d2
        {0, 1, 1},  // D:    ordered point pair on D
        {0, 0, 1},  // AD:   second point on D
        {0, 0, 1},  // BD
        {0, 0, 0},  // ABD
        {1, 0, 0},  // CD:   order of the two intersection points
        {0, 0, 0},  // ACD
        {0, 0, 0},  // BCD
        {0, 0, 0},  // ABCD
    }};

    const auto log_q = LogReal::log2_of(f.q());
    const auto log_q1 = LogReal::log2_of(f.q() - 1);
    // total = q^3 (q-1)^2
    const LogReal log_total = log_q * 3 + log_q1 * 2;

    std::vector<LogReal> entries(16);
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
        const auto& fb = fibers[mask];
        entries[mask] = log_total - (LogReal(fb.e2) + log_q * fb.eq + log_q1 * fb.ep);
    }
    return EntropyVector(default_variable_names(4), std::move(entries));
}

}  // namespace condinfo
