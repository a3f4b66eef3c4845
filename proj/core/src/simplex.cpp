#include "condinfo/simplex.hpp"

#include <stdexcept>

namespace condinfo {

FeasibilityResult solve_feasibility(const RationalMatrix& a, const std::vector<Rational>& b)
{
    const std::size_t rows = a.size();
    if (b.size() != rows)
        throw std::invalid_argument("right-hand side length does not match the row count");
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("ragged constraint matrix");

    const std::size_t width = cols + rows;  // structural + artificial
    RationalMatrix tableau(rows, std::vector<Rational>(width + 1));
    std::vector<int> row_sign(rows, 1);
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        row_sign[i] = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < cols; ++j)
            tableau[i][j] = row_sign[i] * a[i][j];
        tableau[i][cols + i] = 1;
        tableau[i][width] = row_sign[i] * b[i];
        basis[i] = cols + i;
    }

    // Phase-one reduced costs: c_j - sum_i T_ij with c = 1 on artificials.
    std::vector<Rational> reduced(width + 1);
    for (std::size_t j = 0; j <= width; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < rows; ++i)
            s += tableau[i][j];
        reduced[j] = (j >= cols && j < width ? Rational(1) : Rational(0)) - s;
    }
    // reduced[width] holds minus the objective value.

    FeasibilityResult result;
    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (reduced[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width)
            break;

        std::size_t leave = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tableau[i][enter] <= 0)
                continue;
            Rational ratio = tableau[i][width] / tableau[i][enter];
            if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = std::move(ratio);
            }
        }
        if (leave == rows)
            throw std::logic_error("phase-one objective unbounded below");  // impossible: objective >= 0

        auto& pivot_row = tableau[leave];
        const Rational pivot = pivot_row[enter];
        for (auto& v : pivot_row)
            v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || tableau[i][enter] == 0)
                continue;
            const Rational factor = tableau[i][enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (pivot_row[j] != 0)
                    tableau[i][j] -= factor * pivot_row[j];
        }
        if (reduced[enter] != 0) {
            const Rational factor = reduced[enter];
            for (std::size_t j = 0; j <= width; ++j)
                if (pivot_row[j] != 0)
                    reduced[j] -= factor * pivot_row[j];
        }
        basis[leave] = enter;
        ++result.pivots;
    }

    const Rational objective = -reduced[width];
    if (objective == 0) {
        result.feasible = true;
        result.solution.assign(cols, Rational(0));
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] < cols)
                result.solution[basis[i]] = tableau[i][width];
        return result;
    }

    // Dual of the normalized system: y_i = 1 - reduced(artificial i), with
    // y^T (S A) <= 0 and y^T (S b) = objective > 0. Flip to z = -S y.
    result.farkas.resize(rows);
    for (std::size_t i = 0; i < rows; ++i)
        result.farkas[i] = -row_sign[i] * (Rational(1) - reduced[cols + i]);
    return result;
}

}  // namespace condinfo
