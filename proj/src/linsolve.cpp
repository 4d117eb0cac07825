#include "qdvol/linsolve.hpp"

#include <stdexcept>

namespace qdvol {

SolveReport solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t rows = a.size();
    if (rows == 0 || b.size() != rows) throw std::invalid_argument("solve_exact: bad shape");
    const size_t cols = a[0].size();
    if (cols == 0 || rows < cols) throw std::invalid_argument("solve_exact: rows >= cols >= 1 required");
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

    // Keep untouched copies for the full residual check.
    const auto a0 = a;
    const auto b0 = b;

    SolveReport rep;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    rep.rank = static_cast<int>(row);
    rep.unique = (row == cols);

    // Rows reduced to all-zero coefficients must have zero rhs.
    for (size_t i = row; i < rows; ++i)
        if (b[i] != 0) return rep;  // inconsistent

    if (!rep.unique) {
        rep.consistent = true;  // consistent but underdetermined
        return rep;
    }

    std::vector<Rational> x(cols);
    for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = b[i];

    // Exact residual on every original row.
    for (size_t i = 0; i < rows; ++i) {
        Rational acc = 0;
        for (size_t j = 0; j < cols; ++j) acc += a0[i][j] * x[j];
        if (acc != b0[i]) return rep;
    }
    rep.consistent = true;
    rep.x = std::move(x);
    return rep;
}

}  // namespace qdvol
