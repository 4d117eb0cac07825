#pragma once

#include <vector>

#include "qdvol/rational.hpp"

namespace qdvol {

// Exact solve of an (over)determined rational linear system A x = b,
// rows >= cols. `consistent` means x exists with zero residual on every
// row; `unique` means A has full column rank.
struct SolveReport {
    bool consistent = false;
    bool unique = false;
    int rank = 0;
    std::vector<Rational> x;  // valid iff consistent && unique
};

SolveReport solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace qdvol
