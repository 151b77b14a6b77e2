#ifndef MLDE_LINALG_HPP
#define MLDE_LINALG_HPP

#include "mlde/qseries.hpp"

#include <vector>

namespace mlde
{

using RMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
    bool consistent = false;
    bool unique = false;
    std::size_t rank = 0;
    std::vector<Rational> x; // one particular solution (free variables set to 0)
};

// exact Gauss-Jordan elimination on A x = b
LinearSolution solve_exact(RMatrix A, std::vector<Rational> b);
std::size_t rank_exact(RMatrix A);

} // namespace mlde

#endif
