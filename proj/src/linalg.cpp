#include "mlde/linalg.hpp"

namespace mlde
{

namespace
{

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RMatrix &A, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < A.size(); ++col) {
        std::size_t p = row;
        while (p < A.size() && A[p][col] == 0)
            ++p;
        if (p == A.size())
            continue;
        std::swap(A[p], A[row]);
        Rational inv = 1 / A[row][col];
        for (auto &v : A[row])
            v *= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
            if (r == row || A[r][col] == 0)
                continue;
            Rational f = A[r][col];
            for (std::size_t c = col; c < A[r].size(); ++c)
                if (A[row][c] != 0)
                    A[r][c] -= f * A[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

LinearSolution solve_exact(RMatrix A, std::vector<Rational> b)
{
    if (A.size() != b.size())
        throw std::invalid_argument("solve_exact: row count mismatch");
    std::size_t n = A.empty() ? 0 : A[0].size();
    for (std::size_t r = 0; r < A.size(); ++r) {
        if (A[r].size() != n)
            throw std::invalid_argument("solve_exact: ragged matrix");
        A[r].push_back(b[r]);
    }
    auto pivots = rref(A, n);
    LinearSolution s;
    s.rank = pivots.size();
    s.consistent = true;
    for (std::size_t r = s.rank; r < A.size(); ++r)
        if (A[r][n] != 0)
            s.consistent = false;
    s.unique = s.consistent && s.rank == n;
    s.x.assign(n, Rational(0));
    if (s.consistent)
        for (std::size_t i = 0; i < pivots.size(); ++i)
            s.x[pivots[i]] = A[i][n];
    return s;
}

std::size_t rank_exact(RMatrix A)
{
    std::size_t n = A.empty() ? 0 : A[0].size();
    return rref(A, n).size();
}

} // namespace mlde
