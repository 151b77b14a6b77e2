#ifndef MLDE_FROBENIUS_HPP
#define MLDE_FROBENIUS_HPP

#include "mlde/multipoly.hpp"
#include "mlde/upoly.hpp"

#include <string>
#include <vector>

namespace mlde
{

struct UnsupportedDim : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonRationalSpectrum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// base + sign * coef * sqrt(radicand); radicand square-free, 1 when the roots are rational
struct QuadraticRoots {
    bool rational = false;
    Rational base, coef;
    Integer radicand = 1;
    Rational r1, r2; // valid when rational, r1 >= r2
    std::string to_string() const;
};

// roots of ubar^2 - (9/5) ubar - 7c/40
QuadraticRoots ubar_roots(const Rational &c);
// u = ubar + c/8 (needs rational ubar)
std::pair<Rational, Rational> u_roots(const Rational &c);
// the values printed alongside the (2,5) boundary analysis, kept for comparison
std::pair<Rational, Rational> printed_u_roots();
// roots of alpha (alpha - 1/3) = 11/900
std::pair<Rational, Rational> genus1_alpha_roots();

// square matrix over Q[t]; rows past the third carry formal symbols r41..r44
struct FrobeniusMatrix {
    int dim = 0;
    std::vector<std::vector<MultiPoly>> entries;
    std::string to_string() const;
};

Var frobenius_t();
FrobeniusMatrix build_matrix(const Rational &c, int k);

// det(lambda I - A) as a polynomial in the symbol "lambda" (plus t and formal symbols)
MultiPoly char_poly(const FrobeniusMatrix &m);

// vector over Q(t)
using FracVector = std::vector<Frac1>;

struct Eigenspace {
    Rational value;
    int algebraic_multiplicity = 0;
    std::vector<FracVector> basis;
};

struct Eigenstructure {
    std::vector<Eigenspace> spaces; // increasing eigenvalue
    bool diagonalizable = false;
    std::vector<Rational> eigenvalues() const; // with multiplicity, increasing
};

// entries must lie in Q[t]
Eigenstructure eigenstructure(const FrobeniusMatrix &m);

// rank over Q(t)
int rank_over_qt(const std::vector<FracVector> &vectors);
// span(a) == span(b)
bool same_span(const std::vector<FracVector> &a, const std::vector<FracVector> &b);
FracVector frac_vector(const std::vector<UPoly> &entries);
std::string to_string(const FracVector &v);

} // namespace mlde

#endif
