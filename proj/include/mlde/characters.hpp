#ifndef MLDE_CHARACTERS_HPP
#define MLDE_CHARACTERS_HPP

#include "mlde/qseries.hpp"

#include <string>
#include <vector>

namespace mlde
{

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct MinimalModelId {
    int mu = 2;
    int nu = 5;
    // number of distinct characters, (mu-1)(nu-1)/2
    int num_characters() const { return (mu - 1) * (nu - 1) / 2; }
};

struct CharacterSeries {
    MinimalModelId model;
    int s = 1;      // (2,nu): 1..M;  general: position in characters_of()
    int r = 1;      // Kac label r (1 for the (2,nu) family)
    int kac_s = 1;  // Kac label s
    Rational kappa;
    PuiseuxSeries series;
};

// (nu - 2s)^2/(8 nu) - 1/24
Rational kappa(int nu, int s);
// (nu r - mu s)^2/(4 mu nu) - 1/24
Rational kappa_general(int mu, int nu, int r, int s);

// Andrews-Gordon fermionic sum, N coefficients past q^kappa
CharacterSeries character(int nu, int s, long N);

// every character of the (mu,nu) model; supported: mu = 2 and (3,4)
std::vector<CharacterSeries> characters_of(int mu, int nu, long N);

// product side of the Rogers-Ramanujan identities, terms through q^N
PuiseuxSeries rr_product(int s, long N);
// q^(1/5) prod (1-q^n)^(n/5), terms through relative order N
PuiseuxSeries ramanujan_cf(long N);
int legendre5(long n);

PuiseuxSeries icosahedral_polynomial(const PuiseuxSeries &X, const PuiseuxSeries &j);
PuiseuxSeries icosahedral_residual(long N);

} // namespace mlde

#endif
