#ifndef MLDE_MODULAR_FORMS_HPP
#define MLDE_MODULAR_FORMS_HPP

#include "mlde/qseries.hpp"

#include <complex>

namespace mlde
{

struct InvalidWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// q-expansion tagged with an even integer weight
struct ModularForm {
    ModularForm(int weight, PuiseuxSeries series);
    int weight;
    PuiseuxSeries series;
};

// eta and friends: weight k/2 carried separately
struct HalfWeightSeries {
    int twice_weight;
    PuiseuxSeries series;
};

Rational bernoulli(unsigned n);
Integer divisor_sigma(unsigned k, unsigned long n);

// All expansions below keep the terms through q^N.
ModularForm eisenstein(int k, long N);
HalfWeightSeries dedekind_eta(long N);
ModularForm discriminant(long N);
PuiseuxSeries j_invariant(long N);

// D_{2l} f = q f' - (l/6) E_2 f
ModularForm serre_derivative(const ModularForm &f);
// D^m = D_{2(m-1)} o ... o D_2 o D_0 on a weight 0 series
ModularForm iterated_serre(unsigned m, const PuiseuxSeries &f);
// all of D^0 f .. D^m f
std::vector<PuiseuxSeries> serre_tower(unsigned m, const PuiseuxSeries &f);

std::complex<double> eval_at_tau(const PuiseuxSeries &s, std::complex<double> tau, double precision = 1e-14);

} // namespace mlde

#endif
