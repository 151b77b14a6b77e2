#ifndef MLDE_ODE_BUILDER_HPP
#define MLDE_ODE_BUILDER_HPP

#include "mlde/characters.hpp"
#include "mlde/modular_forms.hpp"
#include "mlde/upoly.hpp"

#include <map>
#include <optional>

namespace mlde
{

struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotApplicable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// E4^a E6^b with a coefficient
struct BasisTerm {
    int a = 0, b = 0;
    Rational coeff;
};

// D^M + sum_{m<=M-2} Omega_{2(M-m)} D^m
struct ModularODE {
    int M = 1;
    std::map<int, ModularForm> terms;          // m -> Omega
    std::map<int, Rational> alpha;             // m -> coefficient of E_{2(M-m)} (table form)
    std::optional<Rational> cusp_part;         // coefficient of Delta inside Omega_12
    std::map<int, std::vector<BasisTerm>> basis; // m -> expansion over E4^a E6^b (general_solve)
};

// prod_{l=0}^{m-1} (kappa - l/6)
UPoly falling_serre(int m);
// monic polynomial with the kappa_s of the (2,nu) model as roots
UPoly indicial_target(int nu);

std::map<int, Rational> indicial_solve(int nu);
Rational cusp_solve(int nu);
// coefficients through q^N; nu = 13 gets the Delta part from cusp_solve
ModularODE build_operator(int nu, long N);
// operator without any Delta part (used to find it)
ModularODE build_operator_without_cusp(int nu, long N);

PuiseuxSeries apply(const ModularODE &D, const PuiseuxSeries &f);

// first exponent with a nonzero coefficient, or nullopt if the result vanishes to its truncation
struct AnnihilationOrder {
    std::optional<Rational> first_nonzero;
    std::optional<Rational> checked_to; // truncation of the result
    bool vanishes() const { return !first_nonzero.has_value(); }
};
AnnihilationOrder annihilation_order(const ModularODE &D, const PuiseuxSeries &f);

// coefficients w_0..w_M of det[ f, Df, ..., D^M f ; rows f_1..f_M ] = sum_i w_i D^i f
std::vector<PuiseuxSeries> wronskian(const std::vector<PuiseuxSeries> &fs);

// operator determined by exact linear algebra over the E4^a E6^b basis
ModularODE general_solve(int mu, int nu, long N);

// rewrite x E4^3 + y E6^2 as alpha E12 + beta Delta
std::pair<Rational, Rational> to_e12_delta(const Rational &x, const Rational &y);

// [R]_{>k}: keep the exponents strictly above k
PuiseuxSeries project_above(const PuiseuxSeries &R, const Rational &k);

} // namespace mlde

#endif
