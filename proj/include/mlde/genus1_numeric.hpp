#ifndef MLDE_GENUS1_NUMERIC_HPP
#define MLDE_GENUS1_NUMERIC_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace mlde
{

using Complex = std::complex<double>;

struct RootTrackingLost : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateFrame : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// branch points of p = 4(x^3 + a x + b) attached to (tau, lambda)
struct Genus1Frame {
    Complex tau;
    double lambda = 1;
    Complex E2, E4, E6;
    Complex a, b;
    std::array<Complex, 3> roots; // mean zero, sorted by (Re, Im)
};

Genus1Frame make_frame(Complex tau, double lambda, long qterms = 40);

Complex delta0_from_roots(const Genus1Frame &f);      // prod_{i<j} (X_i - X_j)^2
Complex delta0_from_ab(const Genus1Frame &f);         // -4a^3 - 27b^2
Complex delta0_from_eisenstein(const Genus1Frame &f); // (4 pi^12 / 27) lambda^12 (E4^3 - E6^2)

// xi_i = X_i(to) - X_i(from), roots paired by nearest neighbour
std::array<Complex, 3> root_shift(const Genus1Frame &from, const Genus1Frame &to);

Complex det_v3(const std::array<Complex, 3> &X);
Complex det_xi30(const std::array<Complex, 3> &X, const std::array<Complex, 3> &xi);
Complex det_xi31(const std::array<Complex, 3> &X, const std::array<Complex, 3> &xi);
// -3 det Xi31 / det V3
Complex omega(const std::array<Complex, 3> &X, const std::array<Complex, 3> &xi);

// forward difference in tau: |dtau + i pi lambda^2 Xi30/V3| / |dtau|
double dtau_identity_check(Complex tau, double lambda, double eps = 1e-5, long qterms = 40);
// Richardson combination of eps and eps/2
double dtau_richardson_check(Complex tau, double lambda, double eps = 1e-5, long qterms = 40);
// det Xi30 / det V3 under a pure rescaling of lambda, relative to |xi|/|X|
double scaling_xi30_check(Complex tau, double lambda, double eps = 1e-5, long qterms = 40);

struct OmegaCheck {
    double dlog_error = 0; // omega vs (1/2) dlog Delta0, mixed tau/lambda perturbation
    double tau_error = 0;  // omega vs pi i E2 dtau, tau-only perturbation
    double lambda_part = 0; // omega / (dlambda / lambda), lambda-only perturbation
};
// central differences throughout
OmegaCheck omega_decomposition_check(Complex tau, double lambda, double eps = 1e-5, long qterms = 40);

struct BoundaryProbe {
    bool defined = false;   // false for a path without spread in Im tau
    double pair_slope = 0;  // log|X_i - X_j| (closest pair) against log|q^(1/2)|
    double isolated_slope = 0; // log|remaining root| against log|q|
};
BoundaryProbe boundary_exponent_probe(const std::vector<Complex> &tau_path, double lambda = 1, long qterms = 40);

} // namespace mlde

#endif
