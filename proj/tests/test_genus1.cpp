#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlde/genus1_numeric.hpp"

#include <cmath>

using namespace mlde;

namespace
{

const std::vector<Complex> taus = {Complex(0, 2), Complex(0, 1), Complex(0.5, 1), Complex(0.25, 1.5)};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST_CASE("frame invariants")
{
    for (Complex tau : taus) {
        Genus1Frame f = make_frame(tau, 1.0);
        Complex sum = f.roots[0] + f.roots[1] + f.roots[2];
        CHECK(std::abs(sum) < 1e-12 * std::abs(f.roots[0]));
        double scale = std::pow(std::abs(f.a), 1.5) + std::abs(f.b);
        for (Complex x : f.roots)
            CHECK(std::abs(x * x * x + f.a * x + f.b) < 1e-12 * scale);
        // sorted by (Re, Im)
        CHECK(f.roots[0].real() <= f.roots[1].real());
        CHECK(f.roots[1].real() <= f.roots[2].real());
        double pi = M_PI;
        CHECK(rel(f.a, -(std::pow(pi, 4) / 3) * f.E4) < 1e-14);
        CHECK(rel(f.b, -(2 * std::pow(pi, 6) / 27) * f.E6) < 1e-14);
    }
}

TEST_CASE("square lattice")
{
    Genus1Frame f = make_frame(Complex(0, 1), 1.0);
    CHECK(std::abs(f.b) < 1e-10 * std::pow(std::abs(f.a), 1.5));
    Complex r = std::sqrt(-f.a);
    CHECK(std::abs(f.roots[1]) < 1e-10 * std::abs(r));
    CHECK(std::abs(std::abs(f.roots[0]) - std::abs(r)) < 1e-10 * std::abs(r));
}

TEST_CASE("scaling lambda")
{
    for (Complex tau : taus) {
        Genus1Frame f1 = make_frame(tau, 1.0), f2 = make_frame(tau, 2.0);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(f2.roots[std::size_t(i)] / f1.roots[std::size_t(i)] - 4.0) < 1e-10);
    }
}

TEST_CASE("bad frames")
{
    CHECK_THROWS_AS(make_frame(Complex(0, -1), 1.0), std::domain_error);
    CHECK_THROWS_AS(make_frame(Complex(0, 1), -1.0), std::domain_error);
    CHECK_THROWS_AS(make_frame(Complex(0, 1), 1.0, 10), std::invalid_argument);
}

TEST_CASE("discriminant three ways")
{
    for (Complex tau : taus) {
        Genus1Frame f = make_frame(tau, 1.0);
        Complex ab = delta0_from_ab(f);
        CHECK(rel(delta0_from_roots(f), ab) < 1e-12);
        CHECK(rel(delta0_from_eisenstein(f), ab) < 1e-9);
    }
}

TEST_CASE("dtau identity and its first order decay")
{
    for (Complex tau : taus) {
        double e4 = dtau_identity_check(tau, 1.0, 1e-4);
        double e5 = dtau_identity_check(tau, 1.0, 1e-5);
        double e6 = dtau_identity_check(tau, 1.0, 1e-6);
        CHECK(e5 < 1e-4);
        CHECK(e4 / e5 == doctest::Approx(10).epsilon(0.3));
        CHECK(e5 / e6 == doctest::Approx(10).epsilon(0.3));
        CHECK(dtau_richardson_check(tau, 1.0, 1e-4) < 1e-7);
    }
}

TEST_CASE("pure rescaling has no tau component")
{
    for (Complex tau : taus)
        CHECK(scaling_xi30_check(tau, 1.0, 1e-5) < 1e-9);
}

TEST_CASE("omega decomposition")
{
    for (Complex tau : taus) {
        OmegaCheck o = omega_decomposition_check(tau, 1.0, 1e-5);
        CHECK(o.dlog_error < 1e-6);
        CHECK(o.tau_error < 1e-4);
        CHECK(std::abs(std::abs(o.lambda_part) - 6) < 1e-6);
    }
    // the measured sign, pinned so a change is noticed
    CHECK(omega_decomposition_check(Complex(0, 2), 1.0, 1e-5).lambda_part > 0);
}

TEST_CASE("omega is additive in the shifts")
{
    Genus1Frame f = make_frame(Complex(0.3, 1.2), 1.0);
    std::array<Complex, 3> a{Complex(1e-4, 0), Complex(0, 2e-4), Complex(-1e-4, -2e-4)};
    std::array<Complex, 3> b{Complex(3e-5, 1e-5), Complex(-1e-5, 0), Complex(-2e-5, -1e-5)};
    std::array<Complex, 3> s;
    for (int i = 0; i < 3; ++i)
        s[std::size_t(i)] = a[std::size_t(i)] + b[std::size_t(i)];
    CHECK(std::abs(omega(f.roots, s) - omega(f.roots, a) - omega(f.roots, b)) < 1e-12);
}

TEST_CASE("root tracking")
{
    Genus1Frame f = make_frame(Complex(0, 2), 1.0);
    Genus1Frame far = make_frame(Complex(0.4, 1.0), 1.0);
    CHECK_THROWS_AS(root_shift(f, far), RootTrackingLost);
    auto xi = root_shift(f, make_frame(Complex(1e-6, 2), 1.0));
    CHECK(std::abs(xi[0] + xi[1] + xi[2]) < 1e-12 * std::abs(f.roots[0]));
}

TEST_CASE("boundary probe")
{
    std::vector<Complex> path;
    for (int i = 0; i < 5; ++i)
        path.push_back(Complex(0, 2 + 0.5 * i));
    BoundaryProbe b = boundary_exponent_probe(path);
    CHECK(b.defined);
    CHECK(std::abs(b.pair_slope - 1.0) < 0.02);
    CHECK(std::abs(b.isolated_slope) < 0.01);

    BoundaryProbe flat = boundary_exponent_probe({Complex(0, 2), Complex(0, 2), Complex(0, 2)});
    CHECK(!flat.defined);
}
