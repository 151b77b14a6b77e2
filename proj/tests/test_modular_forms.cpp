#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlde/characters.hpp"
#include "mlde/modular_forms.hpp"

#include <cmath>

using namespace mlde;

namespace
{

Rational R(long n, long d = 1) { return frac(n, d); }

long sigma_brute(int k, long n)
{
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            long p = 1;
            for (int i = 0; i < k; ++i)
                p *= d;
            s += p;
        }
    return s;
}

bool vanishes(const PuiseuxSeries &s) { return s.is_zero() && s.trunc().has_value(); }

} // namespace

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == R(-1, 2));
    CHECK(bernoulli(2) == R(1, 6));
    CHECK(bernoulli(4) == R(-1, 30));
    CHECK(bernoulli(12) == R(-691, 2730));
    CHECK(bernoulli(7) == 0);
}

TEST_CASE("divisor sums against brute force")
{
    for (unsigned k : {1u, 3u, 5u})
        for (long n = 1; n <= 30; ++n)
            CHECK(divisor_sigma(k, static_cast<unsigned long>(n)) == sigma_brute(int(k), n));
}

TEST_CASE("eisenstein examples")
{
    auto e2 = eisenstein(2, 3);
    CHECK(e2.weight == 2);
    CHECK(e2.series.agrees_with(PuiseuxSeries::from_ints(0, 1, {1, -24, -72, -96})));
    REQUIRE(e2.series.trunc());
    CHECK(*e2.series.trunc() == 4);
    CHECK(eisenstein(4, 2).series.agrees_with(PuiseuxSeries::from_ints(0, 1, {1, 240, 2160})));
    for (long n = 1; n <= 20; ++n)
        CHECK(eisenstein(6, 20).series.coeff(R(n)) == -504 * sigma_brute(5, n));
    CHECK_THROWS_AS(eisenstein(3, 5), InvalidWeight);
    CHECK_THROWS_AS(eisenstein(-4, 5), InvalidWeight);
    CHECK_THROWS_AS(eisenstein(0, 5), InvalidWeight);
}

TEST_CASE("E12 basis identity")
{
    const long N = 50;
    auto e4 = eisenstein(4, N).series, e6 = eisenstein(6, N).series;
    auto lhs = R(691) * eisenstein(12, N).series;
    auto rhs = R(441) * e4 * e4 * e4 + R(250) * e6 * e6;
    auto diff = lhs - rhs;
    CHECK(vanishes(diff));
    CHECK(*diff.trunc() == N + 1);
}

TEST_CASE("eta, delta and j")
{
    auto eta = dedekind_eta(10);
    CHECK(eta.twice_weight == 1);
    CHECK(eta.series.offset() == R(1, 24));
    CHECK(eta.series.coeffs()[0] == 1);

    auto d = discriminant(6);
    CHECK(d.weight == 12);
    CHECK(d.series.offset() == 1);
    CHECK(d.series.agrees_with(PuiseuxSeries::from_ints(1, 1, {1, -24, 252, -1472}, R(5))));
    auto eta24 = pow(dedekind_eta(6).series, 24);
    CHECK(eta24.agrees_with(d.series));

    auto j = j_invariant(6);
    CHECK(j.offset() == -1);
    CHECK(j.coeff(R(-1)) == 1);
    CHECK(j.coeff(R(0)) == 744);
    CHECK(j.coeff(R(1)) == 196884);
    CHECK(j.coeff(R(2)) == 21493760);
}

TEST_CASE("1728 Delta = E4^3 - E6^2")
{
    const long N = 40;
    auto e4 = eisenstein(4, N).series, e6 = eisenstein(6, N).series;
    CHECK(vanishes(R(1728) * discriminant(N).series - (e4 * e4 * e4 - e6 * e6)));
}

TEST_CASE("serre derivative of E4 and E6")
{
    const long N = 40;
    auto e4 = eisenstein(4, N), e6 = eisenstein(6, N);
    auto d4 = serre_derivative(e4);
    CHECK(d4.weight == 6);
    CHECK(vanishes(d4.series + R(1, 3) * e6.series));
    auto d6 = serre_derivative(e6);
    CHECK(d6.weight == 8);
    CHECK(vanishes(d6.series + R(1, 2) * e4.series * e4.series));
    CHECK(serre_derivative(ModularForm(0, PuiseuxSeries::constant(1, R(N)))).series.is_zero());
}

TEST_CASE("ramanujan closure for E2")
{
    const long N = 40;
    auto e2 = eisenstein(2, N).series, e4 = eisenstein(4, N).series;
    CHECK(vanishes(R(12) * e2.theta() - (e2 * e2 - e4)));
}

TEST_CASE("weight additivity")
{
    for (int k : {4, 6, 8, 10, 12}) {
        auto f = eisenstein(k, 10);
        CHECK(serre_derivative(f).weight == k + 2);
    }
    auto s = PuiseuxSeries::monomial(1, R(1, 7), R(10));
    for (unsigned m = 0; m < 5; ++m)
        CHECK(iterated_serre(m, s).weight == int(2 * m));
}

TEST_CASE("iterated serre on q^kappa")
{
    for (Rational kappa : {R(11, 60), R(-1, 60), R(-5, 156), R(3, 7)}) {
        auto s = PuiseuxSeries::monomial(1, kappa, kappa + 10);
        for (unsigned m = 0; m <= 6; ++m) {
            Rational want = 1;
            for (unsigned l = 0; l < m; ++l)
                want *= kappa - frac(long(l), 6);
            auto d = iterated_serre(m, s).series;
            CHECK(d.coeff(kappa) == want);
        }
    }
    auto f = PuiseuxSeries::from_ints(0, 1, {1, 3, 5}, R(3));
    CHECK(iterated_serre(0, f).series == f);
    auto tower = serre_tower(3, f);
    REQUIRE(tower.size() == 4);
    CHECK(tower[2] == iterated_serre(2, f).series);
}

TEST_CASE("second order equation of the (2,5) characters at order 40")
{
    auto chi = character(5, 2, 40).series;
    auto lhs = iterated_serre(2, chi).series;
    auto rhs = R(11, 3600) * eisenstein(4, 40).series * chi;
    auto diff = lhs - rhs;
    CHECK(vanishes(diff));
    CHECK(*diff.trunc() >= R(-1, 60) + 40);
}

TEST_CASE("eval at tau")
{
    using C = std::complex<double>;
    CHECK(std::abs(eval_at_tau(PuiseuxSeries::constant(1), C(0.3, 1.1)) - 1.0) < 1e-15);
    CHECK(std::abs(eval_at_tau(eisenstein(6, 60).series, C(0, 1))) < 1e-10);
    C rho(-0.5, std::sqrt(3.0) / 2);
    CHECK(std::abs(eval_at_tau(eisenstein(4, 80).series, rho, 1e-12)) < 1e-8);
    CHECK_THROWS_AS(eval_at_tau(eisenstein(4, 3).series, C(0, 0.2)), InsufficientTruncation);
}
