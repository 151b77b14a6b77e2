#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlde/characters.hpp"
#include "mlde/modular_forms.hpp"

#include <functional>

using namespace mlde;

namespace
{

Rational R(long n, long d = 1) { return frac(n, d); }

// coefficients of 1/(q)_n through q^(L-1), by counting partitions with parts <= n
std::vector<long> inv_poch(int n, int L)
{
    std::vector<long> c(std::size_t(L), 0);
    c[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int e = part; e < L; ++e)
            c[std::size_t(e)] += c[std::size_t(e - part)];
    return c;
}

// sum over n in N^r of q^(sum N_i^2 + sum_{i>=s} N_i) / prod (q)_{n_i},  N_i = n_i + ... + n_r
std::vector<long> fermionic_brute(int nu, int s, int L)
{
    int r = (nu - 1) / 2 - 1;
    std::vector<long> total(std::size_t(L), 0);
    std::vector<int> n(std::size_t(r), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            long e = 0;
            std::vector<long> Ns(static_cast<std::size_t>(r), 0);
            long acc = 0;
            for (int k = r - 1; k >= 0; --k) {
                acc += n[std::size_t(k)];
                Ns[std::size_t(k)] = acc;
            }
            for (int k = 0; k < r; ++k)
                e += Ns[std::size_t(k)] * Ns[std::size_t(k)] + (k + 1 >= s ? Ns[std::size_t(k)] : 0);
            if (e >= L)
                return;
            std::vector<long> prod(std::size_t(L), 0);
            prod[std::size_t(e)] = 1;
            for (int k = 0; k < r; ++k) {
                auto ip = inv_poch(n[std::size_t(k)], L);
                std::vector<long> next(std::size_t(L), 0);
                for (int a = 0; a < L; ++a)
                    for (int b = 0; a + b < L; ++b)
                        next[std::size_t(a + b)] += prod[std::size_t(a)] * ip[std::size_t(b)];
                prod = next;
            }
            for (int a = 0; a < L; ++a)
                total[std::size_t(a)] += prod[std::size_t(a)];
            return;
        }
        for (int v = 0; v * v < L; ++v) {
            n[std::size_t(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

} // namespace

TEST_CASE("kappa examples")
{
    CHECK(kappa(5, 1) == R(11, 60));
    CHECK(kappa(5, 2) == R(-1, 60));
    CHECK(kappa(13, 6) == R(-5, 156));
    CHECK_THROWS_AS(kappa(5, 3), IndexOutOfRange);
    CHECK_THROWS_AS(kappa(5, 0), IndexOutOfRange);
    CHECK_THROWS_AS(kappa(6, 1), IndexOutOfRange);
}

TEST_CASE("kappa_general")
{
    CHECK(kappa_general(2, 5, 1, 2) == R(-1, 60));
    CHECK(kappa_general(2, 5, 1, 3) == R(-1, 60));
    for (auto [mu, nu] : {std::pair{2, 7}, {3, 4}, {3, 5}, {2, 9}, {4, 5}})
        for (int r = 1; r < mu; ++r)
            for (int s = 1; s < nu; ++s)
                CHECK(kappa_general(mu, nu, r, s) == kappa_general(mu, nu, mu - r, nu - s));
    CHECK_THROWS_AS(kappa_general(3, 6, 1, 1), IndexOutOfRange);
    CHECK_THROWS_AS(kappa_general(3, 4, 3, 1), IndexOutOfRange);
}

TEST_CASE("exponent sums")
{
    for (int nu = 3; nu <= 13; nu += 2) {
        int M = (nu - 1) / 2;
        Rational sum = 0, rhs = 0;
        for (int s = 1; s <= M; ++s)
            sum += kappa(nu, s);
        CHECK(sum == frac(long(M) * (M - 1), 12));
        for (int l = 1; l <= M; ++l)
            rhs += frac(1 - l, 6);
        CHECK(-sum == rhs);
    }
    for (auto [mu, nu] : {std::pair{2, 7}, {3, 4}, {3, 5}}) {
        int M = (mu - 1) * (nu - 1) / 2;
        Rational sum = 0;
        for (int r = 1; r < mu; ++r)
            for (int s = 1; s < nu; ++s)
                sum += kappa_general(mu, nu, r, s);
        CHECK(sum / 2 == frac(long(M) * (M - 1), 12));
    }
}

TEST_CASE("(2,5) characters")
{
    auto c1 = character(5, 1, 7);
    CHECK(c1.kappa == R(11, 60));
    CHECK(c1.series.offset() == R(11, 60));
    CHECK(c1.series.agrees_with(PuiseuxSeries::from_ints(R(11, 60), 1, {1, 0, 1, 1, 1, 1, 2}, R(11, 60) + 7)));
    REQUIRE(c1.series.trunc());
    CHECK(*c1.series.trunc() == R(11, 60) + 7);
    auto c2 = character(5, 2, 7);
    CHECK(c2.series.agrees_with(PuiseuxSeries::from_ints(R(-1, 60), 1, {1, 1, 1, 1, 2, 2, 3}, R(-1, 60) + 7)));
    CHECK_THROWS_AS(character(5, 3, 7), IndexOutOfRange);
}

TEST_CASE("characters match a brute-force fermionic sum")
{
    const int L = 14;
    for (int nu = 5; nu <= 9; nu += 2)
        for (int s = 1; s <= (nu - 1) / 2; ++s) {
            auto want = fermionic_brute(nu, s, L);
            auto ch = character(nu, s, L);
            for (int n = 0; n < L; ++n)
                CHECK(ch.series.coeff(ch.kappa + n) == want[std::size_t(n)]);
        }
}

TEST_CASE("character structure invariants")
{
    for (int nu = 3; nu <= 13; nu += 2)
        for (int s = 1; s <= (nu - 1) / 2; ++s) {
            auto ch = character(nu, s, 30);
            CHECK(ch.series.offset() == kappa(nu, s));
            CHECK(ch.series.coeffs()[0] == 1);
            bool ok = true;
            for (const auto &c : ch.series.coeffs())
                ok = ok && c >= 0 && c.get_den() == 1;
            CHECK(ok);
        }
}

TEST_CASE("Rogers-Ramanujan at order 60")
{
    CHECK(rr_product(2, 6).agrees_with(PuiseuxSeries::from_ints(0, 1, {1, 1, 1, 1, 2, 2, 3}, R(7))));
    CHECK(rr_product(1, 3).agrees_with(PuiseuxSeries::from_ints(0, 1, {1, 0, 1, 1}, R(4))));
    for (int s : {1, 2}) {
        auto lhs = character(5, s, 60).series;
        auto rhs = rr_product(s, 60).shifted(kappa(5, s));
        CHECK(lhs.agrees_with(rhs));
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("Legendre symbol mod 5")
{
    CHECK(legendre5(1) == 1);
    CHECK(legendre5(2) == -1);
    CHECK(legendre5(3) == -1);
    CHECK(legendre5(4) == 1);
    CHECK(legendre5(5) == 0);
    CHECK(legendre5(11) == 1);
}

TEST_CASE("Ramanujan continued fraction as a character quotient")
{
    const long N = 40;
    auto r = ramanujan_cf(N);
    CHECK(r.offset() == R(1, 5));
    auto quotient = character(5, 1, N).series * inv(character(5, 2, N).series);
    CHECK(r.agrees_with(quotient));
    CHECK(*(r - quotient).trunc() >= R(1, 5) + N);
}

TEST_CASE("icosahedral equation")
{
    auto res = icosahedral_residual(30);
    CHECK(res.is_zero());
    REQUIRE(res.trunc());
    CHECK(*res.trunc() > 0);
    auto jj = j_invariant(10);
    CHECK(icosahedral_polynomial(PuiseuxSeries::zero(R(10)), jj).agrees_with(PuiseuxSeries::constant(1)));
    auto X = pow(ramanujan_cf(30), 5);
    auto shifted = icosahedral_polynomial(X, j_invariant(30) + PuiseuxSeries::constant(1));
    CHECK(!shifted.is_zero());
    // the perturbation adds X (X^2+11X-1)^5, leading term -q
    CHECK(shifted.offset() == 1);
    CHECK(shifted.coeffs()[0] == -1);
}

TEST_CASE("Ising characters")
{
    auto chars = characters_of(3, 4, 20);
    REQUIRE(chars.size() == 3);
    std::vector<Rational> ks;
    for (const auto &c : chars) {
        ks.push_back(c.kappa);
        CHECK(c.series.offset() == c.kappa);
        CHECK(c.series.coeffs()[0] == 1);
    }
    std::sort(ks.begin(), ks.end());
    CHECK(ks == std::vector<Rational>{R(-1, 48), R(1, 24), R(23, 48)});
    CHECK_THROWS(characters_of(4, 7, 10));
}
