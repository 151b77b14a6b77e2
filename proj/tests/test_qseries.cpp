#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlde/modular_forms.hpp"
#include "mlde/qseries.hpp"
#include "mlde/qseries_json.hpp"

#include <random>

using namespace mlde;

namespace
{

Rational R(long n, long d = 1) { return frac(n, d); }

std::vector<Rational> ints(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

// brute-force partition count
long partitions(int n, int max_part)
{
    if (n == 0)
        return 1;
    long c = 0;
    for (int k = std::min(n, max_part); k >= 1; --k)
        c += partitions(n - k, k);
    return c;
}

PuiseuxSeries random_series(std::mt19937_64 &rng, const Rational &offset, long grid, int len, const Rational &trunc)
{
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    std::vector<Rational> c;
    for (int i = 0; i < len; ++i)
        c.push_back(frac(num(rng), den(rng)));
    if (c[0] == 0)
        c[0] = 1;
    return PuiseuxSeries(offset, grid, c, trunc);
}

} // namespace

TEST_CASE("frac canonicalizes and rejects zero denominators")
{
    CHECK(frac(6, -4) == Rational(-3, 2));
    CHECK(frac(6, -4).get_den() == 2);
    CHECK_THROWS_AS(frac(1, 0), std::domain_error);
}

TEST_CASE("rational parsing round trip")
{
    CHECK(parse_rational("-11/3600") == R(-11, 3600));
    CHECK(parse_rational("4/6") == R(2, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(R(-22, 5)) == "-22/5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("normalization strips leading zeros into the offset")
{
    PuiseuxSeries s(R(0), 2, ints({0, 0, 3, 1}), R(5));
    CHECK(s.offset() == 1);
    CHECK(s.coeffs()[0] == 3);
    CHECK(s.coeff(R(3, 2)) == 1);
    CHECK(s.coeff(R(5, 4)) == 0);
    CHECK_THROWS_AS(s.coeff(R(5)), std::out_of_range);
    PuiseuxSeries z(R(0), 1, ints({0, 0}), R(3));
    CHECK(z.is_zero());
}

TEST_CASE("align puts both series on a common lattice")
{
    auto a = PuiseuxSeries::monomial(1, R(1, 24));
    auto b = PuiseuxSeries::monomial(1, R(1, 6));
    auto [x, y] = align(a, b);
    CHECK(x.grid() == 24);
    CHECK(y.grid() == 24);
    CHECK(x.offset() == R(1, 24));
    CHECK(y.offset() == R(1, 6));

    auto [u, v] = align(a, a);
    CHECK(u == v);
    CHECK(u.agrees_with(a));
    auto w = PuiseuxSeries::from_ints(0, 1, {1, 2, 3}, R(5));
    auto [w1, w2] = align(w, w);
    CHECK(w1 == w);
    CHECK(w2 == w);

    auto c1 = PuiseuxSeries::from_ints(R(11, 60), 1, {1, 0, 1});
    auto c2 = PuiseuxSeries::from_ints(R(-1, 60), 1, {1, 1});
    auto [p, q] = align(c1, c2);
    CHECK(p.grid() == 60);
    CHECK(q.grid() == 60);
    CHECK(p.offset() == R(11, 60));
    CHECK(q.offset() == R(-1, 60));
    CHECK(p.agrees_with(c1));
    CHECK(q.agrees_with(c2));
}

TEST_CASE("mul examples")
{
    auto a = PuiseuxSeries::from_ints(0, 1, {1, 1});
    auto b = PuiseuxSeries::from_ints(0, 1, {1, -1});
    CHECK(mul(a, b) == PuiseuxSeries::from_ints(0, 1, {1, 0, -1}));

    auto m = mul(PuiseuxSeries::monomial(1, R(11, 60)), PuiseuxSeries::monomial(1, R(-1, 60)));
    CHECK(m == PuiseuxSeries::monomial(1, R(1, 6)));

    auto eta = dedekind_eta(10).series;
    auto e4 = mul(mul(eta, eta), mul(eta, eta));
    CHECK(e4.offset() == R(1, 6));
    std::vector<long> want = {1, -4, 2, 8, -5, -4, -10};
    for (std::size_t n = 0; n < want.size(); ++n)
        CHECK(e4.coeff(R(1, 6) + long(n)) == want[n]);
}

TEST_CASE("truncation propagates through products")
{
    auto a = PuiseuxSeries::from_ints(R(1, 2), 1, {1, 2, 3}, R(7, 2));
    auto b = PuiseuxSeries::from_ints(R(1), 1, {1, 1}, R(4));
    auto p = mul(a, b);
    // a*b known up to min(7/2 + 1, 4 + 1/2)
    REQUIRE(p.trunc());
    CHECK(*p.trunc() == R(9, 2));
    auto s = a + b;
    REQUIRE(s.trunc());
    CHECK(*s.trunc() == R(7, 2));
}

TEST_CASE("inv examples")
{
    auto g = inv(PuiseuxSeries::from_ints(0, 1, {1, -1}, R(8)));
    for (int n = 0; n < 8; ++n)
        CHECK(g.coeff(R(n)) == 1);
    CHECK(inv(PuiseuxSeries::monomial(1, 1)) == PuiseuxSeries::monomial(1, -1));

    auto p = inv(pochhammer(std::nullopt, 6));
    for (int n = 0; n <= 6; ++n)
        CHECK(p.coeff(R(n)) == partitions(n, n));
    CHECK_THROWS_AS(inv(PuiseuxSeries::zero(R(5))), ZeroSeries);
    CHECK_THROWS_AS(inv(PuiseuxSeries::from_ints(0, 1, {1, 1})), std::invalid_argument);
}

TEST_CASE("pochhammer examples")
{
    CHECK(pochhammer(1, 5).agrees_with(PuiseuxSeries::from_ints(0, 1, {1, -1})));
    CHECK(pochhammer(2, 5).agrees_with(PuiseuxSeries::from_ints(0, 1, {1, -1, -1, 1})));
    auto e = pochhammer(std::nullopt, 12);
    std::vector<long> pent(13, 0);
    // Euler: sum (-1)^k q^{k(3k-1)/2}
    for (long k = -3; k <= 3; ++k) {
        long g = k * (3 * k - 1) / 2;
        if (g <= 12)
            pent[std::size_t(g)] += (k % 2 == 0) ? 1 : -1;
    }
    for (long n = 0; n <= 12; ++n)
        CHECK(e.coeff(R(n)) == pent[std::size_t(n)]);
    CHECK_THROWS_AS(pochhammer(2, 0), std::invalid_argument);
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937_64 rng(20240101);
    std::uniform_int_distribution<int> len(1, 8), g(1, 4), on(-6, 6), od(1, 5), extra(3, 9);
    for (int trial = 0; trial < 150; ++trial) {
        long D = g(rng);
        auto mk = [&] {
            Rational off = frac(on(rng), od(rng));
            return random_series(rng, off, D, len(rng), off + extra(rng));
        };
        PuiseuxSeries a = mk(), b = mk(), c = mk();
        CHECK((a * b).agrees_with(b * a));
        CHECK(((a * b) * c).agrees_with(a * (b * c)));
        CHECK((a * (b + c)).agrees_with(a * b + a * c));
        CHECK(((a + b) + c).agrees_with(a + (b + c)));
        CHECK((a + b).agrees_with(b + a));
        CHECK((a - a).is_zero());
        CHECK((a * b).offset() == a.offset() + b.offset());
    }
}

TEST_CASE("inverse property on random series")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(1, 10), on(-5, 5), od(1, 7), extra(2, 12);
    for (int trial = 0; trial < 120; ++trial) {
        Rational off = frac(on(rng), od(rng));
        auto a = random_series(rng, off, 1 + trial % 3, len(rng), off + extra(rng));
        auto ia = inv(a);
        CHECK(ia.offset() == -a.offset());
        auto one = a * ia;
        REQUIRE(one.trunc());
        CHECK(*one.trunc() == a.precision());
        CHECK(one.agrees_with(PuiseuxSeries::constant(1)));
    }
}

TEST_CASE("theta and shift")
{
    auto s = PuiseuxSeries::from_ints(R(1, 3), 1, {2, 5}, R(10));
    auto t = s.theta();
    CHECK(t.coeff(R(1, 3)) == R(2, 3));
    CHECK(t.coeff(R(4, 3)) == R(20, 3));
    CHECK(s.shifted(R(2, 3)).offset() == 1);
    CHECK(PuiseuxSeries::constant(5).theta().is_zero());
}

TEST_CASE("regrid keeps the series")
{
    auto s = PuiseuxSeries::from_ints(R(1, 2), 2, {1, 3, 4}, R(4));
    auto r = s.regrid(6);
    CHECK(r.grid() == 6);
    CHECK(r.agrees_with(s));
    CHECK_THROWS_AS(s.regrid(5), GridMismatch);
}

TEST_CASE("json round trip")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto s = random_series(rng, frac(long(i) - 15, 7), 1 + i % 4, 1 + i % 6, frac(long(i) + 1, 3) + 10);
        auto j = to_json(s);
        CHECK(j["offset"].is_string());
        CHECK(series_from_json(j) == s);
        CHECK(series_from_json(nlohmann::json::parse(j.dump())) == s);
    }
    auto exact = PuiseuxSeries::from_ints(R(-1, 60), 1, {1, 1, 1});
    auto j = to_json(exact);
    CHECK(j["trunc"].is_null());
    CHECK(series_from_json(j) == exact);
}
