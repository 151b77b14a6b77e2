#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlde/catalog.hpp"
#include "mlde/multipoly.hpp"

#include <random>

using namespace mlde;
using P = MultiPoly;

namespace
{

Rational R(long n, long d = 1) { return frac(n, d); }

P random_poly(std::mt19937_64 &rng, const std::vector<Var> &vars)
{
    std::uniform_int_distribution<int> nterms(0, 5), ex(0, 3);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    P p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        P m(frac(num(rng), den(rng)));
        for (Var v : vars)
            m *= pow(P::var(v), unsigned(ex(rng)));
        p += m;
    }
    return p;
}

const PartResult &part(const IdentityResult &r, const std::string &label)
{
    for (const auto &p : r.parts)
        if (p.label == label)
            return p;
    FAIL("no part " << label);
    return r.parts.front();
}

} // namespace

TEST_CASE("symbols are interned")
{
    Var a = symbol("alpha_test");
    CHECK(symbol("alpha_test") == a);
    CHECK(symbol_name(a) == "alpha_test");
    CHECK(symbol("beta_test") != a);
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937_64 rng(11);
    std::vector<Var> vars = {symbol("p"), symbol("q"), symbol("r")};
    for (int trial = 0; trial < 200; ++trial) {
        P a = random_poly(rng, vars), b = random_poly(rng, vars), c = random_poly(rng, vars);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a - a).is_zero());
        CHECK(a * P(1) == a);
        CHECK((a * P(0)).is_zero());
        // no zero coefficient is ever stored
        P d = a * b - b * c;
        for (const auto &[m, coef] : d.terms())
            CHECK(coef != 0);
    }
}

TEST_CASE("derivative and substitution")
{
    std::mt19937_64 rng(5);
    Var x = symbol("p"), y = symbol("q");
    for (int trial = 0; trial < 100; ++trial) {
        P a = random_poly(rng, {x, y}), b = random_poly(rng, {x, y});
        // Leibniz rule
        CHECK((a * b).derivative(x) == a.derivative(x) * b + a * b.derivative(x));
        // substitution is a ring map
        P v = random_poly(rng, {y});
        CHECK((a * b).substitute(x, v) == a.substitute(x, v) * b.substitute(x, v));
        std::map<Var, Rational> pt{{x, frac(long(trial) - 50, 7)}, {y, frac(3, long(trial) + 1)}};
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
    P f = pow(P::var(x) + P(1), 3);
    CHECK(f.degree(x) == 3);
    CHECK(f.coeff(x, 2) == P(3));
    CHECK(f.to_upoly(x).eval(R(1)) == 8);
    CHECK_THROWS(P::var(x).evaluate({}));
}

TEST_CASE("fractions")
{
    P x = P::var("p"), y = P::var("q");
    Fraction f(x, y), g(y, x);
    CHECK((f * g).equals(Fraction(1)));
    CHECK((f + g).equals(Fraction(x * x + y * y, x * y)));
    CHECK((f / f).equals(Fraction(1)));
    CHECK(Fraction(x * P(2), y * P(2)).equals(f));
    CHECK_THROWS_AS(Fraction(x, P()), ZeroDenominator);
    CHECK_THROWS_AS(f.evaluate({{symbol("p"), R(1)}, {symbol("q"), R(0)}}), PoleHit);
    CHECK(f.evaluate({{symbol("p"), R(3)}, {symbol("q"), R(4)}}) == R(3, 4));
}

TEST_CASE("determinants")
{
    P one(1), zero;
    Matrix3 id{{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    CHECK(det3(id) == one);

    P X1 = P::var("X1"), X2 = P::var("X2"), X3 = P::var("X3");
    Matrix3 V{{{one, one, one}, {X1, X2, X3}, {X1 * X1, X2 * X2, X3 * X3}}};
    P want = (X2 - X1) * (X3 - X1) * (X3 - X2);
    CHECK(det3(V) == want);
    CHECK(eliminate(det3(V)) == eliminate(want));

    // rows X, 1, X^2: the xi = X specialisation of Xi31
    Matrix3 Xi{{{X1, X2, X3}, {one, one, one}, {X1 * X1, X2 * X2, X3 * X3}}};
    P a = X1 * X2 + X2 * X3 + X3 * X1, b = -(X1 * X2 * X3);
    P delta0 = eliminate(R(-4) * pow(a, 3) - R(27) * b * b);
    CHECK(eliminate(det3(Xi) * det3(V)) == -delta0);

    std::vector<std::vector<P>> m4 = {{P(2), P(0), P(0), P(1)},
                                      {P(0), P(1), P(0), P(0)},
                                      {P(0), P(0), P(3), P(0)},
                                      {P(1), P(0), P(0), P(1)}};
    CHECK(det(m4) == P(3));
}

TEST_CASE("elimination is sound")
{
    P X1 = P::var("X1"), X2 = P::var("X2"), X3 = P::var("X3");
    P a = X1 * X2 + X2 * X3 + X3 * X1, b = -(X1 * X2 * X3);
    P v = (X1 - X2) * (X2 - X3) * (X3 - X1);
    CHECK(eliminate(R(-4) * pow(a, 3) - R(27) * b * b) == eliminate(v * v));
    CHECK(eliminate(X1 + X2 + X3).is_zero());
    CHECK(eliminate(P::var("xi1") + P::var("xi2") + P::var("xi3")).is_zero());
    auto vars = eliminate(v).variables();
    CHECK(vars.count(symbol("X3")) == 0);
}

TEST_CASE("diff forms")
{
    P X1 = P::var("X1"), X2 = P::var("X2");
    DiffForm d = DiffForm::d(X1 * X1 * X2);
    CHECK(d.c1 == R(2) * X1 * X2);
    CHECK(d.c2 == X1 * X1);
    DiffForm back = DiffForm::from_poly(d.to_poly());
    CHECK(back == d);
    // d of a product
    P f = X1 + X2 * X2, g = X1 * X2;
    CHECK(DiffForm::d(f * g) == DiffForm::d(f) * g + DiffForm::d(g) * f);
}

TEST_CASE("taylor_rational")
{
    Var x = symbol("x");
    P X = P::var(x);
    P p = X * (X - P(1)) * (X + P(1));
    auto s = taylor_rational(p, pow(X - P(1), 2), x, R(1), 3);
    CHECK(s.offset() == -1);
    CHECK(s.coeff(R(-1)) == 2);
    CHECK(s.coeff(R(0)) == 3);
    CHECK(s.coeff(R(1)) == 1);
    CHECK(s.coeff(R(2)) == 0);

    auto g = taylor_rational(P(1), P(1) - X, x, R(0), 10);
    for (int n = 0; n < 10; ++n)
        CHECK(g.coeff(R(n)) == 1);

    // f = p / (x - Xs)^2 = p'(Xs)/(x-Xs) + p''(Xs)/2 + ...; f^2 leads with p'(Xs)^2
    auto f = taylor_rational(p, pow(X - P(1), 2), x, R(1), 4);
    auto f2 = f * f;
    CHECK(f2.offset() == -2);
    CHECK(f2.coeff(R(-2)) == 4);
    CHECK(f2.coeff(R(-1)) == 2 * 2 * 3);

    CHECK_THROWS_AS(taylor_rational(P(1), P(), x, R(0), 3), ZeroDenominator);
}

TEST_CASE("catalog: every identity except (i) holds")
{
    for (const auto &id : identity_ids()) {
        auto r = verify_identity(id);
        CAPTURE(id);
        if (id == "i") {
            CHECK(!r.pass);
            CHECK(r.residual_terms() > 0);
        } else {
            CHECK(r.pass);
            CHECK(r.residual_terms() == 0);
        }
    }
    CHECK_THROWS_AS(make_identity("zz"), UnknownIdentity);
    CHECK_THROWS_AS(suite_ids("nope"), UnknownIdentity);
}

TEST_CASE("the printed B coefficients leave residuals")
{
    auto r = verify_identity("i");
    P U = P::var("U"), a0 = P::var("a0"), a2 = P::var("a2"), a3 = P::var("a3"), a4 = P::var("a4"),
      a5 = P::var("a5"), A1 = P::var("A1");
    CHECK(part(r, "x^6 vanishes").pass);
    CHECK(part(r, "x^5 vanishes").pass);
    CHECK(part(r, "B22 (x^0)").pass);
    CHECK(!part(r, "B00 (x^4)").pass);
    // the residual is the numerator of expansion - claim; both sides have denominator 1 here
    CHECK(part(r, "B00 (x^4)").residual == R(-2283, 400) * U * a0 * a2);
    CHECK(part(r, "B10 (x^3 / 2)").residual == R(-567, 200) * U * a0 * a3);
    CHECK(part(r, "2 B20 + B11 (x^2)").residual == R(-27, 5) * U * a0 * a4 - R(81, 200) * U * a2 * a2);
    CHECK(part(r, "B21 (x / 2)").residual ==
          R(-99, 50) * U * a0 * a5 - R(27, 200) * U * a2 * a3 - R(3, 40) * A1 * a4);

    auto fixed = verify_identity(b_coefficient_identity(corrected_b_claims()));
    CHECK(fixed.pass);
}

TEST_CASE("negative control: perturbed B22")
{
    BClaims c = corrected_b_claims();
    c.b22 += P(1);
    auto r = verify_identity(b_coefficient_identity(c));
    CHECK(!r.pass);
    const P &res = part(r, "B22 (x^0)").residual;
    CHECK(res.is_constant());
    CHECK(!res.is_zero());
    CHECK(part(r, "B(x,x)").residual.variables().count(symbol("x")) == 0);
    CHECK(!rational_point_check(b_coefficient_identity(c), 5, 1).pass);
}

TEST_CASE("limit polynomial is degree at most 4 in x")
{
    P B = b_limit_polynomial();
    CHECK(B.degree(symbol("x")) <= 4);
}

TEST_CASE("rational point checks")
{
    for (const auto &id : identity_ids()) {
        auto pc = rational_point_check(id, 20, 0);
        CAPTURE(id);
        CHECK(pc.pass == (id != "i"));
        CHECK(pc.trials >= 20);
    }
    // deterministic given the seed
    auto a = rational_point_check("d", 10, 42), b = rational_point_check("d", 10, 42);
    CHECK(a.pole_retries == b.pole_retries);
}

TEST_CASE("suites")
{
    CHECK(suite_ids("appendix-a") == std::vector<std::string>{"a", "c", "d"});
    CHECK(suite_ids("b-coeffs") == std::vector<std::string>{"i"});
    CHECK(suite_ids("all") == identity_ids());
    auto all = verify_all({"a", "b", "k"});
    REQUIRE(all.size() == 3);
    CHECK(all[1].id == "b");
}

TEST_CASE("Laurent claims at a branch point")
{
    Var x = symbol("x");
    (void)x;
    auto fixed = laurent_checks({R(0), R(1), R(-1)}, R(1), UPoly(std::vector<Rational>{R(1), R(2), R(-1)}));
    CHECK(fixed.size() == 5);
    for (const auto &r : fixed) {
        CAPTURE(r.label);
        CHECK(r.pass);
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        for (const auto &r : laurent_checks_random(6, seed)) {
            CAPTURE(r.label);
            CHECK(r.pass);
        }
    CHECK_THROWS(laurent_checks({R(1), R(1)}, R(1), UPoly(R(1))));
}
