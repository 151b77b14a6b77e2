#include "mlde/catalog.hpp"

#include <algorithm>
#include <future>
#include <random>

namespace mlde
{

namespace
{

using P = MultiPoly;
using F = Fraction;

P v(const char *name) { return P::var(name); }
P q(long n, long d = 1) { return P(frac(n, d)); }

struct Sym {
    P X1 = v("X1"), X2 = v("X2"), X3 = v("X3");
    P xi1 = v("xi1"), xi2 = v("xi2"), xi3 = v("xi3");
    P c = v("c"), U = v("U"), A1 = v("A1"), A2 = v("A2"), A3 = v("A3");
    P a0 = v("a0"), a1 = v("a1"), a2 = v("a2"), a3 = v("a3"), a4 = v("a4"), a5 = v("a5");
    P x = v("x"), x1 = v("x1"), x2 = v("x2"), Xs = v("Xs"), Y = v("Y");
};

const Sym &S()
{
    static const Sym s;
    return s;
}

// symmetric data of the cubic with roots X1, X2, X3 (sum zero)
struct Cubic {
    P a, b, detV, detXi30, detXi31, delta0;
};

Cubic cubic()
{
    const Sym &s = S();
    Cubic k;
    k.a = s.X1 * s.X2 + s.X1 * s.X3 + s.X2 * s.X3;
    k.b = -(s.X1 * s.X2 * s.X3);
    Matrix3 V = {{{P(1), s.X1, s.X1 * s.X1}, {P(1), s.X2, s.X2 * s.X2}, {P(1), s.X3, s.X3 * s.X3}}};
    Matrix3 X30 = {{{s.X1, s.X2, s.X3}, {P(1), P(1), P(1)}, {s.xi1, s.xi2, s.xi3}}};
    Matrix3 X31 = {{{s.X1, s.X2, s.X3}, {P(1), P(1), P(1)}, {s.xi1 * s.X1, s.xi2 * s.X2, s.xi3 * s.X3}}};
    k.detV = det3(V);
    k.detXi30 = det3(X30);
    k.detXi31 = det3(X31);
    k.delta0 = q(-4) * pow(k.a, 3) - q(27) * k.b * k.b;
    return k;
}

P dform(const P &f) { return DiffForm::d(f).to_poly(); }

// cyclic sum over (1,2,3) -> (2,3,1) -> (3,1,2)
template <class Fn> F cyclic(Fn term)
{
    const Sym &s = S();
    return term(s.X1, s.X2, s.X3, s.xi1, s.xi2, s.xi3) + term(s.X2, s.X3, s.X1, s.xi2, s.xi3, s.xi1) +
           term(s.X3, s.X1, s.X2, s.xi3, s.xi1, s.xi2);
}

P substitute(const P &p, Var var, const Rational &value) { return p.partial_eval({{var, value}}); }

const Rational c25(-22, 5);

Identity ident_a()
{
    Cubic k = cubic();
    P lhs = k.detXi31 * k.detV;
    P rhs = q(2) * k.a * k.a * dform(k.a) + q(9) * k.b * dform(k.b);
    return {"a", "det Xi31 * det V3 = 2a^2 da + 9b db", {{"general xi", lhs, rhs}}};
}

Identity ident_b()
{
    Cubic k = cubic();
    P lhs = k.detXi30 * k.detV;
    P rhs = q(9) * k.b * dform(k.a) - q(6) * k.a * dform(k.b);
    return {"b", "det Xi30 * det V3 = 9b da - 6a db", {{"general xi", lhs, rhs}}};
}

Identity ident_c()
{
    Cubic k = cubic();
    F lhs(q(-3) * k.detXi31, k.detV);
    F rhs = cyclic([](const P &X1, const P &X2, const P &, const P &x1, const P &x2, const P &) {
        return F(x1 - x2, X1 - X2);
    });
    return {"c", "-3 det Xi31 / det V3 = (xi1 - xi2)/(X1 - X2) + cyclic", {{"omega", lhs, rhs}}};
}

Identity ident_d()
{
    Cubic k = cubic();
    F omega(q(-3) * k.detXi31, k.detV);
    F half_dlog(dform(k.delta0), q(2) * k.delta0);
    return {"d",
            "omega = (1/2) d log Delta0",
            {{"omega = dDelta0/(2 Delta0)", omega, half_dlog}, {"Delta0 = (det V3)^2", k.delta0, k.detV * k.detV}}};
}

Identity ident_e()
{
    const Sym &s = S();
    Cubic k = cubic();
    P a2 = q(4) * k.a;
    auto Theta = [&](const P &X) { return q(-4) * s.c * X * s.U + s.A1; };
    F lhs = cyclic([&](const P &X1, const P &X2, const P &X3, const P &, const P &x2, const P &x3) {
        return F(-(Theta(X1) * (x2 * X3 + x3 * X2)), (X1 - X2) * (X3 - X1));
    });
    F rhs = F(q(-2, 3) * s.c * a2 * s.U * k.detXi30, k.detV) - F(q(2) * s.A1 * k.detXi31, k.detV);
    return {"e", "cyclic Theta sum = -(2c/3) a2 U Xi30/V3 - 2 A1 Xi31/V3", {{"general xi", lhs, rhs}}};
}

P psi_of(const P &p, const P &theta, Var x)
{
    const Sym &s = S();
    P p1 = p.derivative(x), p2 = p1.derivative(x), p3 = p2.derivative(x);
    P t1 = theta.derivative(x), t2 = t1.derivative(x);
    return q(-1, 480) * s.c * (p1 * p3 - q(3, 2) * p2 * p2) * s.U - q(1, 5) * p * t2 - q(1, 10) * p1 * t1 +
           q(1, 5) * p2 * theta;
}

Identity ident_f()
{
    const Sym &s = S();
    Var x = symbol("x");
    P p = s.a0 * pow(s.x, 3) + s.a2 * s.x + s.a3;
    P theta = q(1, 4) * (-(s.c * s.a0 * s.x * s.U) + s.A1);
    P rhs = q(-3, 20) * s.c * s.a0 * s.a0 * s.x * s.x * s.U + q(3, 10) * s.a0 * s.A1 * s.x +
            q(1, 80) * s.c * s.a0 * s.a2 * s.U;
    return {"f", "psi for n = 3", {{"psi(x)", psi_of(p, theta, x), rhs}}};
}

Identity ident_g()
{
    const Sym &s = S();
    Var x = symbol("x"), c = symbol("c");
    P p = s.a0 * pow(s.x, 3) + s.a2 * s.x + s.a3;
    P theta = q(1, 4) * (-(s.c * s.a0 * s.x * s.U) + s.A1);
    P p1 = p.derivative(x), p2 = p1.derivative(x), p3 = p2.derivative(x), t1 = theta.derivative(x);
    // value at a branch point: the p * theta'' term drops out
    P at_root = q(-1, 480) * s.c * p1 * p3 * s.U + q(1, 320) * s.c * p2 * p2 * s.U - q(1, 10) * p1 * t1 +
                q(1, 5) * p2 * theta;
    at_root = at_root.substitute(x, s.Xs);
    P known = s.c * s.a0 * s.a0 *
              (q(1, 16) * (s.c + q(2)) * s.U * s.Xs * s.Xs) -
              q(1, 8) * (s.c + q(2)) * s.a0 * s.A1 * s.Xs;
    P lhs = substitute(at_root - known, c, c25);
    P rhs = substitute(q(1, 80) * s.c * s.a0 * s.a2 * s.U, c, c25);
    return {"g", "constant C for n = 3", {{"C", lhs, rhs}}};
}

Identity ident_h()
{
    const Sym &s = S();
    Var c = symbol("c"), a1 = symbol("a1");
    // U * P, with P = -(77/400) a1^2 U + (1/10) a1 A1 + (143/100) a2 U - (1/16) A1^2 / U
    P UP = q(-77, 400) * s.a1 * s.a1 * s.U * s.U + q(1, 10) * s.a1 * s.A1 * s.U + q(143, 100) * s.a2 * s.U * s.U -
           q(1, 16) * s.A1 * s.A1;
    P U_Csing = q(-2) * UP - q(1, 8) * s.A1 * s.A1 - q(2, 3) * s.c * s.a2 * s.U * s.U;
    P lhs = substitute(substitute(U_Csing, c, c25), a1, 0);
    P rhs = q(11, 150) * s.U * s.U * s.a2;
    return {"h", "U * C_sing = (11/150) U^2 a2 at a1 = 0", {{"C_sing", lhs, rhs}}};
}

P corollary_limit()
{
    const Sym &s = S();
    Var x1 = symbol("x1"), x2 = symbol("x2"), Y = symbol("Y"), c = symbol("c");
    const P &X1 = s.x1, &X2 = s.x2, &a0 = s.a0, &U = s.U;
    auto sym = [&](int i, int j) { return pow(X1, unsigned(i)) * pow(X2, unsigned(j)) + pow(X1, unsigned(j)) * pow(X2, unsigned(i)); };
    P K = s.c * a0 * a0 * U *
          (q(5, 32) * sym(6, 0) + q(1, 4) * sym(5, 1) + q(1, 4) * sym(4, 2) - q(173, 80) * pow(X1 * X2, 3));
    K += a0 * s.A1 * (q(-1, 16) * sym(5, 0) - q(1, 8) * sym(4, 1) + q(23, 40) * sym(3, 2));
    K += (s.c * a0 * s.a2 * U - q(1, 2) * a0 * s.A2) * sym(4, 0);
    K += q(1, 8) * (s.c * a0 * s.a2 * U + q(51, 10) * a0 * s.A2) * sym(3, 1);
    K += q(1, 8) * (s.c * a0 * s.a3 * U - q(1, 2) * s.a2 * s.A1 + q(28, 5) * a0 * s.A3) * sym(3, 0);
    K += q(1, 4) * s.c * a0 * s.Y * (X1 + X2) * U - q(1, 8) * s.Y * s.A1;
    P p = a0 * pow(s.x, 5) + s.a2 * pow(s.x, 3) + s.a3 * s.x * s.x + s.a4 * s.x + s.a5;
    K = K.substitute({{x1, s.x}, {x2, s.x}});
    K = K.substitute(Y, p);
    return substitute(K, c, c25);
}

} // namespace

MultiPoly b_limit_polynomial()
{
    const Sym &s = S();
    Var x = symbol("x"), c = symbol("c");
    P p = s.a0 * pow(s.x, 5) + s.a2 * pow(s.x, 3) + s.a3 * s.x * s.x + s.a4 * s.x + s.a5;
    P A0 = q(-3) * s.c * s.a0 * s.U;
    P theta = q(1, 4) * (A0 * pow(s.x, 3) + s.A1 * s.x * s.x + s.A2 * s.x + s.A3);
    P psi = substitute(psi_of(p, theta, x), c, c25);
    return psi - corollary_limit();
}

BClaims stated_b_claims()
{
    const Sym &s = S();
    BClaims b;
    b.b00 = q(1077, 80) * s.a0 * s.a2 * s.U + q(3, 5) * s.a0 * s.A2;
    b.b10 = q(87, 40) * s.a0 * s.a3 * s.U + q(3, 20) * s.a2 * s.A1 - q(1, 5) * s.a0 * s.A3;
    b.b20_plus_b11 = q(3, 40) * s.a2 * s.a2 * s.U + q(16, 5) * s.a0 * s.a4 * s.U + q(1, 40) * s.a3 * s.A1 +
                     q(9, 40) * s.a2 * s.A2;
    b.b21 = q(11, 10) * s.a0 * s.a5 * s.U + q(1, 40) * s.a2 * s.a3 * s.U + q(1, 16) * s.a4 * s.A1 +
            q(1, 40) * s.a3 * s.A2 + q(3, 20) * s.a2 * s.A3;
    b.b22 = q(11, 200) * s.U * s.a2 * s.a4 - q(11, 200) * s.U * s.a3 * s.a3 + q(1, 40) * s.a5 * s.A1 -
            q(1, 40) * s.a4 * s.A2 + q(1, 10) * s.a3 * s.A3;
    return b;
}

BClaims corrected_b_claims()
{
    const Sym &s = S();
    BClaims b;
    b.b00 = q(1551, 200) * s.a0 * s.a2 * s.U + q(3, 5) * s.a0 * s.A2;
    b.b10 = q(-33, 50) * s.a0 * s.a3 * s.U + q(3, 20) * s.a2 * s.A1 - q(1, 5) * s.a0 * s.A3;
    b.b20_plus_b11 = q(-33, 100) * s.a2 * s.a2 * s.U - q(11, 5) * s.a0 * s.a4 * s.U + q(1, 40) * s.a3 * s.A1 +
                     q(9, 40) * s.a2 * s.A2;
    b.b21 = q(-22, 25) * s.a0 * s.a5 * s.U - q(11, 100) * s.a2 * s.a3 * s.U - q(1, 80) * s.a4 * s.A1 +
            q(1, 40) * s.a3 * s.A2 + q(3, 20) * s.a2 * s.A3;
    b.b22 = stated_b_claims().b22;
    return b;
}

Identity b_coefficient_identity(const BClaims &claims)
{
    Var x = symbol("x");
    const P &X = S().x;
    P B = b_limit_polynomial();
    Identity id{"i", "B coefficients for n = 5", {}};
    id.parts.push_back({"x^6 vanishes", B.coeff(x, 6), P()});
    id.parts.push_back({"x^5 vanishes", B.coeff(x, 5), P()});
    id.parts.push_back({"B00 (x^4)", B.coeff(x, 4), claims.b00});
    id.parts.push_back({"B10 (x^3 / 2)", q(1, 2) * B.coeff(x, 3), claims.b10});
    id.parts.push_back({"2 B20 + B11 (x^2)", B.coeff(x, 2), claims.b20_plus_b11});
    id.parts.push_back({"B21 (x / 2)", q(1, 2) * B.coeff(x, 1), claims.b21});
    id.parts.push_back({"B22 (x^0)", B.coeff(x, 0), claims.b22});
    P full = claims.b00 * pow(X, 4) + q(2) * claims.b10 * pow(X, 3) + claims.b20_plus_b11 * X * X +
             q(2) * claims.b21 * X + claims.b22;
    id.parts.push_back({"B(x,x)", B, full});
    return id;
}

namespace
{

Identity ident_j()
{
    const Sym &s = S();
    Cubic k = cubic();
    auto term = [&](const P &Xs, const P &Xt, const P &Xu, const P &xs) {
        P dp = s.a0 * (Xs - Xt) * (Xs - Xu);
        return F(q(2) * xs * (q(-1, 4) * s.c * s.a0 * Xs * s.U + q(1, 4) * s.A1), dp);
    };
    F lhs = term(s.X1, s.X2, s.X3, s.xi1) + term(s.X2, s.X3, s.X1, s.xi2) + term(s.X3, s.X1, s.X2, s.xi3);
    F omega(q(-3) * k.detXi31, k.detV);
    F rhs = F(q(-1, 6) * s.c * s.U) * omega - F(s.A1 * k.detXi30, q(2) * s.a0 * k.detV);
    return {"j", "equivalence of the <1> equations for n = 3", {{"general xi", lhs, rhs}}};
}

Identity ident_k()
{
    const Sym &s = S();
    // (c/16) a0^2 (a2/a0 + 5 Xs^2) + (a0/4) { 2 Xs (-c a0 Xs / 4) + (a2/a0 + 3 Xs^2)(-c a0 / 4) }
    F r(s.a2, s.a0);
    F X2 = F(s.Xs * s.Xs);
    F lhs = F(q(1, 16) * s.c * s.a0 * s.a0) * (r + F(q(5)) * X2) +
            F(q(1, 4) * s.a0) * (F(q(2) * s.Xs * q(-1, 4) * s.c * s.a0 * s.Xs) +
                                 (r + F(q(3)) * X2) * F(q(-1, 4) * s.c * s.a0));
    return {"k", "cancellation in the N = 2 graphical representation", {{"n = 3", lhs, F(0)}}};
}

Identity ident_l()
{
    const Sym &s = S();
    Cubic k = cubic();
    P a2 = s.a0 * k.a;
    auto sum = [&](int power) {
        auto term = [&](const P &Xs, const P &Xt, const P &Xu, const P &xs) {
            return F(xs * pow(Xs, unsigned(power)), s.a0 * (Xs - Xt) * (Xs - Xu));
        };
        return term(s.X1, s.X2, s.X3, s.xi1) + term(s.X2, s.X3, s.X1, s.xi2) + term(s.X3, s.X1, s.X2, s.xi3);
    };
    F rhs = F(-a2, q(3) * s.a0) * sum(0);
    return {"l", "sum xi_s X_s^2 / p'(X_s) = -(a2 / 3 a0) sum xi_s / p'(X_s)", {{"n = 3", sum(2), rhs}}};
}

} // namespace

std::size_t IdentityResult::residual_terms() const
{
    std::size_t n = 0;
    for (const auto &p : parts)
        n += p.residual.term_count();
    return n;
}

std::vector<std::string> identity_ids() { return {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"}; }

Identity make_identity(const std::string &id)
{
    if (id == "a")
        return ident_a();
    if (id == "b")
        return ident_b();
    if (id == "c")
        return ident_c();
    if (id == "d")
        return ident_d();
    if (id == "e")
        return ident_e();
    if (id == "f")
        return ident_f();
    if (id == "g")
        return ident_g();
    if (id == "h")
        return ident_h();
    if (id == "i")
        return b_coefficient_identity(stated_b_claims());
    if (id == "j")
        return ident_j();
    if (id == "k")
        return ident_k();
    if (id == "l")
        return ident_l();
    throw UnknownIdentity("unknown identity '" + id + "'");
}

IdentityResult verify_identity(const Identity &identity)
{
    IdentityResult r{identity.id, identity.title, true, {}};
    for (const auto &part : identity.parts) {
        F l = eliminate(part.lhs), rr = eliminate(part.rhs);
        PartResult pr{part.label, false, l.residual(rr)};
        pr.pass = pr.residual.is_zero();
        r.pass = r.pass && pr.pass;
        r.parts.push_back(std::move(pr));
    }
    return r;
}

IdentityResult verify_identity(const std::string &id) { return verify_identity(make_identity(id)); }

std::vector<IdentityResult> verify_all(const std::vector<std::string> &ids)
{
    std::vector<std::future<IdentityResult>> jobs;
    for (const auto &id : ids)
        jobs.push_back(std::async(std::launch::async, [id] { return verify_identity(id); }));
    std::vector<IdentityResult> out;
    for (auto &j : jobs)
        out.push_back(j.get());
    return out;
}

std::vector<std::string> suite_ids(const std::string &suite)
{
    if (suite == "appendix-a")
        return {"a", "c", "d"};
    if (suite == "appendix-b")
        return {"b"};
    if (suite == "appendix-c")
        return {"e"};
    if (suite == "psi-n3")
        return {"f", "g", "h", "k"};
    if (suite == "b-coeffs")
        return {"i"};
    if (suite == "equivalence")
        return {"j", "l"};
    if (suite == "all")
        return identity_ids();
    throw UnknownIdentity("unknown suite '" + suite + "'");
}

namespace
{

Rational random_rational(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    return frac(num(rng), den(rng));
}

} // namespace

PointCheckResult rational_point_check(const Identity &identity, int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("rational_point_check needs at least one trial");
    const int max_retries = 100;
    std::mt19937_64 rng(seed);
    PointCheckResult r{identity.id, true, 0, 0, ""};
    for (const auto &part : identity.parts) {
        F l = eliminate(part.lhs), rr = eliminate(part.rhs);
        std::set<Var> vars = l.variables();
        for (Var w : rr.variables())
            vars.insert(w);
        for (int t = 0; t < trials; ++t) {
            int retries = 0;
            for (;;) {
                std::map<Var, Rational> pt;
                for (Var w : vars)
                    pt[w] = random_rational(rng);
                try {
                    Rational lv = l.evaluate(pt), rv = rr.evaluate(pt);
                    if (lv != rv) {
                        r.pass = false;
                        r.failed_part = part.label;
                        return r;
                    }
                    break;
                } catch (const PoleHit &) {
                    ++r.pole_retries;
                    if (++retries > max_retries)
                        throw PoleHit("rational_point_check: too many poles in part '" + part.label + "'");
                }
            }
            ++r.trials;
        }
    }
    return r;
}

PointCheckResult rational_point_check(const std::string &id, int trials, std::uint64_t seed)
{
    return rational_point_check(make_identity(id), trials, seed);
}

std::vector<LaurentResult> laurent_checks(const std::vector<Rational> &roots, const Rational &a0, const UPoly &theta)
{
    if (roots.size() < 2)
        throw std::invalid_argument("laurent_checks needs at least two roots");
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw std::invalid_argument("laurent_checks needs distinct roots");
    Var x = symbol("x");
    const P &X = S().x;
    const Rational &Xs = roots[0];
    P p(a0);
    for (const auto &r : roots)
        p *= X - P(r);
    P dp[6];
    dp[0] = p;
    for (int k = 1; k < 6; ++k)
        dp[k] = dp[k - 1].derivative(x);
    Rational d[6];
    for (int k = 0; k < 6; ++k)
        d[k] = dp[k].evaluate({{x, Xs}});
    P th;
    for (int k = 0; k <= theta.degree(); ++k)
        th += theta.coeff(k) * pow(X, unsigned(k));
    P dth[4];
    dth[0] = th;
    for (int k = 1; k < 4; ++k)
        dth[k] = dth[k - 1].derivative(x);
    Rational t[4];
    for (int k = 0; k < 4; ++k)
        t[k] = dth[k].evaluate({{x, Xs}});
    P h = X - P(Xs);

    std::vector<LaurentResult> out;
    // coefficients of (x-X)^e for from <= e < to must match 'want' (missing entries mean zero)
    auto expect = [&](const std::string &label, const PuiseuxSeries &s, const std::map<long, Rational> &want,
                      long from, long to) {
        bool ok = true;
        for (long e = from; e < to; ++e) {
            auto it = want.find(e);
            if (s.coeff(Rational(e)) != (it == want.end() ? Rational(0) : it->second))
                ok = false;
        }
        out.push_back({label, ok});
    };
    auto fr = [](const Rational &r) { return F(P(r)); };

    // p'(x)^2 p'(X)^2 / p^2 - p^2 / (x-X)^4: no pole, constant p'p'''/3 - p''^2/2
    {
        P h4 = pow(h, 4);
        P num = dp[1] * dp[1] * P(d[1] * d[1]) * h4 - pow(p, 4);
        PuiseuxSeries s = taylor_rational(num, p * p * h4, x, Xs, 1);
        expect("regular two-point part: constant p'p'''/3 - p''^2/2", s,
               {{0, d[1] * d[3] / 3 - d[2] * d[2] / 2}}, -8, 1);
    }
    {
        PuiseuxSeries s = taylor_rational(pow(p, 4), P(1), x, Xs, 7);
        Rational p1 = d[1];
        expect("p^4 expansion through (x-X)^6", s,
               {{4, p1 * p1 * p1 * p1},
                {5, 2 * p1 * p1 * p1 * d[2]},
                {6, Rational(3, 2) * p1 * p1 * d[2] * d[2] + Rational(2, 3) * p1 * p1 * p1 * d[3]}},
               0, 7);
    }
    // f = p / (x-X)^2
    {
        PuiseuxSeries s = taylor_rational(p * p, P(d[1]) * pow(h, 4), x, Xs, 3);
        expect("f^2 / p'(X) through (x-X)^2", s,
               {{-2, d[1]},
                {-1, d[2]},
                {0, d[2] * d[2] / (4 * d[1]) + d[3] / 3},
                {1, d[4] / 12 + d[2] * d[3] / (6 * d[1])},
                {2, d[2] * d[4] / (24 * d[1]) + d[5] / 60 + d[3] * d[3] / (36 * d[1])}},
               -6, 3);
    }
    {
        PuiseuxSeries s = taylor_rational(p * (th + P(t[0])), P(2 * d[1]) * h * h, x, Xs, 3);
        Rational r2 = d[2] / d[1], r3 = d[3] / d[1], r4 = d[4] / d[1];
        expect("f (theta(x) + theta(X)) / (2 p'(X)) through (x-X)^2", s,
               {{-1, t[0]},
                {0, r2 * t[0] / 2 + t[1] / 2},
                {1, r3 * t[0] / 6 + r2 * t[1] / 4 + t[2] / 4},
                {2, r4 * t[0] / 24 + r3 * t[1] / 12 + r2 * t[2] / 8 + t[3] / 12}},
               -4, 3);
    }
    // the x-dependent two-point formula at x = X reduces to the special one (c = 1)
    {
        F p1(dp[1]), p2(dp[2]), p3(dp[3]);
        Rational P1 = d[1], P2 = d[2], P3 = d[3];
        F g = fr(P1 * P3 / 96) - fr(P2 * P2 / 64) + fr(P3 / (120 * P1)) * p1 * p1 -
              fr(P2 * P2 / (80 * P1 * P1)) * p1 * p1 - fr(P1 * P1 / 48) * p3 / p1 +
              fr(P1 * P1 / 32) * p2 * p2 / (p1 * p1) - fr(P1 * t[1] / 10) + fr(P2 * t[0] / (5 * P1 * P1)) * p1 * p1;
        PuiseuxSeries s = taylor_rational(g.num(), g.den(), x, Xs, 1);
        Rational want = -P1 * P3 / 480 + P2 * P2 / 320 - P1 * t[1] / 10 + P2 * t[0] / 5;
        expect("<theta(X) theta(x)>_r at x = X", s, {{0, want}}, -4, 1);
    }
    return out;
}

std::vector<LaurentResult> laurent_checks_random(int instances, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    std::vector<LaurentResult> out;
    const int degrees[] = {3, 5, 7};
    for (int i = 0; i < instances; ++i) {
        int n = degrees[i % 3];
        std::vector<Rational> roots;
        while (int(roots.size()) < n) {
            Rational r = frac(num(rng), den(rng));
            if (std::find(roots.begin(), roots.end(), r) == roots.end())
                roots.push_back(r);
        }
        Rational a0 = frac(num(rng) | 1, den(rng));
        std::vector<Rational> tc;
        for (int k = 0; k <= n; ++k)
            tc.push_back(frac(num(rng), den(rng)));
        for (auto &r : laurent_checks(roots, a0, UPoly(tc))) {
            r.label = "n=" + std::to_string(n) + ": " + r.label;
            out.push_back(std::move(r));
        }
    }
    return out;
}

} // namespace mlde
