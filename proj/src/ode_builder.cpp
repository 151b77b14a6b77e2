#include "mlde/ode_builder.hpp"

#include "mlde/linalg.hpp"

#include <bit>

namespace mlde
{

UPoly falling_serre(int m)
{
    UPoly p(Rational(1));
    for (int l = 0; l < m; ++l)
        p *= UPoly(std::vector<Rational>{-frac(l, 6), 1});
    return p;
}

UPoly indicial_target(int nu)
{
    int M = (nu - 1) / 2;
    UPoly p(Rational(1));
    for (int s = 1; s <= M; ++s)
        p *= UPoly(std::vector<Rational>{-kappa(nu, s), 1});
    return p;
}

namespace
{

int order_of(int nu)
{
    if (nu < 3 || nu % 2 == 0)
        throw std::invalid_argument("nu must be odd and >= 3");
    return (nu - 1) / 2;
}

} // namespace

std::map<int, Rational> indicial_solve(int nu)
{
    int M = order_of(nu);
    if (nu > 13)
        throw std::invalid_argument("indicial_solve covers 3 <= nu <= 13");
    UPoly rest = indicial_target(nu) - falling_serre(M);
    if (rest.coeff(M - 1) != 0)
        throw InconsistentSystem("kappa^(M-1) coefficients disagree; a D^(M-1) term would be needed");
    std::map<int, Rational> alpha;
    for (int m = M - 2; m >= 0; --m) {
        Rational a = rest.coeff(m);
        alpha[m] = a;
        rest -= UPoly(a) * falling_serre(m);
    }
    if (!rest.is_zero())
        throw InconsistentSystem("indicial system left a remainder");
    return alpha;
}

ModularODE build_operator_without_cusp(int nu, long N)
{
    ModularODE D;
    D.M = order_of(nu);
    D.alpha = indicial_solve(nu);
    for (const auto &[m, a] : D.alpha) {
        int w = 2 * (D.M - m);
        D.terms.emplace(m, ModularForm(w, a * eisenstein(w, N).series));
    }
    return D;
}

Rational cusp_solve(int nu)
{
    if (nu != 13)
        throw NotApplicable("a Delta term only arises for nu = 13");
    ModularODE D = build_operator_without_cusp(nu, 4);
    CharacterSeries vac = character(nu, 1, 3);
    PuiseuxSeries r = apply(D, vac.series);
    if (r.coeff(vac.kappa) != 0)
        throw InconsistentSystem("leading order does not vanish on the vacuum character");
    // Delta * f contributes exactly 1 at q^(kappa_1 + 1)
    return -r.coeff(vac.kappa + 1);
}

ModularODE build_operator(int nu, long N)
{
    ModularODE D = build_operator_without_cusp(nu, N);
    if (nu == 13) {
        Rational c = cusp_solve(nu);
        D.cusp_part = c;
        ModularForm &om = D.terms.at(0);
        om.series += c * discriminant(N).series;
    }
    return D;
}

PuiseuxSeries apply(const ModularODE &D, const PuiseuxSeries &f)
{
    std::vector<PuiseuxSeries> tower = serre_tower(unsigned(D.M), f);
    PuiseuxSeries out = tower[std::size_t(D.M)];
    for (const auto &[m, om] : D.terms)
        out += om.series * tower[std::size_t(m)];
    return out;
}

AnnihilationOrder annihilation_order(const ModularODE &D, const PuiseuxSeries &f)
{
    PuiseuxSeries r = apply(D, f);
    AnnihilationOrder a;
    a.checked_to = r.trunc();
    if (!r.is_zero())
        a.first_nonzero = r.offset();
    return a;
}

std::vector<PuiseuxSeries> wronskian(const std::vector<PuiseuxSeries> &fs)
{
    std::size_t M = fs.size();
    if (M == 0)
        throw std::invalid_argument("wronskian needs at least one series");
    if (M > 10)
        throw std::invalid_argument("wronskian: too many series");
    std::vector<std::vector<PuiseuxSeries>> a;
    for (const auto &f : fs)
        a.push_back(serre_tower(unsigned(M), f));
    std::size_t cols = M + 1;
    std::vector<PuiseuxSeries> det(std::size_t(1) << cols);
    det[0] = PuiseuxSeries::constant(1);
    for (unsigned mask = 1; mask < det.size(); ++mask) {
        int k = std::popcount(mask);
        if (std::size_t(k) > M)
            continue;
        std::size_t row = std::size_t(k - 1);
        PuiseuxSeries acc;
        int pos = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(mask & (1u << j)))
                continue;
            PuiseuxSeries term = a[row][j] * det[mask & ~(1u << j)];
            if ((int(row) + pos) % 2)
                acc -= term;
            else
                acc += term;
            ++pos;
        }
        det[mask] = acc;
    }
    unsigned full = (1u << cols) - 1;
    std::vector<PuiseuxSeries> w;
    for (std::size_t i = 0; i < cols; ++i) {
        PuiseuxSeries minor = det[full & ~(1u << i)];
        w.push_back(i % 2 ? -minor : minor);
    }
    return w;
}

std::pair<Rational, Rational> to_e12_delta(const Rational &x, const Rational &y)
{
    Rational alpha = x + y;
    Rational beta = 1728 * (x - Rational(441) * alpha / 691);
    return {alpha, beta};
}

ModularODE general_solve(int mu, int nu, long N)
{
    std::vector<CharacterSeries> chars = characters_of(mu, nu, N);
    int M = int(chars.size());
    if (M > 6)
        throw std::invalid_argument("general_solve supports M <= 6");

    struct Unknown {
        int m, a, b;
    };
    std::vector<Unknown> unknowns;
    std::map<std::pair<int, int>, PuiseuxSeries> mono;
    PuiseuxSeries e4 = eisenstein(4, N).series, e6 = eisenstein(6, N).series;
    for (int m = 0; m <= M - 2; ++m) {
        int w = 2 * (M - m);
        for (int b = 0; 6 * b <= w; ++b) {
            if ((w - 6 * b) % 4)
                continue;
            int a = (w - 6 * b) / 4;
            unknowns.push_back({m, a, b});
            if (!mono.count({a, b}))
                mono.emplace(std::make_pair(a, b), pow(e4, unsigned(a)) * pow(e6, unsigned(b)));
        }
    }

    RMatrix A;
    std::vector<Rational> rhs;
    for (const auto &ch : chars) {
        std::vector<PuiseuxSeries> tower = serre_tower(unsigned(M), ch.series);
        std::vector<PuiseuxSeries> cols;
        for (const auto &u : unknowns)
            cols.push_back(mono.at({u.a, u.b}) * tower[std::size_t(u.m)]);
        const PuiseuxSeries &top = tower[std::size_t(M)];
        for (long k = 0; k < N; ++k) {
            Rational e = ch.kappa + k;
            std::vector<Rational> row;
            for (const auto &c : cols)
                row.push_back(c.coeff(e));
            A.push_back(std::move(row));
            rhs.push_back(-top.coeff(e));
        }
    }
    LinearSolution sol = solve_exact(A, rhs);
    if (!sol.consistent)
        throw InconsistentSystem("no operator of this shape annihilates all characters");
    if (!sol.unique)
        throw InconsistentSystem("annihilation conditions leave the operator underdetermined");

    ModularODE D;
    D.M = M;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        D.basis[unknowns[i].m].push_back({unknowns[i].a, unknowns[i].b, sol.x[i]});
    for (const auto &[m, terms] : D.basis) {
        PuiseuxSeries s;
        for (const auto &t : terms)
            s += t.coeff * mono.at({t.a, t.b});
        D.terms.emplace(m, ModularForm(2 * (M - m), s));
        int w = 2 * (M - m);
        if (w <= 10) {
            D.alpha[m] = terms.front().coeff;
        } else if (w == 12) {
            Rational x = 0, y = 0;
            for (const auto &t : terms)
                (t.a == 3 ? x : y) = t.coeff;
            auto [al, be] = to_e12_delta(x, y);
            D.alpha[m] = al;
            D.cusp_part = be;
        }
    }
    return D;
}

PuiseuxSeries project_above(const PuiseuxSeries &R, const Rational &k)
{
    if (R.is_zero())
        return R;
    std::vector<Rational> c = R.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n)
        if (R.exponent(n) <= k)
            c[n] = 0;
    return PuiseuxSeries(R.offset(), R.grid(), std::move(c), R.trunc());
}

} // namespace mlde
