#include "mlde/characters.hpp"

#include "mlde/modular_forms.hpp"

#include <functional>
#include <numeric>

namespace mlde
{

Rational kappa(int nu, int s)
{
    if (nu < 3 || nu % 2 == 0)
        throw IndexOutOfRange("nu must be odd and >= 3");
    int M = (nu - 1) / 2;
    if (s < 1 || s > M)
        throw IndexOutOfRange("s = " + std::to_string(s) + " outside 1.." + std::to_string(M));
    return frac((nu - 2 * s) * (nu - 2 * s), 8 * nu) - Rational(1, 24);
}

Rational kappa_general(int mu, int nu, int r, int s)
{
    if (mu < 2 || nu < 2 || std::gcd(mu, nu) != 1)
        throw IndexOutOfRange("(mu, nu) must be coprime and >= 2");
    if (r < 1 || r > mu - 1 || s < 1 || s > nu - 1)
        throw IndexOutOfRange("Kac label outside 1<=r<mu, 1<=s<nu");
    long d = long(nu) * r - long(mu) * s;
    return frac(d * d, 4L * mu * nu) - Rational(1, 24);
}

namespace
{

using Coeffs = std::vector<Integer>;

// in place: a /= (1 - q^k)
void divide_one_minus(Coeffs &a, long k)
{
    for (std::size_t m = std::size_t(k); m < a.size(); ++m)
        a[m] += a[m - std::size_t(k)];
}

// in place: a *= (1 - q^k)
void multiply_one_minus(Coeffs &a, long k)
{
    for (std::size_t m = a.size(); m-- > std::size_t(k);)
        a[m] -= a[m - std::size_t(k)];
}

PuiseuxSeries to_series(const Rational &offset, const Coeffs &a)
{
    std::vector<Rational> c(a.begin(), a.end());
    return PuiseuxSeries(offset, 1, std::move(c), offset + long(a.size()));
}

// sum over N_1 >= ... >= N_r >= 0 of q^(sum N_i^2 + sum_{i>=s} N_i) / prod (q)_{N_i - N_{i+1}},
// L coefficients
Coeffs andrews_gordon(int r, int s, long L)
{
    Coeffs out(std::size_t(L), 0);
    Coeffs start(std::size_t(L), 0);
    start[0] = 1;
    // i runs r..1; 'above' is N_{i+1}
    std::function<void(int, long, long, const Coeffs &)> rec = [&](int i, long above, long partial, const Coeffs &P) {
        if (i == 0) {
            for (long m = 0; m + partial < L; ++m)
                out[std::size_t(m + partial)] += P[std::size_t(m)];
            return;
        }
        Coeffs cur = P;
        for (long Ni = above;; ++Ni) {
            long e = partial + Ni * Ni + (i >= s ? Ni : 0);
            if (e + long(i - 1) * Ni * Ni >= L)
                break;
            if (Ni > above)
                divide_one_minus(cur, Ni - above);
            rec(i - 1, Ni, e, cur);
        }
    };
    if (r == 0) {
        out[0] = 1;
        return out;
    }
    rec(r, 0, 0, start);
    return out;
}

// sum_{n in S} q^(e(n)) / (q)_n with e increasing
Coeffs single_sum(long L, const std::function<bool(long)> &take, const std::function<long(long)> &e)
{
    Coeffs out(std::size_t(L), 0);
    Coeffs P(std::size_t(L), 0);
    P[0] = 1;
    for (long n = 0; e(n) < L; ++n) {
        if (n > 0)
            divide_one_minus(P, n);
        if (!take(n))
            continue;
        long sh = e(n);
        for (long m = 0; m + sh < L; ++m)
            out[std::size_t(m + sh)] += P[std::size_t(m)];
    }
    return out;
}

} // namespace

CharacterSeries character(int nu, int s, long N)
{
    Rational k = kappa(nu, s);
    if (N < 1)
        throw std::invalid_argument("character needs N >= 1");
    int r = (nu - 3) / 2;
    CharacterSeries out;
    out.model = {2, nu};
    out.s = s;
    out.r = 1;
    out.kac_s = s;
    out.kappa = k;
    out.series = to_series(k, andrews_gordon(r, s, N));
    return out;
}

std::vector<CharacterSeries> characters_of(int mu, int nu, long N)
{
    std::vector<CharacterSeries> out;
    if (mu == 2 || nu == 2) {
        int n = mu == 2 ? nu : mu;
        for (int s = 1; s <= (n - 1) / 2; ++s)
            out.push_back(character(n, s, N));
        return out;
    }
    if ((mu == 3 && nu == 4) || (mu == 4 && nu == 3)) {
        MinimalModelId id{3, 4};
        auto make = [&](int pos, int kr, int ks, Coeffs c) {
            CharacterSeries ch;
            ch.model = id;
            ch.s = pos;
            ch.r = kr;
            ch.kac_s = ks;
            ch.kappa = kappa_general(3, 4, kr, ks);
            ch.series = to_series(ch.kappa, c);
            return ch;
        };
        auto half_sq = [](long n) { return n * n / 2; };
        // vacuum: even n, q^(n^2/2)
        out.push_back(make(1, 1, 1, single_sum(N, [](long n) { return n % 2 == 0; }, half_sq)));
        // spin field: q^(n(n+1)/2), all n
        out.push_back(make(2, 1, 2, single_sum(N, [](long) { return true; }, [](long n) { return n * (n + 1) / 2; })));
        // energy: odd n, q^((n^2-1)/2) past q^(23/48)
        out.push_back(make(3, 1, 3, single_sum(N, [](long n) { return n % 2 == 1; }, [](long n) { return n == 0 ? 0 : (n * n - 1) / 2; })));
        return out;
    }
    throw std::invalid_argument("no character formula available for (" + std::to_string(mu) + "," +
                                std::to_string(nu) + ")");
}

PuiseuxSeries rr_product(int s, long N)
{
    if (s != 1 && s != 2)
        throw IndexOutOfRange("rr_product: s must be 1 or 2");
    if (N < 0)
        throw std::invalid_argument("negative truncation order");
    Coeffs a(std::size_t(N) + 1, 0);
    a[0] = 1;
    for (long n = 1; n <= N; ++n) {
        long m = n % 5;
        bool take = s == 1 ? (m == 2 || m == 3) : (m == 1 || m == 4);
        if (take)
            divide_one_minus(a, n);
    }
    return to_series(0, a);
}

int legendre5(long n)
{
    long m = ((n % 5) + 5) % 5;
    if (m == 0)
        return 0;
    return (m == 1 || m == 4) ? 1 : -1;
}

PuiseuxSeries ramanujan_cf(long N)
{
    if (N < 1)
        throw std::invalid_argument("ramanujan_cf needs N >= 1");
    Coeffs a(std::size_t(N) + 1, 0);
    a[0] = 1;
    for (long n = 1; n <= N; ++n) {
        int l = legendre5(n);
        if (l == 1)
            multiply_one_minus(a, n);
        else if (l == -1)
            divide_one_minus(a, n);
    }
    return to_series(Rational(1, 5), a);
}

PuiseuxSeries icosahedral_polynomial(const PuiseuxSeries &X, const PuiseuxSeries &j)
{
    auto C = [](long v) { return PuiseuxSeries::constant(v); };
    PuiseuxSeries X2 = X * X, X3 = X2 * X, X4 = X3 * X;
    PuiseuxSeries P = X4 - Rational(228) * X3 + Rational(494) * X2 + Rational(228) * X + C(1);
    PuiseuxSeries Q = X2 + Rational(11) * X - C(1);
    return pow(P, 3) + j * X * pow(Q, 5);
}

PuiseuxSeries icosahedral_residual(long N)
{
    PuiseuxSeries X = pow(ramanujan_cf(N + 1), 5);
    return icosahedral_polynomial(X, j_invariant(N)).truncated(N + 1);
}

} // namespace mlde
