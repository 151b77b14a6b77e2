#include "mlde/modular_forms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace mlde
{

ModularForm::ModularForm(int w, PuiseuxSeries s) : weight(w), series(std::move(s))
{
    if (w < 0 || w % 2 != 0)
        throw InvalidWeight("modular form weight must be even and nonnegative, got " + std::to_string(w));
}

Rational bernoulli(unsigned n)
{
    std::vector<Rational> B(n + 1);
    B[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        // sum_{j<=m} C(m+1, j) B_j = 0
        Rational acc = 0;
        Integer binom = 1; // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += binom * B[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B[m] = -acc / (m + 1);
    }
    return B[n];
}

Integer divisor_sigma(unsigned k, unsigned long n)
{
    Integer s = 0, p;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d)
            continue;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        s += p;
        unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), e, k);
            s += p;
        }
    }
    return s;
}

namespace
{

// process-wide cache, keyed by weight; holds the longest expansion built so far
struct EisensteinCache {
    std::shared_mutex mu;
    std::map<int, PuiseuxSeries> series;
};

EisensteinCache &cache()
{
    static EisensteinCache c;
    return c;
}

PuiseuxSeries build_eisenstein(int k, long N)
{
    Rational factor = -Rational(2 * k) / bernoulli(unsigned(k));
    std::vector<Integer> sigma(std::size_t(N) + 1, 0);
    Integer p;
    for (unsigned long d = 1; d <= (unsigned long)N; ++d) {
        mpz_ui_pow_ui(p.get_mpz_t(), d, unsigned(k - 1));
        for (unsigned long m = d; m <= (unsigned long)N; m += d)
            sigma[m] += p;
    }
    std::vector<Rational> c(std::size_t(N) + 1);
    c[0] = 1;
    for (long n = 1; n <= N; ++n)
        c[std::size_t(n)] = factor * sigma[std::size_t(n)];
    return PuiseuxSeries(0, 1, std::move(c), Rational(N + 1));
}

} // namespace

ModularForm eisenstein(int k, long N)
{
    if (k < 2 || k % 2 != 0)
        throw InvalidWeight("Eisenstein weight must be even and >= 2, got " + std::to_string(k));
    if (N < 0)
        throw std::invalid_argument("negative truncation order");
    auto &c = cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.series.find(k);
        if (it != c.series.end() && *it->second.trunc() >= N + 1)
            return ModularForm(k, it->second.truncated(N + 1));
    }
    PuiseuxSeries s = build_eisenstein(k, N);
    {
        std::unique_lock lock(c.mu);
        auto it = c.series.find(k);
        if (it == c.series.end() || *it->second.trunc() < *s.trunc())
            c.series.insert_or_assign(k, s);
    }
    return ModularForm(k, s);
}

HalfWeightSeries dedekind_eta(long N)
{
    return {1, pochhammer(std::nullopt, N).shifted(Rational(1, 24))};
}

ModularForm discriminant(long N)
{
    if (N < 1)
        throw std::invalid_argument("discriminant needs N >= 1");
    PuiseuxSeries p = pochhammer(std::nullopt, std::max(1L, N - 1));
    return ModularForm(12, pow(p, 24).shifted(1).truncated(N + 1));
}

PuiseuxSeries j_invariant(long N)
{
    if (N < 1)
        throw std::invalid_argument("j_invariant needs N >= 1");
    PuiseuxSeries e4 = eisenstein(4, N + 2).series;
    PuiseuxSeries e6 = eisenstein(6, N + 2).series;
    PuiseuxSeries e43 = pow(e4, 3);
    PuiseuxSeries den = e43 - e6 * e6;
    return (Rational(1728) * e43 * inv(den)).truncated(N + 1);
}

ModularForm serre_derivative(const ModularForm &f)
{
    const PuiseuxSeries &s = f.series;
    PuiseuxSeries d = s.theta();
    if (f.weight != 0 && !s.is_zero()) {
        if (s.is_exact())
            throw InsufficientTruncation("Serre derivative of an exact nonconstant-weight series needs a truncation");
        Integer R = ceil_of(s.precision());
        PuiseuxSeries e2 = eisenstein(2, R.get_si()).series;
        d -= frac(f.weight, 12) * (e2 * s);
    }
    return ModularForm(f.weight + 2, std::move(d));
}

std::vector<PuiseuxSeries> serre_tower(unsigned m, const PuiseuxSeries &f)
{
    std::vector<PuiseuxSeries> out;
    out.reserve(m + 1);
    ModularForm cur(0, f);
    out.push_back(cur.series);
    for (unsigned i = 0; i < m; ++i) {
        cur = serre_derivative(cur);
        out.push_back(cur.series);
    }
    return out;
}

ModularForm iterated_serre(unsigned m, const PuiseuxSeries &f)
{
    return ModularForm(int(2 * m), serre_tower(m, f).back());
}

std::complex<double> eval_at_tau(const PuiseuxSeries &s, std::complex<double> tau, double precision)
{
    if (!(tau.imag() > 0))
        throw std::domain_error("tau must lie in the upper half plane");
    const std::complex<double> two_pi_i(0.0, 2.0 * M_PI);
    std::complex<double> sum = 0;
    const auto &c = s.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] == 0)
            continue;
        sum += c[n].get_d() * std::exp(two_pi_i * tau * s.exponent(n).get_d());
    }
    if (s.is_exact() || s.is_zero())
        return sum;

    // geometric majorant built from the last few nonzero coefficients
    std::vector<std::size_t> idx;
    for (std::size_t n = c.size(); n-- > 0 && idx.size() < 5;)
        if (c[n] != 0)
            idx.push_back(n);
    double absq = std::exp(-2.0 * M_PI * tau.imag());
    double step = std::pow(absq, 1.0 / double(s.grid()));
    std::size_t last = std::size_t(ceil_of((*s.trunc() - s.offset()) * s.grid()).get_si()) - 1;
    double growth = 1.0;
    if (idx.size() >= 2) {
        double hi = std::fabs(c[idx.front()].get_d()), lo = std::fabs(c[idx.back()].get_d());
        double gap = double(idx.front() - idx.back());
        if (lo > 0)
            growth = std::max(1.0, std::pow(hi / lo, 1.0 / gap));
    }
    double bound = 0;
    for (std::size_t n : idx)
        bound = std::max(bound, std::fabs(c[n].get_d()) * std::pow(growth, double(last - n)));
    double x = growth * step;
    if (x >= 1.0)
        throw InsufficientTruncation("tail majorant does not converge");
    double tail = bound * std::pow(absq, s.exponent(last).get_d()) * x / (1.0 - x);
    if (!(tail <= precision))
        throw InsufficientTruncation("tail bound " + std::to_string(tail) + " exceeds requested precision");
    return sum;
}

} // namespace mlde
