#ifndef MLDE_QSERIES_HPP
#define MLDE_QSERIES_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mlde
{

using Rational = mpq_class;
using Integer = mpz_class;

// n/d in canonical form (mpq_class(n, d) does not reduce)
inline Rational frac(const Integer &n, const Integer &d)
{
    if (d == 0)
        throw std::domain_error("zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

struct ZeroSeries : std::domain_error {
    using std::domain_error::domain_error;
};

struct GridMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// "p/q" or "p"
std::string to_string(const Rational &r);
Rational parse_rational(const std::string &s);

Integer lcm(const Integer &a, const Integer &b);
long lcm(long a, long b);
Integer ceil_of(const Rational &r);

// Truncated series  sum_n coeffs[n] q^(offset + n/grid) + O(q^trunc).
// An absent trunc means the series is exact (a finite sum).
class PuiseuxSeries
{
public:
    PuiseuxSeries() = default; // exact zero
    PuiseuxSeries(Rational offset, long grid, std::vector<Rational> coeffs,
                  std::optional<Rational> trunc);

    static PuiseuxSeries zero(std::optional<Rational> trunc = std::nullopt);
    static PuiseuxSeries constant(const Rational &c, std::optional<Rational> trunc = std::nullopt);
    static PuiseuxSeries monomial(const Rational &c, const Rational &exponent,
                                  std::optional<Rational> trunc = std::nullopt);
    // integer coefficients on the grid, convenient for literals
    static PuiseuxSeries from_ints(const Rational &offset, long grid, const std::vector<long> &coeffs,
                                   std::optional<Rational> trunc = std::nullopt);

    const Rational &offset() const { return offset_; }
    long grid() const { return grid_; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }
    const std::optional<Rational> &trunc() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    bool is_zero() const { return coeffs_.empty(); }

    Rational exponent(std::size_t n) const { return offset_ + frac(long(n), grid_); }
    // coefficient of q^e; throws std::out_of_range if e >= trunc
    Rational coeff(const Rational &e) const;
    // relative precision trunc - offset (nonzero, truncated series only)
    Rational precision() const;

    // same series on a finer grid (D must be a multiple of grid())
    PuiseuxSeries regrid(long D) const;
    PuiseuxSeries truncated(const Rational &order) const;
    PuiseuxSeries shifted(const Rational &e) const; // times q^e
    PuiseuxSeries theta() const;                   // q d/dq

    PuiseuxSeries operator-() const;
    PuiseuxSeries &operator+=(const PuiseuxSeries &o);
    PuiseuxSeries &operator-=(const PuiseuxSeries &o);
    PuiseuxSeries &operator*=(const PuiseuxSeries &o);
    PuiseuxSeries &operator*=(const Rational &c);

    // structural equality (same offset, grid, coefficients, truncation)
    bool operator==(const PuiseuxSeries &o) const;
    // equal as series up to the smaller truncation
    bool agrees_with(const PuiseuxSeries &o) const;

    std::string to_string(int max_terms = 12) const;

private:
    void normalize();
    Rational offset_{0};
    long grid_ = 1;
    std::vector<Rational> coeffs_;
    std::optional<Rational> trunc_;
};

PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries &b);
PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries &b);
PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b);
PuiseuxSeries operator*(PuiseuxSeries a, const Rational &c);
PuiseuxSeries operator*(const Rational &c, PuiseuxSeries a);

// Both outputs live on the common lattice (1/D')Z, D' the lcm of the grids and
// offset denominators.
std::pair<PuiseuxSeries, PuiseuxSeries> align(const PuiseuxSeries &a, const PuiseuxSeries &b);

PuiseuxSeries mul(const PuiseuxSeries &a, const PuiseuxSeries &b);
// Throws ZeroSeries. Exact input with more than one term needs an explicit
// relative precision.
PuiseuxSeries inv(const PuiseuxSeries &a);
PuiseuxSeries inv(const PuiseuxSeries &a, const Rational &relative_precision);
PuiseuxSeries pow(const PuiseuxSeries &a, unsigned n);

// (q)_n = prod_{k=1..n} (1-q^k), terms through q^N kept. n = nullopt is the infinite product.
PuiseuxSeries pochhammer(std::optional<long> n, long N);

} // namespace mlde

#endif
