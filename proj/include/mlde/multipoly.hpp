#ifndef MLDE_MULTIPOLY_HPP
#define MLDE_MULTIPOLY_HPP

#include "mlde/qseries.hpp"
#include "mlde/upoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace mlde
{

using Var = std::uint16_t;

// interned symbol ids; ordering of ids is the variable order
Var symbol(const std::string &name);
std::string symbol_name(Var v);

struct ZeroDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleHit : std::domain_error {
    using std::domain_error::domain_error;
};

// sparse polynomial over Q
class MultiPoly
{
public:
    using Monomial = std::vector<std::pair<Var, unsigned>>; // sorted by Var, exponents > 0

    MultiPoly() = default;
    MultiPoly(const Rational &c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    static MultiPoly var(Var v);
    static MultiPoly var(const std::string &name) { return var(symbol(name)); }

    const std::map<Monomial, Rational> &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::set<Var> variables() const;
    unsigned degree(Var v) const;
    // coefficient of v^k as a polynomial in the remaining variables
    MultiPoly coeff(Var v, unsigned k) const;

    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);
    MultiPoly operator-() const;
    bool operator==(const MultiPoly &o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly &o) const { return terms_ != o.terms_; }

    MultiPoly derivative(Var v) const;
    MultiPoly substitute(Var v, const MultiPoly &value) const;
    MultiPoly substitute(const std::map<Var, MultiPoly> &values) const;
    MultiPoly partial_eval(const std::map<Var, Rational> &point) const;
    Rational evaluate(const std::map<Var, Rational> &point) const; // every variable must be bound
    // univariate view; throws if other variables occur
    UPoly to_upoly(Var v) const;

    std::string to_string() const;

private:
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    void add_term(const Monomial &m, const Rational &c);
    std::map<Monomial, Rational> terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly &b);
MultiPoly operator-(MultiPoly a, const MultiPoly &b);
MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
MultiPoly operator*(MultiPoly a, const Rational &c);
MultiPoly operator*(const Rational &c, MultiPoly a);
MultiPoly pow(const MultiPoly &a, unsigned n);

// quotient of polynomials, no cancellation; equality by cross multiplication
class Fraction
{
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(const MultiPoly &n) : num_(n), den_(1) {}
    Fraction(const Rational &c) : num_(c), den_(1) {}
    Fraction(long c) : num_(c), den_(1) {}
    Fraction(const MultiPoly &n, const MultiPoly &d);

    const MultiPoly &num() const { return num_; }
    const MultiPoly &den() const { return den_; }

    Fraction operator+(const Fraction &o) const;
    Fraction operator-(const Fraction &o) const;
    Fraction operator*(const Fraction &o) const;
    Fraction operator/(const Fraction &o) const;
    Fraction operator-() const { return Fraction(-num_, den_); }

    // numerator of this - o over the product of denominators
    MultiPoly residual(const Fraction &o) const;
    bool equals(const Fraction &o) const { return residual(o).is_zero(); }
    Fraction substitute(const std::map<Var, MultiPoly> &values) const;
    // throws PoleHit when the denominator vanishes
    Rational evaluate(const std::map<Var, Rational> &point) const;
    std::set<Var> variables() const;

private:
    MultiPoly num_, den_;
};

// 1-form c1 xi1 + c2 xi2 on the constrained configuration X1+X2+X3 = 0
struct DiffForm {
    MultiPoly c1, c2;
    static DiffForm from_poly(const MultiPoly &linear); // linear in xi1, xi2
    static DiffForm d(const MultiPoly &f);               // f in X1, X2 only
    MultiPoly to_poly() const;
    DiffForm operator+(const DiffForm &o) const { return {c1 + o.c1, c2 + o.c2}; }
    DiffForm operator-(const DiffForm &o) const { return {c1 - o.c1, c2 - o.c2}; }
    DiffForm operator*(const MultiPoly &f) const { return {c1 * f, c2 * f}; }
    bool operator==(const DiffForm &o) const { return c1 == o.c1 && c2 == o.c2; }
};

// X3 -> -X1-X2, xi3 -> -xi1-xi2
MultiPoly eliminate(const MultiPoly &p);
Fraction eliminate(const Fraction &f);

using Matrix3 = std::array<std::array<MultiPoly, 3>, 3>;
MultiPoly det3(const Matrix3 &m);
MultiPoly det(const std::vector<std::vector<MultiPoly>> &m);

// Laurent expansion of numer/denom (univariate in x) about x = point, in powers of (x - point),
// exponents below 'order' kept
PuiseuxSeries taylor_rational(const MultiPoly &numer, const MultiPoly &denom, Var x, const Rational &point,
                              long order);

} // namespace mlde

#endif
