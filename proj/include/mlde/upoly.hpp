#ifndef MLDE_UPOLY_HPP
#define MLDE_UPOLY_HPP

#include "mlde/qseries.hpp"

#include <string>
#include <vector>

namespace mlde
{

// dense univariate polynomial over Q, coefficients low degree first
class UPoly
{
public:
    UPoly() = default;
    UPoly(const Rational &c);
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly x(); // the variable

    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational> &coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational eval(const Rational &v) const;

    UPoly &operator+=(const UPoly &o);
    UPoly &operator-=(const UPoly &o);
    UPoly &operator*=(const UPoly &o);
    UPoly operator-() const;
    bool operator==(const UPoly &o) const { return c_ == o.c_; }
    bool operator!=(const UPoly &o) const { return c_ != o.c_; }

    std::string to_string(const std::string &var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UPoly operator+(UPoly a, const UPoly &b);
UPoly operator-(UPoly a, const UPoly &b);
UPoly operator*(UPoly a, const UPoly &b);
void divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r);
UPoly gcd(UPoly a, UPoly b); // monic
// rational roots with multiplicity
std::vector<Rational> rational_roots(const UPoly &p);

// element of Q(t), kept reduced with monic denominator
class Frac1
{
public:
    Frac1() : den_(Rational(1)) {}
    Frac1(const UPoly &n) : num_(n), den_(Rational(1)) {}
    Frac1(const UPoly &n, const UPoly &d);
    const UPoly &num() const { return num_; }
    const UPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    Frac1 operator+(const Frac1 &o) const;
    Frac1 operator-(const Frac1 &o) const;
    Frac1 operator*(const Frac1 &o) const;
    Frac1 operator/(const Frac1 &o) const;
    bool operator==(const Frac1 &o) const { return num_ == o.num_ && den_ == o.den_; }
    std::string to_string(const std::string &var = "t") const;

private:
    UPoly num_, den_;
};

} // namespace mlde

#endif
