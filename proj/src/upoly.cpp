#include "mlde/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace mlde
{

UPoly::UPoly(const Rational &c)
{
    if (c != 0)
        c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

UPoly UPoly::x()
{
    return UPoly(std::vector<Rational>{0, 1});
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational UPoly::coeff(int k) const
{
    if (k < 0 || k >= int(c_.size()))
        return 0;
    return c_[std::size_t(k)];
}

Rational UPoly::eval(const Rational &v) const
{
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * v + c_[i];
    return acc;
}

UPoly &UPoly::operator+=(const UPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
    return *this += -o;
}

UPoly &UPoly::operator*=(const UPoly &o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto &v : r.c_)
        v = -v;
    return r;
}

std::string UPoly::to_string(const std::string &var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational &v = c_[i];
        if (v == 0)
            continue;
        Rational a = abs(v);
        os << (first ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "));
        if (i == 0 || a != 1)
            os << a.get_str() << (i ? "*" : "");
        if (i == 1)
            os << var;
        else if (i > 1)
            os << var << "^" << i;
        first = false;
    }
    return os.str();
}

UPoly operator+(UPoly a, const UPoly &b)
{
    a += b;
    return a;
}

UPoly operator-(UPoly a, const UPoly &b)
{
    a -= b;
    return a;
}

UPoly operator*(UPoly a, const UPoly &b)
{
    a *= b;
    return a;
}

void divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    std::vector<Rational> quo(std::max(0, a.degree() - db + 1), Rational(0));
    for (int k = a.degree(); k >= db; --k) {
        Rational f = rem[std::size_t(k)] / b.lead();
        if (f == 0)
            continue;
        quo[std::size_t(k - db)] = f;
        for (int i = 0; i <= db; ++i)
            rem[std::size_t(k - db + i)] -= f * b.coeffs()[std::size_t(i)];
    }
    q = UPoly(quo);
    r = UPoly(rem);
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (a.is_zero())
        return a;
    return a * UPoly(1 / a.lead());
}

std::vector<Rational> rational_roots(const UPoly &p)
{
    std::vector<Rational> roots;
    if (p.is_zero())
        throw std::domain_error("roots of the zero polynomial");
    UPoly cur = p;
    // factor out x^k
    while (cur.degree() > 0 && cur.coeff(0) == 0) {
        roots.push_back(0);
        cur = UPoly(std::vector<Rational>(cur.coeffs().begin() + 1, cur.coeffs().end()));
    }
    if (cur.degree() <= 0)
        return roots;
    // integer coefficients
    Integer L = 1;
    for (const auto &c : cur.coeffs())
        L = lcm(L, c.get_den());
    std::vector<Integer> ic;
    for (const auto &c : cur.coeffs())
        ic.push_back(Rational(c * L).get_num());
    auto divisors = [](Integer n) {
        n = abs(n);
        std::vector<Integer> d;
        for (Integer k = 1; k * k <= n; ++k)
            if (n % k == 0) {
                d.push_back(k);
                if (k * k != n)
                    d.push_back(n / k);
            }
        return d;
    };
    auto P = divisors(ic.front()), Q = divisors(ic.back());
    for (const auto &pp : P)
        for (const auto &qq : Q)
            for (int sgn : {1, -1}) {
                Rational cand(sgn * pp, qq);
                cand.canonicalize();
                while (cur.degree() > 0 && cur.eval(cand) == 0) {
                    roots.push_back(cand);
                    UPoly q, r;
                    divmod(cur, UPoly(std::vector<Rational>{-cand, 1}), q, r);
                    cur = q;
                }
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Frac1::Frac1(const UPoly &n, const UPoly &d)
{
    if (d.is_zero())
        throw std::domain_error("Frac1: zero denominator");
    UPoly g = gcd(n, d);
    if (n.is_zero()) {
        num_ = UPoly();
        den_ = UPoly(Rational(1));
        return;
    }
    UPoly q, r;
    divmod(n, g, num_, r);
    divmod(d, g, den_, r);
    Rational l = den_.lead();
    num_ *= UPoly(1 / l);
    den_ *= UPoly(1 / l);
}

Frac1 Frac1::operator+(const Frac1 &o) const
{
    return Frac1(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac1 Frac1::operator-(const Frac1 &o) const
{
    return Frac1(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Frac1 Frac1::operator*(const Frac1 &o) const
{
    return Frac1(num_ * o.num_, den_ * o.den_);
}

Frac1 Frac1::operator/(const Frac1 &o) const
{
    if (o.is_zero())
        throw std::domain_error("Frac1: division by zero");
    return Frac1(num_ * o.den_, den_ * o.num_);
}

std::string Frac1::to_string(const std::string &var) const
{
    if (den_ == UPoly(Rational(1)))
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace mlde
