#include "mlde/multipoly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace mlde
{

namespace
{

struct SymbolTable {
    std::shared_mutex mu;
    std::unordered_map<std::string, Var> ids;
    std::vector<std::string> names;
};

SymbolTable &table()
{
    static SymbolTable t;
    return t;
}

using Monomial = MultiPoly::Monomial;

Monomial mono_mul(const Monomial &a, const Monomial &b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Var symbol(const std::string &name)
{
    auto &t = table();
    {
        std::shared_lock lk(t.mu);
        auto it = t.ids.find(name);
        if (it != t.ids.end())
            return it->second;
    }
    std::unique_lock lk(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end())
        return it->second;
    if (t.names.size() >= 0xffff)
        throw std::length_error("symbol table full");
    Var v = Var(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, v);
    return v;
}

std::string symbol_name(Var v)
{
    auto &t = table();
    std::shared_lock lk(t.mu);
    if (v >= t.names.size())
        throw std::out_of_range("unknown symbol id");
    return t.names[v];
}

MultiPoly::MultiPoly(const Rational &c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Var v)
{
    MultiPoly p;
    p.terms_.emplace(Monomial{{v, 1u}}, Rational(1));
    return p;
}

void MultiPoly::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Var> MultiPoly::variables() const
{
    std::set<Var> out;
    for (const auto &[m, c] : terms_)
        for (const auto &[v, e] : m)
            out.insert(v);
    return out;
}

unsigned MultiPoly::degree(Var v) const
{
    unsigned d = 0;
    for (const auto &[m, c] : terms_)
        for (const auto &[w, e] : m)
            if (w == v)
                d = std::max(d, e);
    return d;
}

MultiPoly MultiPoly::coeff(Var v, unsigned k) const
{
    MultiPoly out;
    for (const auto &[m, c] : terms_) {
        unsigned e = 0;
        Monomial rest;
        for (const auto &pe : m) {
            if (pe.first == v)
                e = pe.second;
            else
                rest.push_back(pe);
        }
        if (e == k)
            out.add_term(rest, c);
    }
    return out;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly p = *this;
    for (auto &[m, v] : p.terms_)
        v = -v;
    return p;
}

MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly out;
    Rational tmp;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) {
            mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            out.add_term(mono_mul(ma, mb), tmp);
        }
    return out;
}

MultiPoly pow(const MultiPoly &a, unsigned n)
{
    MultiPoly r(1), b = a;
    while (n) {
        if (n & 1)
            r *= b;
        n >>= 1;
        if (n)
            b *= b;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const
{
    MultiPoly out;
    for (const auto &[m, c] : terms_) {
        Monomial rest;
        unsigned e = 0;
        for (const auto &pe : m) {
            if (pe.first == v) {
                e = pe.second;
                if (e > 1)
                    rest.emplace_back(v, e - 1);
            } else {
                rest.push_back(pe);
            }
        }
        if (e)
            out.add_term(rest, c * e);
    }
    return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly &value) const
{
    return substitute(std::map<Var, MultiPoly>{{v, value}});
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly> &values) const
{
    // cache powers per variable
    std::map<std::pair<Var, unsigned>, MultiPoly> powers;
    auto power = [&](Var v, unsigned e) -> const MultiPoly & {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        return powers.emplace(key, pow(values.at(v), e)).first->second;
    };
    MultiPoly out;
    for (const auto &[m, c] : terms_) {
        MultiPoly t;
        Monomial kept;
        std::vector<std::pair<Var, unsigned>> subs;
        for (const auto &pe : m) {
            if (values.count(pe.first))
                subs.push_back(pe);
            else
                kept.push_back(pe);
        }
        t.add_term(kept, c);
        for (const auto &[v, e] : subs)
            t *= power(v, e);
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::partial_eval(const std::map<Var, Rational> &point) const
{
    MultiPoly out;
    Rational pw;
    for (const auto &[m, c] : terms_) {
        Rational v = c;
        Monomial kept;
        for (const auto &pe : m) {
            auto it = point.find(pe.first);
            if (it == point.end()) {
                kept.push_back(pe);
                continue;
            }
            mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(it->second.get_mpq_t()), pe.second);
            mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(it->second.get_mpq_t()), pe.second);
            v *= pw;
        }
        out.add_term(kept, v);
    }
    return out;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational> &point) const
{
    MultiPoly r = partial_eval(point);
    if (!r.is_constant())
        throw std::invalid_argument("evaluate: unbound variable " + symbol_name(*r.variables().begin()));
    return r.constant_term();
}

UPoly MultiPoly::to_upoly(Var v) const
{
    std::vector<Rational> c(degree(v) + 1);
    for (const auto &[m, k] : terms_) {
        if (m.size() > 1 || (m.size() == 1 && m[0].first != v))
            throw std::invalid_argument("to_upoly: polynomial involves other variables");
        c[m.empty() ? 0 : m[0].second] += k;
    }
    return UPoly(std::move(c));
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first reads better
    std::vector<std::pair<const Monomial *, const Rational *>> order;
    for (const auto &[m, c] : terms_)
        order.emplace_back(&m, &c);
    auto deg = [](const Monomial &m) {
        unsigned d = 0;
        for (const auto &pe : m)
            d += pe.second;
        return d;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const auto &a, const auto &b) { return deg(*a.first) > deg(*b.first); });
    for (const auto &[mp, cp] : order) {
        const Monomial &m = *mp;
        Rational c = *cp;
        if (c < 0) {
            os << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            os << " + ";
        }
        first = false;
        bool unit = c == 1 && !m.empty();
        if (!unit)
            os << mlde::to_string(c);
        bool lead = unit;
        for (const auto &[v, e] : m) {
            if (!lead)
                os << "*";
            lead = false;
            os << symbol_name(v);
            if (e > 1)
                os << "^" << e;
        }
    }
    return os.str();
}

Fraction::Fraction(const MultiPoly &n, const MultiPoly &d) : num_(n), den_(d)
{
    if (d.is_zero())
        throw ZeroDenominator("fraction with zero denominator");
    if (d.is_constant() && d.constant_term() != 1) {
        num_ *= 1 / d.constant_term();
        den_ = MultiPoly(1);
    }
}

Fraction Fraction::operator+(const Fraction &o) const
{
    if (den_ == o.den_)
        return Fraction(num_ + o.num_, den_);
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction &o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction &o) const { return Fraction(num_ * o.num_, den_ * o.den_); }

Fraction Fraction::operator/(const Fraction &o) const
{
    if (o.num_.is_zero())
        throw ZeroDenominator("division by a zero fraction");
    return Fraction(num_ * o.den_, den_ * o.num_);
}

MultiPoly Fraction::residual(const Fraction &o) const
{
    if (den_ == o.den_)
        return num_ - o.num_;
    return num_ * o.den_ - o.num_ * den_;
}

Fraction Fraction::substitute(const std::map<Var, MultiPoly> &values) const
{
    return Fraction(num_.substitute(values), den_.substitute(values));
}

Rational Fraction::evaluate(const std::map<Var, Rational> &point) const
{
    Rational d = den_.evaluate(point);
    if (d == 0)
        throw PoleHit("denominator vanishes at the sample point");
    return num_.evaluate(point) / d;
}

std::set<Var> Fraction::variables() const
{
    std::set<Var> v = num_.variables();
    for (Var w : den_.variables())
        v.insert(w);
    return v;
}

namespace
{

struct Frame {
    Var X1 = symbol("X1"), X2 = symbol("X2"), X3 = symbol("X3");
    Var xi1 = symbol("xi1"), xi2 = symbol("xi2"), xi3 = symbol("xi3");
};

const Frame &frame()
{
    static const Frame f;
    return f;
}

} // namespace

MultiPoly eliminate(const MultiPoly &p)
{
    const Frame &f = frame();
    MultiPoly X1 = MultiPoly::var(f.X1), X2 = MultiPoly::var(f.X2);
    MultiPoly x1 = MultiPoly::var(f.xi1), x2 = MultiPoly::var(f.xi2);
    return p.substitute({{f.X3, -X1 - X2}, {f.xi3, -x1 - x2}});
}

Fraction eliminate(const Fraction &f) { return Fraction(eliminate(f.num()), eliminate(f.den())); }

DiffForm DiffForm::from_poly(const MultiPoly &linear)
{
    const Frame &f = frame();
    MultiPoly p = eliminate(linear);
    if (p.degree(f.xi1) > 1 || p.degree(f.xi2) > 1)
        throw std::invalid_argument("not linear in the differentials");
    DiffForm out{p.coeff(f.xi1, 1).coeff(f.xi2, 0), p.coeff(f.xi2, 1).coeff(f.xi1, 0)};
    MultiPoly rest = p.coeff(f.xi1, 0).coeff(f.xi2, 0);
    MultiPoly cross = p.coeff(f.xi1, 1).coeff(f.xi2, 1);
    if (!rest.is_zero() || !cross.is_zero())
        throw std::invalid_argument("not a homogeneous 1-form");
    return out;
}

DiffForm DiffForm::d(const MultiPoly &g)
{
    const Frame &f = frame();
    MultiPoly h = eliminate(g);
    return {h.derivative(f.X1), h.derivative(f.X2)};
}

MultiPoly DiffForm::to_poly() const
{
    const Frame &f = frame();
    return c1 * MultiPoly::var(f.xi1) + c2 * MultiPoly::var(f.xi2);
}

MultiPoly det3(const Matrix3 &m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

MultiPoly det(const std::vector<std::vector<MultiPoly>> &m)
{
    std::size_t n = m.size();
    for (const auto &row : m)
        if (row.size() != n)
            throw std::invalid_argument("det: matrix is not square");
    if (n == 0)
        return MultiPoly(1);
    if (n > 16)
        throw std::invalid_argument("det: matrix too large");
    // Laplace along rows, memoised on the set of used columns
    std::vector<MultiPoly> minor(std::size_t(1) << n);
    minor[0] = MultiPoly(1);
    for (unsigned mask = 1; mask < minor.size(); ++mask) {
        unsigned k = unsigned(__builtin_popcount(mask));
        std::size_t row = n - k;
        MultiPoly acc;
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j)))
                continue;
            if (!m[row][j].is_zero()) {
                MultiPoly t = m[row][j] * minor[mask & ~(1u << j)];
                if (pos % 2)
                    acc -= t;
                else
                    acc += t;
            }
            ++pos;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

PuiseuxSeries taylor_rational(const MultiPoly &numer, const MultiPoly &denom, Var x, const Rational &point, long order)
{
    if (denom.is_zero())
        throw ZeroDenominator("taylor_rational: zero denominator");
    auto shifted = [&](const MultiPoly &p) {
        UPoly u = p.to_upoly(x);
        // Horner in (point + h)
        UPoly shift(std::vector<Rational>{point, 1});
        UPoly r;
        for (int k = u.degree(); k >= 0; --k)
            r = r * shift + UPoly(u.coeff(k));
        return PuiseuxSeries(0, 1, r.coeffs(), std::nullopt);
    };
    PuiseuxSeries N = shifted(numer), D = shifted(denom);
    if (N.is_zero())
        return PuiseuxSeries::zero(Rational(order));
    Rational vn = N.offset(), vd = D.offset();
    Rational rel = Rational(order) - vn + vd;
    if (rel <= 0)
        return PuiseuxSeries::zero(Rational(order));
    return (N * inv(D, rel)).truncated(Rational(order));
}

} // namespace mlde
