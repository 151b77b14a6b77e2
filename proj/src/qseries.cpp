#include "mlde/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mlde
{

std::string to_string(const Rational &r)
{
    return r.get_str();
}

Rational parse_rational(const std::string &s)
{
    std::string t;
    for (char ch : s)
        if (ch != ' ')
            t += ch;
    if (t.empty())
        throw std::invalid_argument("empty rational");
    std::size_t slash = t.find('/');
    auto valid_int = [](const std::string &u) {
        std::size_t i = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (i == u.size())
            return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(t))
            throw std::invalid_argument("bad rational: " + s);
        if (t[0] == '+')
            t.erase(0, 1);
        return Rational(Integer(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("bad rational: " + s);
    if (num[0] == '+')
        num.erase(0, 1);
    Integer d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator: " + s);
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

Integer lcm(const Integer &a, const Integer &b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long lcm(long a, long b)
{
    return std::lcm(a, b);
}

Integer ceil_of(const Rational &r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

namespace
{

long to_long(const Integer &z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("series index out of range");
    return z.get_si();
}

// number of grid slots with exponent < trunc
std::size_t slot_count(const Rational &offset, long grid, const Rational &trunc)
{
    Rational span = (trunc - offset) * grid;
    if (span <= 0)
        return 0;
    return static_cast<std::size_t>(to_long(ceil_of(span)));
}

std::optional<Rational> min_trunc(const std::optional<Rational> &a, const std::optional<Rational> &b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

} // namespace

PuiseuxSeries::PuiseuxSeries(Rational offset, long grid, std::vector<Rational> coeffs,
                             std::optional<Rational> trunc)
    : offset_(std::move(offset)), grid_(grid), coeffs_(std::move(coeffs)), trunc_(std::move(trunc))
{
    if (grid_ <= 0)
        throw std::invalid_argument("grid must be positive");
    offset_.canonicalize();
    normalize();
}

PuiseuxSeries PuiseuxSeries::zero(std::optional<Rational> trunc)
{
    PuiseuxSeries s;
    s.trunc_ = std::move(trunc);
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(const Rational &c, std::optional<Rational> trunc)
{
    return PuiseuxSeries(0, 1, {c}, std::move(trunc));
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational &c, const Rational &exponent, std::optional<Rational> trunc)
{
    return PuiseuxSeries(exponent, 1, {c}, std::move(trunc));
}

PuiseuxSeries PuiseuxSeries::from_ints(const Rational &offset, long grid, const std::vector<long> &coeffs,
                                       std::optional<Rational> trunc)
{
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return PuiseuxSeries(offset, grid, std::move(c), std::move(trunc));
}

void PuiseuxSeries::normalize()
{
    if (trunc_) {
        std::size_t cap = slot_count(offset_, grid_, *trunc_);
        if (coeffs_.size() > cap)
            coeffs_.resize(cap);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0)
        ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        offset_ = 0;
        grid_ = 1;
        return;
    }
    if (lead > 0) {
        offset_ += frac(long(lead), grid_);
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
    }
    long g = grid_;
    for (std::size_t n = 1; n < coeffs_.size() && g > 1; ++n)
        if (coeffs_[n] != 0)
            g = std::gcd(g, long(n));
    if (g > 1) {
        std::vector<Rational> c;
        c.reserve(coeffs_.size() / std::size_t(g) + 1);
        for (std::size_t n = 0; n < coeffs_.size(); n += std::size_t(g))
            c.push_back(coeffs_[n]);
        coeffs_ = std::move(c);
        grid_ /= g;
    }
}

Rational PuiseuxSeries::coeff(const Rational &e) const
{
    if (trunc_ && e >= *trunc_)
        throw std::out_of_range("exponent " + e.get_str() + " beyond truncation " + trunc_->get_str());
    if (coeffs_.empty())
        return 0;
    Rational d = (e - offset_) * grid_;
    if (d < 0 || d.get_den() != 1)
        return 0;
    Integer idx = d.get_num();
    if (idx >= Integer(static_cast<unsigned long>(coeffs_.size())))
        return 0;
    return coeffs_[idx.get_ui()];
}

Rational PuiseuxSeries::precision() const
{
    if (!trunc_)
        throw std::logic_error("exact series has no finite precision");
    return *trunc_ - offset_;
}

PuiseuxSeries PuiseuxSeries::regrid(long D) const
{
    if (D % grid_ != 0)
        throw GridMismatch("regrid target is not a multiple of the grid");
    long f = D / grid_;
    PuiseuxSeries r = *this;
    if (coeffs_.empty() || f == 1) {
        r.grid_ = coeffs_.empty() ? r.grid_ : D;
        return r;
    }
    r.grid_ = D;
    r.coeffs_.assign((coeffs_.size() - 1) * std::size_t(f) + 1, Rational(0));
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        r.coeffs_[n * std::size_t(f)] = coeffs_[n];
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational &order) const
{
    PuiseuxSeries r = *this;
    r.trunc_ = min_trunc(trunc_, order);
    r.normalize();
    return r;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational &e) const
{
    PuiseuxSeries r = *this;
    if (!r.coeffs_.empty())
        r.offset_ += e;
    if (r.trunc_)
        *r.trunc_ += e;
    return r;
}

PuiseuxSeries PuiseuxSeries::theta() const
{
    PuiseuxSeries r = *this;
    for (std::size_t n = 0; n < r.coeffs_.size(); ++n)
        r.coeffs_[n] *= exponent(n);
    r.normalize();
    return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const
{
    PuiseuxSeries r = *this;
    for (auto &c : r.coeffs_)
        c = -c;
    return r;
}

PuiseuxSeries &PuiseuxSeries::operator+=(const PuiseuxSeries &o)
{
    std::optional<Rational> T = min_trunc(trunc_, o.trunc_);
    if (o.coeffs_.empty()) {
        trunc_ = T;
        normalize();
        return *this;
    }
    if (coeffs_.empty()) {
        *this = o;
        trunc_ = T;
        normalize();
        return *this;
    }
    Rational base = std::min(offset_, o.offset_);
    Rational da = offset_ - base, db = o.offset_ - base;
    Integer Dz = lcm(lcm(Integer(grid_), Integer(o.grid_)), lcm(da.get_den(), db.get_den()));
    long D = to_long(Dz);
    long sa = D / grid_, sb = D / o.grid_;
    long ia = to_long(Rational(da * D).get_num());
    long ib = to_long(Rational(db * D).get_num());
    std::size_t len = std::max(std::size_t(ia) + (coeffs_.size() - 1) * std::size_t(sa),
                               std::size_t(ib) + (o.coeffs_.size() - 1) * std::size_t(sb)) + 1;
    if (T)
        len = std::min(len, slot_count(base, D, *T));
    std::vector<Rational> c(len);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        std::size_t k = std::size_t(ia) + n * std::size_t(sa);
        if (k >= len)
            break;
        c[k] = coeffs_[n];
    }
    for (std::size_t n = 0; n < o.coeffs_.size(); ++n) {
        std::size_t k = std::size_t(ib) + n * std::size_t(sb);
        if (k >= len)
            break;
        c[k] += o.coeffs_[n];
    }
    offset_ = base;
    grid_ = D;
    coeffs_ = std::move(c);
    trunc_ = T;
    normalize();
    return *this;
}

PuiseuxSeries &PuiseuxSeries::operator-=(const PuiseuxSeries &o)
{
    return *this += -o;
}

PuiseuxSeries &PuiseuxSeries::operator*=(const PuiseuxSeries &o)
{
    *this = mul(*this, o);
    return *this;
}

PuiseuxSeries &PuiseuxSeries::operator*=(const Rational &c)
{
    for (auto &x : coeffs_)
        x *= c;
    normalize();
    return *this;
}

bool PuiseuxSeries::operator==(const PuiseuxSeries &o) const
{
    return offset_ == o.offset_ && grid_ == o.grid_ && coeffs_ == o.coeffs_ && trunc_ == o.trunc_;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries &o) const
{
    return (*this - o).is_zero();
}

namespace
{

std::string exponent_str(const Rational &e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return "q";
    if (e.get_den() == 1)
        return "q^" + e.get_str();
    return "q^(" + e.get_str() + ")";
}

} // namespace

std::string PuiseuxSeries::to_string(int max_terms) const
{
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size() && shown < max_terms; ++n) {
        const Rational &c = coeffs_[n];
        if (c == 0)
            continue;
        Rational e = exponent(n);
        std::string mono = exponent_str(e);
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1 || mono.empty())
            os << a.get_str() << (mono.empty() ? "" : "*");
        os << mono;
        first = false;
        ++shown;
    }
    std::size_t nonzero = std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c != 0; });
    if (std::size_t(shown) < nonzero)
        os << (first ? "" : " + ") << "...";
    if (first && std::size_t(shown) == nonzero)
        os << "0";
    if (trunc_)
        os << " + O(" << (exponent_str(*trunc_).empty() ? "1" : exponent_str(*trunc_)) << ")";
    return os.str();
}

PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries &b)
{
    a += b;
    return a;
}

PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries &b)
{
    a -= b;
    return a;
}

PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    return mul(a, b);
}

PuiseuxSeries operator*(PuiseuxSeries a, const Rational &c)
{
    a *= c;
    return a;
}

PuiseuxSeries operator*(const Rational &c, PuiseuxSeries a)
{
    a *= c;
    return a;
}

std::pair<PuiseuxSeries, PuiseuxSeries> align(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    Integer D = lcm(lcm(Integer(a.grid()), Integer(b.grid())),
                    lcm(a.offset().get_den(), b.offset().get_den()));
    long d = to_long(D);
    return {a.regrid(d), b.regrid(d)};
}

PuiseuxSeries mul(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    auto valuation = [](const PuiseuxSeries &s) -> std::optional<Rational> {
        if (!s.is_zero())
            return s.offset();
        return s.trunc();
    };
    std::optional<Rational> va = valuation(a), vb = valuation(b);
    std::optional<Rational> T;
    if (a.trunc() && vb)
        T = *a.trunc() + *vb;
    if (b.trunc() && va)
        T = min_trunc(T, *b.trunc() + *va);
    if (a.is_zero() || b.is_zero())
        return PuiseuxSeries::zero(T);

    long D = lcm(a.grid(), b.grid());
    std::size_t sa = std::size_t(D / a.grid()), sb = std::size_t(D / b.grid());
    Rational off = a.offset() + b.offset();
    const auto &ca = a.coeffs();
    const auto &cb = b.coeffs();
    std::size_t cap = (ca.size() - 1) * sa + (cb.size() - 1) * sb + 1;
    if (T)
        cap = std::min(cap, slot_count(off, D, *T));
    std::vector<Rational> c(cap);
    Rational tmp;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0)
            continue;
        std::size_t ki = i * sa;
        if (ki >= cap)
            break;
        for (std::size_t j = 0; j < cb.size(); ++j) {
            std::size_t k = ki + j * sb;
            if (k >= cap)
                break;
            if (cb[j] == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), ca[i].get_mpq_t(), cb[j].get_mpq_t());
            mpq_add(c[k].get_mpq_t(), c[k].get_mpq_t(), tmp.get_mpq_t());
        }
    }
    return PuiseuxSeries(off, D, std::move(c), T);
}

PuiseuxSeries inv(const PuiseuxSeries &a)
{
    if (a.is_zero())
        throw ZeroSeries("inverse of a series with no nonzero coefficient");
    if (a.is_exact()) {
        if (a.coeffs().size() == 1)
            return PuiseuxSeries(-a.offset(), a.grid(), {1 / a.coeffs()[0]}, std::nullopt);
        throw std::invalid_argument("inverse of an exact polynomial needs a relative precision");
    }
    return inv(a, a.precision());
}

PuiseuxSeries inv(const PuiseuxSeries &a, const Rational &relative_precision)
{
    if (a.is_zero())
        throw ZeroSeries("inverse of a series with no nonzero coefficient");
    Rational R = relative_precision;
    if (a.trunc())
        R = std::min(R, a.precision());
    long D = a.grid();
    std::size_t K = slot_count(0, D, R);
    const auto &c = a.coeffs();
    std::vector<Rational> b(K);
    Rational b0 = 1 / c[0];
    Rational acc, tmp;
    for (std::size_t k = 0; k < K; ++k) {
        if (k == 0) {
            b[0] = b0;
            continue;
        }
        acc = 0;
        std::size_t top = std::min(k, c.size() - 1);
        for (std::size_t i = 1; i <= top; ++i) {
            if (c[i] == 0)
                continue;
            mpq_mul(tmp.get_mpq_t(), c[i].get_mpq_t(), b[k - i].get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
        b[k] = -b0 * acc;
    }
    return PuiseuxSeries(-a.offset(), D, std::move(b), -a.offset() + R);
}

PuiseuxSeries pow(const PuiseuxSeries &a, unsigned n)
{
    PuiseuxSeries result = PuiseuxSeries::constant(1);
    PuiseuxSeries base = a;
    while (n) {
        if (n & 1u)
            result = mul(result, base);
        n >>= 1;
        if (n)
            base = mul(base, base);
    }
    return result;
}

PuiseuxSeries pochhammer(std::optional<long> n, long N)
{
    if (N < 1)
        throw std::invalid_argument("pochhammer: truncation order must be >= 1");
    long top = n ? std::min(*n, N) : N;
    if (top < 0)
        throw std::invalid_argument("pochhammer: negative index");
    std::vector<Integer> c(std::size_t(N) + 1, 0);
    c[0] = 1;
    for (long k = 1; k <= top; ++k)
        for (long m = N; m >= k; --m)
            c[std::size_t(m)] -= c[std::size_t(m - k)];
    std::vector<Rational> r(c.begin(), c.end());
    return PuiseuxSeries(0, 1, std::move(r), Rational(N + 1));
}

} // namespace mlde
