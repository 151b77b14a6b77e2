#include "mlde/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace mlde
{

namespace
{

// n = s^2 * r with r square-free (trial division; a large leftover cofactor is kept in r)
void split_square(Integer n, Integer &s, Integer &r)
{
    int sign = sgn(n);
    n = abs(n);
    s = 1;
    r = 1;
    for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            s *= p;
        }
        if (n % p == 0) {
            n /= p;
            r *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        s *= root;
    } else {
        r *= n;
    }
    r *= sign;
}

} // namespace

std::string QuadraticRoots::to_string() const
{
    if (rational)
        return "{" + mlde::to_string(r1) + ", " + mlde::to_string(r2) + "}";
    return mlde::to_string(base) + " +/- " + mlde::to_string(coef) + "*sqrt(" + radicand.get_str() + ")";
}

QuadraticRoots ubar_roots(const Rational &c)
{
    // (9/5 +/- sqrt(disc)) / 2, disc = 81/25 + 7c/10
    Rational disc = Rational(81, 25) + Rational(7, 10) * c;
    QuadraticRoots out;
    out.base = Rational(9, 10);
    if (disc == 0) {
        out.rational = true;
        out.coef = 0;
        out.r1 = out.r2 = out.base;
        return out;
    }
    Integer s, r;
    split_square(disc.get_num() * disc.get_den(), s, r);
    out.coef = frac(s, 2 * disc.get_den());
    out.radicand = r;
    if (r == 1) {
        out.rational = true;
        out.r1 = out.base + out.coef;
        out.r2 = out.base - out.coef;
    }
    return out;
}

std::pair<Rational, Rational> u_roots(const Rational &c)
{
    QuadraticRoots q = ubar_roots(c);
    if (!q.rational)
        throw NonRationalSpectrum("ubar is irrational for this c");
    return {q.r1 + c / 8, q.r2 + c / 8};
}

std::pair<Rational, Rational> printed_u_roots() { return {Rational(33, 40), Rational(17, 40)}; }

std::pair<Rational, Rational> genus1_alpha_roots()
{
    UPoly p(std::vector<Rational>{Rational(-11, 900), Rational(-1, 3), 1});
    std::vector<Rational> r = rational_roots(p);
    if (r.size() != 2)
        throw NonRationalSpectrum("alpha quadratic has no rational roots");
    std::sort(r.begin(), r.end());
    return {r[1], r[0]};
}

Var frobenius_t() { return symbol("t"); }

FrobeniusMatrix build_matrix(const Rational &c, int k)
{
    if (k < 2 || k > 4)
        throw UnsupportedDim("build_matrix supports dimensions 2, 3 and 4");
    MultiPoly t = MultiPoly::var(frobenius_t());
    std::vector<std::vector<MultiPoly>> full = {
        {MultiPoly(0), MultiPoly(2), MultiPoly(0), MultiPoly(0)},
        {MultiPoly(Rational(7, 80) * c), MultiPoly(Rational(9, 5)), MultiPoly(0), MultiPoly(0)},
        {Rational(7, 240) * c * t, Rational(11, 30) * t, MultiPoly(Rational(7, 10)), MultiPoly(0)},
        {MultiPoly::var("r41"), MultiPoly::var("r42"), MultiPoly::var("r43"), MultiPoly::var("r44")},
    };
    FrobeniusMatrix m;
    m.dim = k;
    for (int i = 0; i < k; ++i)
        m.entries.emplace_back(full[std::size_t(i)].begin(), full[std::size_t(i)].begin() + k);
    return m;
}

std::string FrobeniusMatrix::to_string() const
{
    std::ostringstream os;
    for (const auto &row : entries) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? ", " : "") << row[j].to_string();
        os << "]\n";
    }
    return os.str();
}

MultiPoly char_poly(const FrobeniusMatrix &m)
{
    MultiPoly lam = MultiPoly::var("lambda");
    auto a = m.entries;
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            a[std::size_t(i)][std::size_t(j)] = (i == j ? lam : MultiPoly()) - m.entries[std::size_t(i)][std::size_t(j)];
    return det(a);
}

std::vector<Rational> Eigenstructure::eigenvalues() const
{
    std::vector<Rational> v;
    for (const auto &s : spaces)
        for (int i = 0; i < s.algebraic_multiplicity; ++i)
            v.push_back(s.value);
    return v;
}

namespace
{

using FracMatrix = std::vector<FracVector>;

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(FracMatrix &a)
{
    std::vector<std::size_t> pivots;
    if (a.empty())
        return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && a[p][col].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        Frac1 inv = Frac1(UPoly(Rational(1))) / a[r][col];
        for (auto &e : a[r])
            e = e * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero())
                continue;
            Frac1 f = a[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace

FracVector frac_vector(const std::vector<UPoly> &entries)
{
    FracVector v;
    for (const auto &e : entries)
        v.emplace_back(e);
    return v;
}

std::string to_string(const FracVector &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].to_string("t");
    return s + ")";
}

int rank_over_qt(const std::vector<FracVector> &vectors)
{
    FracMatrix a = vectors;
    return int(rref(a).size());
}

bool same_span(const std::vector<FracVector> &a, const std::vector<FracVector> &b)
{
    std::vector<FracVector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    int r = rank_over_qt(both);
    return r == rank_over_qt(a) && r == rank_over_qt(b);
}

Eigenstructure eigenstructure(const FrobeniusMatrix &m)
{
    Var t = frobenius_t();
    Var lam = symbol("lambda");
    std::size_t n = std::size_t(m.dim);
    FracMatrix A(n, FracVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const MultiPoly &e = m.entries[i][j];
            for (Var w : e.variables())
                if (w != t)
                    throw NonRationalSpectrum("matrix has formal entries outside Q[t]");
            A[i][j] = Frac1(e.to_upoly(t));
        }
    MultiPoly cp = char_poly(m);
    if (cp.degree(t) != 0)
        throw NonRationalSpectrum("characteristic polynomial depends on t");
    std::vector<Rational> roots = rational_roots(cp.to_upoly(lam));
    if (roots.size() != n)
        throw NonRationalSpectrum("eigenvalues are not all rational");
    std::sort(roots.begin(), roots.end());

    Eigenstructure out;
    std::size_t geometric = 0;
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i])
            ++j;
        Eigenspace sp;
        sp.value = roots[i];
        sp.algebraic_multiplicity = int(j - i);
        FracMatrix B = A;
        for (std::size_t k = 0; k < n; ++k)
            B[k][k] = B[k][k] - Frac1(UPoly(roots[i]));
        std::vector<std::size_t> piv = rref(B);
        for (std::size_t free = 0; free < n; ++free) {
            if (std::find(piv.begin(), piv.end(), free) != piv.end())
                continue;
            FracVector v(n, Frac1());
            v[free] = Frac1(UPoly(Rational(1)));
            for (std::size_t r = 0; r < piv.size(); ++r)
                v[piv[r]] = Frac1() - B[r][free];
            // first nonzero entry 1
            Frac1 lead;
            for (const auto &e : v)
                if (!e.is_zero()) {
                    lead = e;
                    break;
                }
            for (auto &e : v)
                e = e / lead;
            sp.basis.push_back(std::move(v));
        }
        geometric += sp.basis.size();
        out.spaces.push_back(std::move(sp));
        i = j;
    }
    out.diagonalizable = geometric == n;
    return out;
}

} // namespace mlde
