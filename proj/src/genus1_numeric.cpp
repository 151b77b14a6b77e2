#include "mlde/genus1_numeric.hpp"

#include "mlde/modular_forms.hpp"

#include <algorithm>
#include <cmath>

namespace mlde
{

namespace
{

const Complex I(0, 1);

Complex eval_eisenstein(int k, Complex tau, long qterms)
{
    return eval_at_tau(eisenstein(k, qterms).series, tau, 1e-13);
}

// roots of x^3 + a x + b by Cardano, then Newton polish
std::array<Complex, 3> depressed_cubic_roots(Complex a, Complex b)
{
    std::array<Complex, 3> r;
    Complex disc = std::sqrt(b * b / 4.0 + a * a * a / 27.0);
    Complex u3 = -b / 2.0 + disc;
    if (std::abs(u3) < std::abs(-b / 2.0 - disc))
        u3 = -b / 2.0 - disc;
    if (std::abs(u3) == 0) {
        r = {Complex(0), Complex(0), Complex(0)};
    } else {
        Complex u = std::pow(u3, 1.0 / 3.0);
        const Complex w(-0.5, std::sqrt(3.0) / 2.0);
        for (int k = 0; k < 3; ++k) {
            Complex uk = u * std::pow(w, k);
            r[std::size_t(k)] = uk - a / (3.0 * uk);
        }
    }
    for (auto &x : r)
        for (int it = 0; it < 3; ++it) {
            Complex d = 3.0 * x * x + a;
            if (std::abs(d) == 0)
                break;
            x -= (x * x * x + a * x + b) / d;
        }
    return r;
}

using Triple = std::array<Complex, 3>;

} // namespace

Genus1Frame make_frame(Complex tau, double lambda, long qterms)
{
    if (!(tau.imag() > 0))
        throw std::domain_error("tau must lie in the upper half plane");
    if (!(lambda > 0))
        throw std::domain_error("lambda must be positive");
    if (qterms < 20)
        throw std::invalid_argument("make_frame needs qterms >= 20");
    Genus1Frame f;
    f.tau = tau;
    f.lambda = lambda;
    f.E2 = eval_eisenstein(2, tau, qterms);
    f.E4 = eval_eisenstein(4, tau, qterms);
    f.E6 = eval_eisenstein(6, tau, qterms);
    double pi = M_PI, l2 = lambda * lambda;
    f.a = -(std::pow(pi, 4) / 3.0) * l2 * l2 * f.E4;
    f.b = -(2.0 * std::pow(pi, 6) / 27.0) * l2 * l2 * l2 * f.E6;
    Triple r = depressed_cubic_roots(f.a, f.b);
    Complex mean = (r[0] + r[1] + r[2]) / 3.0;
    for (auto &x : r)
        x -= mean;
    std::sort(r.begin(), r.end(), [](Complex u, Complex v) {
        return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
    });
    f.roots = r;
    double scale = std::pow(std::abs(f.a), 1.5) + std::abs(f.b);
    double sep = std::min({std::abs(r[0] - r[1]), std::abs(r[1] - r[2]), std::abs(r[0] - r[2])});
    if (sep < 1e-12 * std::sqrt(std::abs(f.a) + 1e-300) || scale == 0)
        throw DegenerateFrame("branch points collide; degenerate torus");
    return f;
}

Complex delta0_from_roots(const Genus1Frame &f)
{
    const Triple &X = f.roots;
    Complex d = (X[0] - X[1]) * (X[1] - X[2]) * (X[2] - X[0]);
    return d * d;
}

Complex delta0_from_ab(const Genus1Frame &f) { return -4.0 * f.a * f.a * f.a - 27.0 * f.b * f.b; }

Complex delta0_from_eisenstein(const Genus1Frame &f)
{
    return (4.0 * std::pow(M_PI, 12) / 27.0) * std::pow(f.lambda, 12) * (f.E4 * f.E4 * f.E4 - f.E6 * f.E6);
}

Triple root_shift(const Genus1Frame &from, const Genus1Frame &to)
{
    const Triple &X = from.roots, &Y = to.roots;
    Triple xi;
    std::array<bool, 3> used{};
    double max_shift = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        std::size_t best = 3;
        for (std::size_t j = 0; j < 3; ++j)
            if (best == 3 || std::abs(Y[j] - X[i]) < std::abs(Y[best] - X[i]))
                best = j;
        if (used[best])
            throw RootTrackingLost("two branch points pair with the same perturbed root");
        used[best] = true;
        xi[i] = Y[best] - X[i];
        max_shift = std::max(max_shift, std::abs(xi[i]));
    }
    double sep = std::min({std::abs(X[0] - X[1]), std::abs(X[1] - X[2]), std::abs(X[0] - X[2])});
    if (sep <= 10.0 * max_shift)
        throw RootTrackingLost("perturbation too large compared with the root separation");
    return xi;
}

Complex det_v3(const Triple &X) { return (X[0] - X[1]) * (X[1] - X[2]) * (X[2] - X[0]); }

namespace
{

// det of rows (X), (1,1,1), (w)
Complex det_rows(const Triple &X, const Triple &w)
{
    return X[0] * (w[2] - w[1]) - X[1] * (w[2] - w[0]) + X[2] * (w[1] - w[0]);
}

} // namespace

Complex det_xi30(const Triple &X, const Triple &xi) { return det_rows(X, xi); }

Complex det_xi31(const Triple &X, const Triple &xi)
{
    return det_rows(X, {xi[0] * X[0], xi[1] * X[1], xi[2] * X[2]});
}

Complex omega(const Triple &X, const Triple &xi) { return -3.0 * det_xi31(X, xi) / det_v3(X); }

namespace
{

Complex dtau_rhs(Complex tau, double lambda, double eps, long qterms)
{
    Genus1Frame f0 = make_frame(tau, lambda, qterms);
    Genus1Frame f1 = make_frame(tau + eps, lambda, qterms);
    Triple xi = root_shift(f0, f1);
    return -I * M_PI * lambda * lambda * det_xi30(f0.roots, xi) / det_v3(f0.roots);
}

Triple central_shift(const Genus1Frame &f, const Genus1Frame &minus, const Genus1Frame &plus)
{
    Triple a = root_shift(f, plus), b = root_shift(f, minus), xi;
    for (std::size_t i = 0; i < 3; ++i)
        xi[i] = (a[i] - b[i]) / 2.0;
    return xi;
}

} // namespace

double dtau_identity_check(Complex tau, double lambda, double eps, long qterms)
{
    return std::abs(dtau_rhs(tau, lambda, eps, qterms) - eps) / eps;
}

double dtau_richardson_check(Complex tau, double lambda, double eps, long qterms)
{
    Complex r1 = dtau_rhs(tau, lambda, eps, qterms) / eps;
    Complex r2 = dtau_rhs(tau, lambda, eps / 2, qterms) / (eps / 2);
    return std::abs(2.0 * r2 - r1 - 1.0);
}

double scaling_xi30_check(Complex tau, double lambda, double eps, long qterms)
{
    Genus1Frame f0 = make_frame(tau, lambda, qterms);
    Genus1Frame f1 = make_frame(tau, lambda * (1 + eps), qterms);
    Triple xi = root_shift(f0, f1);
    double xs = 0, Xs = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        xs = std::max(xs, std::abs(xi[i]));
        Xs = std::max(Xs, std::abs(f0.roots[i]));
    }
    Complex q = det_xi30(f0.roots, xi) / det_v3(f0.roots);
    return std::abs(q) / (xs / Xs);
}

OmegaCheck omega_decomposition_check(Complex tau, double lambda, double eps, long qterms)
{
    OmegaCheck out;
    Genus1Frame f = make_frame(tau, lambda, qterms);
    {
        // mixed direction in (tau, lambda)
        Complex dt = eps * Complex(1, 0.5);
        double dl = eps * lambda;
        Genus1Frame fp = make_frame(tau + dt, lambda + dl, qterms);
        Genus1Frame fm = make_frame(tau - dt, lambda - dl, qterms);
        Complex om = omega(f.roots, central_shift(f, fm, fp));
        Complex half_dlog = 0.5 * std::log(delta0_from_roots(fp) / delta0_from_roots(fm)) / 2.0;
        out.dlog_error = std::abs(om - half_dlog) / std::abs(half_dlog);
    }
    {
        Genus1Frame fp = make_frame(tau + eps, lambda, qterms), fm = make_frame(tau - eps, lambda, qterms);
        Complex om = omega(f.roots, central_shift(f, fm, fp));
        Complex want = I * M_PI * f.E2 * eps;
        out.tau_error = std::abs(om - want) / std::abs(want);
    }
    {
        Genus1Frame fp = make_frame(tau, lambda * (1 + eps), qterms), fm = make_frame(tau, lambda * (1 - eps), qterms);
        Complex om = omega(f.roots, central_shift(f, fm, fp));
        out.lambda_part = (om / eps).real();
    }
    return out;
}

BoundaryProbe boundary_exponent_probe(const std::vector<Complex> &tau_path, double lambda, long qterms)
{
    BoundaryProbe out;
    if (tau_path.size() < 2)
        return out;
    std::vector<double> lq, lpair, liso;
    for (Complex t : tau_path) {
        Genus1Frame f = make_frame(t, lambda, qterms);
        const Triple &X = f.roots;
        std::size_t bi = 0, bj = 1;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (std::abs(X[i] - X[j]) < std::abs(X[bi] - X[bj])) {
                    bi = i;
                    bj = j;
                }
        std::size_t k = 3 - bi - bj;
        lq.push_back(-M_PI * t.imag()); // log|e^{pi i tau}|
        lpair.push_back(std::log(std::abs(X[bi] - X[bj])));
        liso.push_back(std::log(std::abs(X[k])));
    }
    auto slope = [](const std::vector<double> &x, const std::vector<double> &y) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            mx += x[i];
            my += y[i];
        }
        mx /= double(x.size());
        my /= double(y.size());
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
        }
        return sxx == 0 ? std::nan("") : sxy / sxx;
    };
    double spread = *std::max_element(lq.begin(), lq.end()) - *std::min_element(lq.begin(), lq.end());
    if (spread < 1e-9)
        return out;
    out.defined = true;
    out.pair_slope = slope(lq, lpair);
    // against log|q| = 2 log|q^(1/2)|
    std::vector<double> lq2(lq);
    for (auto &v : lq2)
        v *= 2;
    out.isolated_slope = slope(lq2, liso);
    return out;
}

} // namespace mlde
