#include "subdiff/special.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace subdiff {

double kernel_g(double alpha, double t) {
    if (!(alpha > 0.0)) throw std::invalid_argument("kernel_g: alpha must be > 0");
    if (!(t > 0.0)) throw std::invalid_argument("kernel_g: t must be > 0 (singular endpoint)");
    return std::pow(t, alpha - 1.0) / std::tgamma(alpha);
}

double mittag_leffler(double alpha, double beta, double x) {
    if (!(alpha > 0.0)) throw std::invalid_argument("mittag_leffler: alpha must be > 0");
    if (!(beta > 0.0)) throw std::invalid_argument("mittag_leffler: beta must be > 0");
    if (std::abs(x) > 50.0)
        throw std::domain_error("mittag_leffler: |x| > 50 outside the supported series domain");

    constexpr int max_terms = 400;
    constexpr double rel_tol = 1e-13;

    // Kahan-compensated series sum. The term is advanced through the ratio
    // x * Gamma(alpha k + beta) / Gamma(alpha(k+1) + beta) so neither x^k nor
    // the Gamma values are ever formed on their own.
    double sum = 0.0, comp = 0.0;
    double term = 1.0 / std::tgamma(beta);
    for (int k = 0; k < max_terms; ++k) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        const double g_ratio =
            std::exp(std::lgamma(alpha * k + beta) - std::lgamma(alpha * (k + 1) + beta));
        const double next = term * x * g_ratio;
        if (std::abs(next) <= rel_tol * std::abs(sum) && k >= 2) return sum;
        term = next;
    }
    throw std::runtime_error("mittag_leffler: series did not converge within 400 terms");
}

double mittag_leffler(double alpha, double x) { return mittag_leffler(alpha, 1.0, x); }

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess (largest root first), then Newton on
        // P_n; the loop below fills the array back to front so the nodes come
        // out ascending.
        double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * xi * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (xi * p0 - p1) / (xi * xi - 1.0);
            const double dx = p0 / pp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        x[n - 1 - i] = xi;
        w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
    }
    return {x, w};
}

namespace {

// int_0^L h(s) s^{p-1} ds with 0 < p <= 1 and smooth h, via the substitution
// s = v^{1/p}, under which the weighted integral becomes the plain integral
// (1/p) int_0^{L^p} h(v^{1/p}) dv.
template <class F>
double integrate_power_weighted(F&& h, double L, double p, const std::vector<double>& gx,
                                const std::vector<double>& gw) {
    const double vmax = std::pow(L, p);
    double acc = 0.0;
    for (std::size_t q = 0; q < gx.size(); ++q) {
        const double v = 0.5 * vmax * (gx[q] + 1.0);
        acc += gw[q] * h(std::pow(v, 1.0 / p));
    }
    return acc * 0.5 * vmax / p;
}

}  // namespace

double kernel_semigroup_check(double alpha, double t, int n_quad) {
    if (!(t > 0.0)) throw std::invalid_argument("kernel_semigroup_check: t must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("kernel_semigroup_check: alpha must lie in (0,1]");
    if (alpha == 1.0) return 1.0;  // g_0 is the delta distribution

    auto [gx, gw] = gauss_legendre(n_quad);
    const double half = 0.5 * t;

    // (g_{1-a} * g_a)(t) = int_0^t g_{1-a}(t-s) g_a(s) ds, split at t/2.
    // Near s=0 the singular factor is s^{a-1}; near s=t (after u = t-s) it is
    // u^{-a} = u^{(1-a)-1}. Each 1/Gamma normalisation is restored afterwards.
    const double i_left = integrate_power_weighted(
                              [&](double s) { return kernel_g(1.0 - alpha, t - s); }, half,
                              alpha, gx, gw) /
                          std::tgamma(alpha);
    const double i_right = integrate_power_weighted(
                               [&](double u) { return kernel_g(alpha, t - u); }, half,
                               1.0 - alpha, gx, gw) /
                           std::tgamma(1.0 - alpha);
    return i_left + i_right;
}

}  // namespace subdiff
