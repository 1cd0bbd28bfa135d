#include "subdiff/fode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "subdiff/gl.hpp"

namespace subdiff {

namespace {

void check_system(const MultiOrderSystem& sys) {
    if (sys.alphas.empty() || sys.X0.size() != static_cast<Eigen::Index>(sys.alphas.size()))
        throw std::invalid_argument("MultiOrderSystem: alphas/X0 size mismatch");
    for (double a : sys.alphas)
        if (!(a > 0.0 && a <= 1.0))
            throw std::invalid_argument("MultiOrderSystem: each alpha must lie in (0,1]");
}

}  // namespace

std::vector<double> volterra_weights(double alpha, double dt, int N) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("volterra_weights: alpha must lie in (0,1]");
    if (!(dt > 0.0)) throw std::invalid_argument("volterra_weights: dt must be > 0");
    std::vector<double> w(static_cast<std::size_t>(std::max(N, 0)));
    const double scale = std::pow(dt, alpha) / std::tgamma(alpha + 1.0);
    for (int m = 1; m <= N; ++m)
        w[m - 1] = scale * (std::pow(double(m), alpha) - std::pow(double(m - 1), alpha));
    return w;
}

Trajectory picard_solve(const MultiOrderSystem& sys, double T, int N, double tol,
                        int max_iter) {
    check_system(sys);
    if (N < 1) throw std::invalid_argument("picard_solve: N must be >= 1");
    const int m = static_cast<int>(sys.alphas.size());
    const double dt = T / N;

    std::vector<std::vector<double>> W(m);
    for (int k = 0; k < m; ++k) W[k] = volterra_weights(sys.alphas[k], dt, N);

    Trajectory X(static_cast<std::size_t>(N) + 1, sys.X0);
    std::vector<Vec> Fmid(static_cast<std::size_t>(N));  // F at (t_{j+1/2}, midpoint state)

    auto refresh_F = [&](int j_lo, int j_hi) {
        for (int j = j_lo; j < j_hi; ++j)
            Fmid[j] = sys.F((j + 0.5) * dt, 0.5 * (X[j] + X[j + 1]));
    };

    int window = N;  // number of steps solved simultaneously
    int start = 0;   // first unknown grid interval of the active window
    int iters_left = max_iter;

    refresh_F(0, N);
    while (start < N) {
        const int stop = std::min(start + window, N);
        // Reset the active window to constant continuation from its start.
        for (int i = start + 1; i <= stop; ++i) X[i] = X[start];
        refresh_F(start, stop);

        double prev_change = std::numeric_limits<double>::infinity();
        int non_decreasing = 0;
        bool converged = false;
        while (iters_left > 0) {
            --iters_left;
            double change = 0.0;
            for (int i = start + 1; i <= stop; ++i) {
                Vec xi = sys.X0;
                for (int k = 0; k < m; ++k) {
                    double acc = 0.0;
                    for (int j = 0; j < i; ++j) acc += W[k][i - j - 1] * Fmid[j][k];
                    xi[k] += acc;
                }
                change = std::max(change, (xi - X[i]).lpNorm<Eigen::Infinity>());
                X[i] = xi;
            }
            refresh_F(start, stop);
            if (change <= tol) {
                converged = true;
                break;
            }
            non_decreasing = change >= prev_change ? non_decreasing + 1 : 0;
            prev_change = change;
            if (non_decreasing >= 5) break;  // contraction stalled
        }
        if (converged) {
            start = stop;
            continue;
        }
        if (iters_left <= 0)
            throw SolverError("picard_solve: iteration budget exhausted before convergence");
        if (window == 1)
            throw SolverError("picard_solve: contraction stalled even on a single-step window");
        window = std::max(1, window / 2);
    }
    return X;
}

Trajectory cq_solve(const MultiOrderSystem& sys, double T, int N, double tol, int max_iter) {
    check_system(sys);
    if (N < 1) throw std::invalid_argument("cq_solve: N must be >= 1");
    const int m = static_cast<int>(sys.alphas.size());
    const double dt = T / N;

    std::vector<std::vector<double>> B(m);
    std::vector<double> dta(m);
    for (int k = 0; k < m; ++k) {
        B[k] = gl_weights(sys.alphas[k], N);
        dta[k] = std::pow(dt, sys.alphas[k]);
    }

    Trajectory X(static_cast<std::size_t>(N) + 1, sys.X0);
    std::vector<std::vector<double>> deltas(m);  // per component, X_k(t_j) - X_k(0)

    for (int n = 1; n <= N; ++n) {
        Vec r(m);
        for (int k = 0; k < m; ++k)
            r[k] = cq_history_rhs_scalar(B[k], sys.X0[k], deltas[k], n);

        Vec x = X[n - 1];
        bool converged = false;
        for (int it = 0; it < max_iter; ++it) {
            const Vec f = sys.F(n * dt, x);
            Vec xn(m);
            for (int k = 0; k < m; ++k) xn[k] = r[k] + dta[k] * f[k];
            const double change = (xn - x).lpNorm<Eigen::Infinity>();
            x = xn;
            if (change <= tol * std::max(1.0, x.lpNorm<Eigen::Infinity>())) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw SolverError("cq_solve: per-step fixed point failed at step " +
                              std::to_string(n));
        X[n] = x;
        for (int k = 0; k < m; ++k) deltas[k].push_back(x[k] - sys.X0[k]);
    }
    return X;
}

CrossCheckReport cross_check_cq(const MultiOrderSystem& sys, double T, int N) {
    CrossCheckReport rep;
    rep.picard = picard_solve(sys, T, N, 1e-12, 400);
    rep.cq = cq_solve(sys, T, N);
    for (std::size_t i = 0; i < rep.picard.size(); ++i)
        rep.max_discrepancy =
            std::max(rep.max_discrepancy,
                     (rep.picard[i] - rep.cq[i]).lpNorm<Eigen::Infinity>());
    return rep;
}

}  // namespace subdiff
