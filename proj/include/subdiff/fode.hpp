#pragma once

#include <functional>
#include <vector>

#include "subdiff/types.hpp"

namespace subdiff {

/// Multi-order fractional ODE system in Caputo form,
///   d_t^{alpha_k} (X_k - X_{k,0}) = F_k(t, X),  alpha_k in (0,1],
/// equivalently the Volterra equation X = X_0 + l * F with l = diag(g_alpha).
struct MultiOrderSystem {
    std::vector<double> alphas;
    Vec X0;
    std::function<Vec(double, const Vec&)> F;
    double L_F = 1.0;  // user-declared Lipschitz estimate (contraction bookkeeping)
};

/// Product-rectangle weights for the kernel g_alpha on a uniform grid:
///   w_{i,j} = int_{t_j}^{t_{j+1}} g_alpha(t_i - s) ds
///           = ((t_i-t_j)^alpha - (t_i-t_{j+1})^alpha)/Gamma(alpha+1).
/// The weights depend only on the lag m = i - j; entry [m-1] of the returned
/// vector holds the weight for lag m = 1..N.
std::vector<double> volterra_weights(double alpha, double dt, int N);

/// Trajectory on the uniform grid t_i = i T/N, X[i] = state at t_i.
using Trajectory = std::vector<Vec>;

/// Picard iteration on the discretised Volterra equation, with F sampled at
/// interval midpoints from the linear interpolant of the previous iterate.
/// If the sup-norm change fails to decrease over 5 consecutive iterations the
/// active window is halved and the solve continues window by window, fixing
/// earlier windows as converged history.
Trajectory picard_solve(const MultiOrderSystem& sys, double T, int N, double tol,
                        int max_iter);

/// Implicit GL convolution-quadrature integrator for the same system: per
/// step, b_0 X_n = history + dt^{alpha_k} F_k(t_n, X_n) solved by fixed-point
/// iteration (linear convergence for dt^alpha L_F < 1).
Trajectory cq_solve(const MultiOrderSystem& sys, double T, int N, double tol = 1e-12,
                    int max_iter = 200);

struct CrossCheckReport {
    double max_discrepancy = 0.0;  // max over grid and components
    Trajectory picard;
    Trajectory cq;
};

/// Runs both schemes on the same grid and reports the max pointwise gap.
CrossCheckReport cross_check_cq(const MultiOrderSystem& sys, double T, int N);

}  // namespace subdiff
