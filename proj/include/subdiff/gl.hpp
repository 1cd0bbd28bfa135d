#pragma once

#include <vector>

#include "subdiff/types.hpp"

namespace subdiff {

/// Grunwald-Letnikov convolution-quadrature weights for a fractional
/// derivative of order alpha, plus the step size they were built for.
///
/// The weight sequence is b_0 = 1, b_j = -((alpha - j + 1)/j) b_{j-1}.
/// For alpha = 1 this degenerates to (1, -1, 0, ...), i.e. implicit Euler.
struct CQWeights {
    double alpha = 1.0;
    double dt = 1.0;
    std::vector<double> b;
};

/// History of a time-fractional field: the initial vector and the increments
/// phi_j - phi_0 for j = 1..n-1, appended as the simulation advances.
struct History {
    Vec phi0;
    std::vector<Vec> deltas;
};

/// Computes b_0..b_N by the recursion above. Requires alpha in (0, 1].
std::vector<double> gl_weights(double alpha, int N);

/// Convenience wrapper bundling weights with (alpha, dt).
CQWeights make_cq_weights(double alpha, double dt, int N);

/// Known part of the memory term at step n >= 1:
///   r = b_0 phi_0 - sum_{j=1}^{n-1} b_j (phi_{n-j} - phi_0)
/// so the step equation reads b_0 phi_n = r + (dt)^alpha (spatial terms).
/// The j = n term vanishes identically because phi_0 - phi_0 = 0.
Vec cq_history_rhs(const std::vector<double>& b, const History& h, int n);

/// Scalar overload used by the ODE-level integrators.
double cq_history_rhs_scalar(const std::vector<double>& b, double x0,
                             const std::vector<double>& deltas, int n);

}  // namespace subdiff
