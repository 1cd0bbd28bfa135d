#pragma once

#include <utility>
#include <vector>

namespace subdiff {

/// Riemann-Liouville kernel g_alpha(t) = t^{alpha-1}/Gamma(alpha), t > 0.
double kernel_g(double alpha, double t);

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(x), evaluated by its
/// power series with compensated summation. Supported domain |x| <= 50;
/// outside it the series route is unreliable and we refuse to answer.
///
/// Stopping rule: relative term ratio below 1e-13, at most 400 terms; failure
/// to converge raises instead of returning a silently wrong value.
double mittag_leffler(double alpha, double beta, double x);

/// One-parameter shorthand E_alpha(x) = E_{alpha,1}(x).
double mittag_leffler(double alpha, double x);

/// Numerically evaluates the convolution (g_{1-alpha} * g_alpha)(t), which
/// the semigroup identity says equals 1 for every t. Both endpoint
/// singularities are removed by power substitutions before an n_quad-point
/// Gauss-Legendre rule is applied; the alpha -> 1 limit (g_0 = delta) is
/// returned as exactly 1.
double kernel_semigroup_check(double alpha, double t, int n_quad);

/// Gauss-Legendre nodes and weights on [-1, 1], nodes in ascending order.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

}  // namespace subdiff
