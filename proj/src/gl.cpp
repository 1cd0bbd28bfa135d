#include "subdiff/gl.hpp"

#include <cstddef>
#include <stdexcept>

namespace subdiff {

std::vector<double> gl_weights(double alpha, int N) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("gl_weights: alpha must lie in (0,1]");
    if (N < 0) throw std::invalid_argument("gl_weights: N must be >= 0");
    std::vector<double> b(static_cast<std::size_t>(N) + 1);
    b[0] = 1.0;
    for (int j = 1; j <= N; ++j)
        b[j] = -((alpha - j + 1.0) / j) * b[j - 1];
    return b;
}

CQWeights make_cq_weights(double alpha, double dt, int N) {
    if (!(dt > 0.0)) throw std::invalid_argument("make_cq_weights: dt must be > 0");
    return CQWeights{alpha, dt, gl_weights(alpha, N)};
}

Vec cq_history_rhs(const std::vector<double>& b, const History& h, int n) {
    if (n < 1) throw std::logic_error("cq_history_rhs: step index must be >= 1");
    if (h.deltas.size() != static_cast<std::size_t>(n - 1))
        throw std::logic_error("cq_history_rhs: history length does not match step index");
    if (static_cast<int>(b.size()) < n)
        throw std::logic_error("cq_history_rhs: weight table too short");
    Vec r = b[0] * h.phi0;
    for (int j = 1; j <= n - 1; ++j) r -= b[j] * h.deltas[n - 1 - j];
    return r;
}

double cq_history_rhs_scalar(const std::vector<double>& b, double x0,
                             const std::vector<double>& deltas, int n) {
    if (n < 1) throw std::logic_error("cq_history_rhs_scalar: step index must be >= 1");
    if (deltas.size() < static_cast<std::size_t>(n - 1))
        throw std::logic_error("cq_history_rhs_scalar: history too short");
    double r = b[0] * x0;
    for (int j = 1; j <= n - 1; ++j) r -= b[j] * deltas[n - 1 - j];
    return r;
}

}  // namespace subdiff
