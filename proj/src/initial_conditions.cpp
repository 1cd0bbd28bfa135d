#include "subdiff/initial_conditions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace subdiff {

namespace {

double bump(double dist2, double a2) {
    // exp(1 - a^2/(a^2 - d^2)) for d < a, 0 beyond; continuous at d = a.
    const double denom = a2 - dist2;
    if (denom <= 0.0) return 0.0;
    return std::exp(1.0 - a2 / denom);
}

}  // namespace

ScalarField ic_circular_plateau(double a, double b, double cx, double cy) {
    if (!(a > b && b >= 0.0))
        throw std::invalid_argument("ic_circular_plateau: need 0 <= b < a");
    const double ab2 = (a - b) * (a - b);
    return [=](double x, double y) {
        const double r = std::hypot(x - cx, y - cy);
        if (r <= b) return 1.0;
        return bump((r - b) * (r - b), ab2);
    };
}

ScalarField ic_two_ellipses(double a, double gamma, double c1x, double c1y, double c2x,
                            double c2y) {
    if (!(a > 0.0) || !(gamma > 0.0))
        throw std::invalid_argument("ic_two_ellipses: a and gamma must be > 0");
    const double a2 = a * a;
    return [=](double x, double y) {
        const double d1 = (x - c1x) * (x - c1x) + gamma * gamma * (y - c1y) * (y - c1y);
        const double d2 = (x - c2x) * (x - c2x) + gamma * gamma * (y - c2y) * (y - c2y);
        return std::max(bump(d1, a2), bump(d2, a2));
    };
}

ScalarField ic_irregular() {
    return [](double x, double y) {
        const double xb = x - 0.5, yb = y - 0.5;
        if (!(xb > -0.45 && xb < 0.2 && yb > -0.4 && yb < 0.35)) return 0.0;
        const double f = std::sin(6.0 * xb + 2.0 * yb + 1.0) * std::pow(7.0 * xb - 0.2, 2) +
                         std::sin(-8.0 * xb + 10.0 * yb + 1.1) * std::pow(9.0 * xb - 0.1, 2);
        if (f >= 1.0) return 0.0;
        return std::min(std::exp(1.0 - 1.0 / (1.0 - f)), 1.0);
    };
}

ScalarField ic_nutrient_equilibrium() {
    return [](double x, double y) { return 2.0 - 0.5 * x * (1.0 - x) * y * (1.0 - y); };
}

Vec ic_from_file(const std::string& path, const Mesh& mesh) {
    std::ifstream in(path);
    if (!in) throw ConfigError("ic_from_file: cannot open " + path);
    std::vector<double> vals;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double v;
        if (ls >> v) vals.push_back(v);
    }
    if (static_cast<int>(vals.size()) != mesh.num_nodes())
        throw ConfigError("ic_from_file: " + path + " holds " + std::to_string(vals.size()) +
                          " values, mesh has " + std::to_string(mesh.num_nodes()) + " nodes");
    Vec v(mesh.num_nodes());
    for (int i = 0; i < mesh.num_nodes(); ++i) v[i] = vals[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace subdiff
