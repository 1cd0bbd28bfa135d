#include "subdiff/observables.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "subdiff/assembly.hpp"

namespace subdiff {

double field_mass(const SpMat& M, const Vec& v) { return integrate_scalar(M, v); }

double total_displacement(const SpMat& M, const Vec& u) {
    if (u.size() != 2 * M.rows())
        throw std::invalid_argument("total_displacement: displacement size mismatch");
    Vec mag(M.rows());
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        mag[i] = std::hypot(u[2 * i], u[2 * i + 1]);
    return integrate_scalar(M, mag);
}

double tumour_radius(const Mesh& mesh, const Vec& phi, double cx, double cy, double thresh) {
    if (!(thresh > 0.0)) throw std::invalid_argument("tumour_radius: thresh must be > 0");
    if (phi.size() != mesh.num_nodes())
        throw std::invalid_argument("tumour_radius: field size mismatch");
    double r = 0.0;
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        if (phi[i] < thresh) continue;
        r = std::max(r, std::hypot(mesh.nodes[i].x - cx, mesh.nodes[i].y - cy));
    }
    return r;
}

std::vector<Sample> cross_section(const Mesh& mesh, const Vec& field, Axis axis, double coord) {
    if (field.size() != mesh.num_nodes())
        throw std::invalid_argument("cross_section: field size mismatch");
    if (coord < 0.0 || coord > 1.0)
        throw std::invalid_argument("cross_section: coord must lie in [0,1]");
    constexpr double eps = 1e-12;

    // The fixed coordinate is tested against `coord`; the other one is reported.
    const auto fixed = [&](int node) {
        return axis == Axis::X ? mesh.nodes[node].y : mesh.nodes[node].x;
    };
    const auto free_coord = [&](int node) {
        return axis == Axis::X ? mesh.nodes[node].x : mesh.nodes[node].y;
    };

    std::set<std::pair<int, int>> edges;
    for (const auto& tri : mesh.tris) {
        const int v[3] = {tri.v[0], tri.v[1], tri.v[2]};
        for (int e = 0; e < 3; ++e)
            edges.emplace(std::min(v[e], v[(e + 1) % 3]), std::max(v[e], v[(e + 1) % 3]));
    }

    std::vector<Sample> samples;
    for (const auto& [a, b] : edges) {
        const double da = fixed(a) - coord;
        const double db = fixed(b) - coord;
        const bool on_a = std::abs(da) <= eps;
        const bool on_b = std::abs(db) <= eps;
        if (on_a) samples.push_back({free_coord(a), field[a]});
        if (on_b) samples.push_back({free_coord(b), field[b]});
        if (!on_a && !on_b && da * db < 0.0) {
            const double t = da / (da - db);
            samples.push_back({free_coord(a) + t * (free_coord(b) - free_coord(a)),
                               field[a] + t * (field[b] - field[a])});
        }
    }

    std::sort(samples.begin(), samples.end(),
              [](const Sample& l, const Sample& r) { return l.s < r.s; });
    std::vector<Sample> unique;
    for (const auto& s : samples)
        if (unique.empty() || s.s - unique.back().s > eps) unique.push_back(s);
    return unique;
}

}  // namespace subdiff
