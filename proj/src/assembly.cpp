#include "subdiff/assembly.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace subdiff {

namespace {

struct ElementGeometry {
    double area;
    double gx[3], gy[3];  // constant gradients of the three hat functions
};

ElementGeometry element_geometry(const Mesh& mesh, const Tri& t) {
    const Node& p0 = mesh.nodes[t.v[0]];
    const Node& p1 = mesh.nodes[t.v[1]];
    const Node& p2 = mesh.nodes[t.v[2]];
    const double area = triangle_area(mesh, t);
    if (!(area > 0.0)) throw std::runtime_error("assembly: non-positive triangle area");
    ElementGeometry g;
    g.area = area;
    const double inv2A = 1.0 / (2.0 * area);
    g.gx[0] = (p1.y - p2.y) * inv2A;
    g.gy[0] = (p2.x - p1.x) * inv2A;
    g.gx[1] = (p2.y - p0.y) * inv2A;
    g.gy[1] = (p0.x - p2.x) * inv2A;
    g.gx[2] = (p0.y - p1.y) * inv2A;
    g.gy[2] = (p1.x - p0.x) * inv2A;
    return g;
}

}  // namespace

SpMat assemble_mass(const Mesh& mesh) {
    std::vector<Triplet> trips;
    trips.reserve(mesh.tris.size() * 9);
    for (const auto& t : mesh.tris) {
        const double a = triangle_area(mesh, t);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trips.emplace_back(t.v[i], t.v[j], (i == j ? 2.0 : 1.0) * a / 12.0);
    }
    SpMat M(mesh.num_nodes(), mesh.num_nodes());
    M.setFromTriplets(trips.begin(), trips.end());
    return M;
}

Vec lump_mass(const SpMat& M) {
    Vec d = M * Vec::Ones(M.cols());
    for (Eigen::Index i = 0; i < d.size(); ++i)
        if (!(d[i] > 0.0))
            throw std::runtime_error("lump_mass: non-positive row sum (degenerate mesh)");
    return d;
}

SpMat assemble_stiffness(const Mesh& mesh, const ScalarField& coeff) {
    std::vector<Triplet> trips;
    trips.reserve(mesh.tris.size() * 9);
    for (const auto& t : mesh.tris) {
        const auto g = element_geometry(mesh, t);
        const Node& p0 = mesh.nodes[t.v[0]];
        const Node& p1 = mesh.nodes[t.v[1]];
        const Node& p2 = mesh.nodes[t.v[2]];
        const double c = coeff((p0.x + p1.x + p2.x) / 3.0, (p0.y + p1.y + p2.y) / 3.0);
        if (!(c > 0.0))
            throw std::invalid_argument("assemble_stiffness: coefficient not strictly positive");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trips.emplace_back(t.v[i], t.v[j],
                                   c * g.area * (g.gx[i] * g.gx[j] + g.gy[i] * g.gy[j]));
    }
    SpMat K(mesh.num_nodes(), mesh.num_nodes());
    K.setFromTriplets(trips.begin(), trips.end());
    return K;
}

SpMat assemble_stiffness(const Mesh& mesh, double coeff) {
    return assemble_stiffness(mesh, [coeff](double, double) { return coeff; });
}

SpMat assemble_elasticity(const Mesh& mesh, double G, double nu) {
    if (!(G > 0.0)) throw std::invalid_argument("assemble_elasticity: G must be > 0");
    if (!(nu < 0.5)) throw std::invalid_argument("assemble_elasticity: nu must be < 0.5");
    const double kdiv = 2.0 * G * nu / (1.0 - 2.0 * nu);

    std::vector<Triplet> trips;
    trips.reserve(mesh.tris.size() * 36);
    for (const auto& t : mesh.tris) {
        const auto g = element_geometry(mesh, t);
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                // eps(w_{i,d}) : eps(w_{j,e}) for the four component pairs.
                const double exx = g.gx[i] * g.gx[j] + 0.5 * g.gy[i] * g.gy[j];
                const double exy = 0.5 * g.gy[i] * g.gx[j];
                const double eyx = 0.5 * g.gx[i] * g.gy[j];
                const double eyy = g.gy[i] * g.gy[j] + 0.5 * g.gx[i] * g.gx[j];
                const double a = g.area;
                trips.emplace_back(2 * t.v[i], 2 * t.v[j],
                                   a * (2.0 * G * exx + kdiv * g.gx[i] * g.gx[j]));
                trips.emplace_back(2 * t.v[i], 2 * t.v[j] + 1,
                                   a * (2.0 * G * exy + kdiv * g.gx[i] * g.gy[j]));
                trips.emplace_back(2 * t.v[i] + 1, 2 * t.v[j],
                                   a * (2.0 * G * eyx + kdiv * g.gy[i] * g.gx[j]));
                trips.emplace_back(2 * t.v[i] + 1, 2 * t.v[j] + 1,
                                   a * (2.0 * G * eyy + kdiv * g.gy[i] * g.gy[j]));
            }
        }
    }
    SpMat E(2 * mesh.num_nodes(), 2 * mesh.num_nodes());
    E.setFromTriplets(trips.begin(), trips.end());
    return E;
}

SpMat assemble_divergence_coupling(const Mesh& mesh) {
    std::vector<Triplet> trips;
    trips.reserve(mesh.tris.size() * 18);
    for (const auto& t : mesh.tris) {
        const auto g = element_geometry(mesh, t);
        const double third = g.area / 3.0;  // int_T y_k for each vertex k
        for (int k = 0; k < 3; ++k) {
            for (int j = 0; j < 3; ++j) {
                trips.emplace_back(t.v[k], 2 * t.v[j], third * g.gx[j]);
                trips.emplace_back(t.v[k], 2 * t.v[j] + 1, third * g.gy[j]);
            }
        }
    }
    SpMat D(mesh.num_nodes(), 2 * mesh.num_nodes());
    D.setFromTriplets(trips.begin(), trips.end());
    return D;
}

SpMat assemble_boundary_mass(const Mesh& mesh, BoundaryTag tag) {
    std::vector<Triplet> trips;
    for (const auto& e : mesh.boundary_edges) {
        if (!edge_has_tag(e, tag)) continue;
        const Node& pa = mesh.nodes[e.a];
        const Node& pb = mesh.nodes[e.b];
        const double len = std::hypot(pb.x - pa.x, pb.y - pa.y);
        trips.emplace_back(e.a, e.a, len / 3.0);
        trips.emplace_back(e.b, e.b, len / 3.0);
        trips.emplace_back(e.a, e.b, len / 6.0);
        trips.emplace_back(e.b, e.a, len / 6.0);
    }
    SpMat B(mesh.num_nodes(), mesh.num_nodes());
    B.setFromTriplets(trips.begin(), trips.end());
    return B;
}

Vec assemble_nonlinear_load(const Mesh& mesh, const Vec& a, const Vec& b,
                            const std::function<double(double, double)>& fn) {
    if (a.size() != mesh.num_nodes() || b.size() != mesh.num_nodes())
        throw std::invalid_argument("assemble_nonlinear_load: field size mismatch");
    Vec F = Vec::Zero(mesh.num_nodes());
    constexpr int edges[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& t : mesh.tris) {
        const double w = triangle_area(mesh, t) / 3.0;
        for (const auto& e : edges) {
            const int va = t.v[e[0]], vb = t.v[e[1]];
            const double fm = fn(0.5 * (a[va] + a[vb]), 0.5 * (b[va] + b[vb]));
            // The two adjacent hats are 1/2 at an edge midpoint, the third is 0.
            F[va] += w * 0.5 * fm;
            F[vb] += w * 0.5 * fm;
        }
    }
    return F;
}

Vec interpolate_nodal(const ScalarField& f, const Mesh& mesh) {
    Vec v(mesh.num_nodes());
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        v[i] = f(mesh.nodes[i].x, mesh.nodes[i].y);
        if (!std::isfinite(v[i]))
            throw std::invalid_argument("interpolate_nodal: non-finite value at a node");
    }
    return v;
}

double integrate_scalar(const SpMat& M, const Vec& v) {
    if (M.cols() != v.size())
        throw std::invalid_argument("integrate_scalar: dimension mismatch");
    return (M * v).sum();
}

}  // namespace subdiff
