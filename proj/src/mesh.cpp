#include "subdiff/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace subdiff {

double Mesh::h() const { return std::sqrt(2.0) / n; }

namespace {

bool segment_covers(Segment s, double x, double y) {
    constexpr double eps = 1e-12;
    switch (s) {
        case Segment::None: return false;
        case Segment::Left: return x < eps;
        case Segment::Right: return x > 1.0 - eps;
        case Segment::Bottom: return y < eps;
        case Segment::Top: return y > 1.0 - eps;
        case Segment::All: return true;
    }
    return false;
}

bool segment_covers_edge(Segment s, const Node& a, const Node& b) {
    return segment_covers(s, a.x, a.y) && segment_covers(s, b.x, b.y);
}

}  // namespace

Mesh build_unit_square_mesh(int n, Segment gamma_u, Segment gamma_psi) {
    if (n < 1) throw std::invalid_argument("build_unit_square_mesh: n must be >= 1");

    Mesh m;
    m.n = n;
    m.nodes.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            m.nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});

    auto id = [n](int i, int j) { return j * (n + 1) + i; };

    m.tris.reserve(static_cast<std::size_t>(2) * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v00 = id(i, j), v10 = id(i + 1, j);
            const int v01 = id(i, j + 1), v11 = id(i + 1, j + 1);
            m.tris.push_back({{v00, v10, v11}});
            m.tris.push_back({{v00, v11, v01}});
        }
    }

    auto add_edge = [&](int a, int b) {
        BoundaryEdge e;
        e.a = a;
        e.b = b;
        e.gamma_u = segment_covers_edge(gamma_u, m.nodes[a], m.nodes[b]);
        e.gamma_psi = segment_covers_edge(gamma_psi, m.nodes[a], m.nodes[b]);
        m.boundary_edges.push_back(e);
    };
    for (int i = 0; i < n; ++i) add_edge(id(i, 0), id(i + 1, 0));
    for (int j = 0; j < n; ++j) add_edge(id(n, j), id(n, j + 1));
    for (int i = n; i > 0; --i) add_edge(id(i, n), id(i - 1, n));
    for (int j = n; j > 0; --j) add_edge(id(0, j), id(0, j - 1));
    return m;
}

bool edge_has_tag(const BoundaryEdge& e, BoundaryTag tag) {
    switch (tag) {
        case BoundaryTag::GammaU: return e.gamma_u;
        case BoundaryTag::GammaPsi: return e.gamma_psi;
        case BoundaryTag::NeumannRest: return !e.gamma_psi;
    }
    return false;
}

std::vector<int> boundary_nodes(const Mesh& mesh, BoundaryTag tag) {
    std::vector<int> out;
    for (const auto& e : mesh.boundary_edges) {
        if (!edge_has_tag(e, tag)) continue;
        out.push_back(e.a);
        out.push_back(e.b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double triangle_area(const Mesh& mesh, const Tri& t) {
    const Node& p0 = mesh.nodes[t.v[0]];
    const Node& p1 = mesh.nodes[t.v[1]];
    const Node& p2 = mesh.nodes[t.v[2]];
    return 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
}

void dump_mesh(const Mesh& mesh, std::ostream& os) {
    os << "# " << mesh.num_nodes() << " " << mesh.num_tris() << "\n";
    for (const auto& nd : mesh.nodes) os << nd.x << " " << nd.y << "\n";
    for (const auto& t : mesh.tris) os << t.v[0] << " " << t.v[1] << " " << t.v[2] << "\n";
}

}  // namespace subdiff
