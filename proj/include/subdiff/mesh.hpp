#pragma once

#include <iosfwd>
#include <vector>

namespace subdiff {

/// Parts of the unit-square boundary a Dirichlet family can occupy.
enum class Segment { None, Left, Right, Bottom, Top, All };

/// Role an edge plays when assembling boundary terms. GammaU selects the
/// displacement-Dirichlet edges, GammaPsi the nutrient/chemo Dirichlet edges,
/// NeumannRest the complement of GammaPsi (the support of the boundary-mass
/// operator). The two Dirichlet families may overlap, so edges carry
/// independent flags rather than a single exclusive tag.
enum class BoundaryTag { GammaU, GammaPsi, NeumannRest };

struct Node {
    double x = 0.0, y = 0.0;
};

struct Tri {
    int v[3];
};

struct BoundaryEdge {
    int a = -1, b = -1;
    bool gamma_u = false;
    bool gamma_psi = false;
};

/// Structured triangulation of (0,1)^2: n x n squares, each split along the
/// bottom-left to top-right diagonal. Nodes are lexicographic (x fastest),
/// triangles counter-clockwise, h = sqrt(2)/n (the longest edge).
struct Mesh {
    int n = 0;
    std::vector<Node> nodes;
    std::vector<Tri> tris;
    std::vector<BoundaryEdge> boundary_edges;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_tris() const { return static_cast<int>(tris.size()); }
    double h() const;
};

Mesh build_unit_square_mesh(int n, Segment gamma_u = Segment::Left,
                            Segment gamma_psi = Segment::None);

bool edge_has_tag(const BoundaryEdge& e, BoundaryTag tag);

/// Sorted, duplicate-free node indices touched by edges carrying the tag.
std::vector<int> boundary_nodes(const Mesh& mesh, BoundaryTag tag);

double triangle_area(const Mesh& mesh, const Tri& t);

/// Debug dump: "# <node-count> <triangle-count>", node lines "x y", then
/// triangle lines "i j k".
void dump_mesh(const Mesh& mesh, std::ostream& os);

}  // namespace subdiff
