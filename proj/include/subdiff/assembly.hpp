#pragma once

#include <functional>

#include "subdiff/mesh.hpp"
#include "subdiff/types.hpp"

namespace subdiff {

using ScalarField = std::function<double(double, double)>;

/// M[i,j] = int y_i y_j. Symmetric, row sums equal the lumped masses.
SpMat assemble_mass(const Mesh& mesh);

/// Row sums of a consistent mass matrix; all entries must come out positive.
Vec lump_mass(const SpMat& M);

/// K[i,j] = int coeff(x) grad y_i . grad y_j with coeff sampled at triangle
/// centroids (one-point rule). coeff must be strictly positive there.
SpMat assemble_stiffness(const Mesh& mesh, const ScalarField& coeff);
SpMat assemble_stiffness(const Mesh& mesh, double coeff);

/// Vector-P1 bilinear form 2G (eps(u), eps(v)) + (2G nu/(1-2 nu)) (div u, div v).
/// Dof l = 2*node + component, components interleaved.
SpMat assemble_elasticity(const Mesh& mesh, double G, double nu);

/// D[k,l] = int y_k (div w_l) for scalar test index k and vector dof l.
SpMat assemble_divergence_coupling(const Mesh& mesh);

/// B[i,j] = int_{edges with tag} y_i y_j (edge mass matrix on the tagged part
/// of the boundary; zero matrix if no edge carries the tag).
SpMat assemble_boundary_mass(const Mesh& mesh, BoundaryTag tag);

/// Load vector F[i] = int fn(a(x), b(x)) y_i dx where a, b are P1 fields,
/// integrated by the 3-point edge-midpoint rule per triangle (exact for
/// quadratic integrands).
Vec assemble_nonlinear_load(const Mesh& mesh, const Vec& a, const Vec& b,
                            const std::function<double(double, double)>& fn);

/// v[i] = f(node_i); rejects non-finite values.
Vec interpolate_nodal(const ScalarField& f, const Mesh& mesh);

/// 1^T M v, the exact integral of the P1 interpolant carried by v.
double integrate_scalar(const SpMat& M, const Vec& v);

/// Everything the discrete system assembles once per run.
struct Operators {
    SpMat M;       // consistent mass
    Vec ML;        // lumped mass diagonal
    SpMat K_mu;    // stiffness with coefficient M_phi
    SpMat K_psi;   // stiffness with coefficient M_psi
    SpMat K_chi;   // stiffness with coefficient M_chi
    SpMat E;       // elasticity form (unconstrained)
    SpMat D;       // divergence coupling, nodes x 2*nodes
    SpMat B_psi;   // boundary mass on the Neumann part for psi/chi
};

}  // namespace subdiff
