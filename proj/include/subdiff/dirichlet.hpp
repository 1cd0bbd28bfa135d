#pragma once

#include <vector>

#include "subdiff/types.hpp"

namespace subdiff {

/// Symmetric elimination of Dirichlet constraints: constrained rows and
/// columns are zeroed, the diagonal set to 1, and the eliminated columns are
/// moved to the right-hand side so SPD solvers stay applicable.
///
/// One-shot form; dofs may repeat only with identical values.
void apply_dirichlet(SpMat& A, Vec& rhs, const std::vector<int>& dofs, const Vec& values);

/// Cached variant for systems solved repeatedly with time-varying boundary
/// values: the constrained matrix is built (and can be factorised) once, and
/// apply() produces the per-solve right-hand side.
struct DirichletSystem {
    SpMat A;                  // constrained matrix
    SpMat coupling;           // n x nbc: eliminated columns restricted to free rows
    std::vector<int> dofs;    // sorted constrained dof indices

    Vec apply(const Vec& rhs, const Vec& values) const;
};

DirichletSystem make_dirichlet_system(const SpMat& A, const std::vector<int>& dofs);

}  // namespace subdiff
