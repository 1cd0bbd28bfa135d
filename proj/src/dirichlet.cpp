#include "subdiff/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subdiff {

namespace {

// Maps dof index -> position in the (deduplicated, sorted) constraint list,
// or -1. Rejects conflicting duplicate values when values are supplied.
std::vector<int> constraint_positions(Eigen::Index n, const std::vector<int>& dofs,
                                      const Vec* values, std::vector<int>& unique_dofs,
                                      Vec* unique_values) {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<double> vals;
    for (std::size_t k = 0; k < dofs.size(); ++k) {
        const int d = dofs[k];
        if (d < 0 || d >= n) throw std::invalid_argument("dirichlet: dof index out of range");
        const double v = values ? (*values)[static_cast<Eigen::Index>(k)] : 0.0;
        if (pos[d] >= 0) {
            if (values && vals[pos[d]] != v)
                throw std::invalid_argument("dirichlet: conflicting values for one dof");
            continue;
        }
        pos[d] = static_cast<int>(unique_dofs.size());
        unique_dofs.push_back(d);
        vals.push_back(v);
    }
    // Re-sort by dof index for reproducible layouts.
    std::vector<int> order(unique_dofs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return unique_dofs[a] < unique_dofs[b]; });
    std::vector<int> sorted_dofs(unique_dofs.size());
    Vec sorted_vals(static_cast<Eigen::Index>(unique_dofs.size()));
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted_dofs[i] = unique_dofs[order[i]];
        sorted_vals[static_cast<Eigen::Index>(i)] = vals[order[i]];
        pos[sorted_dofs[i]] = static_cast<int>(i);
    }
    unique_dofs = std::move(sorted_dofs);
    if (unique_values) *unique_values = std::move(sorted_vals);
    return pos;
}

}  // namespace

void apply_dirichlet(SpMat& A, Vec& rhs, const std::vector<int>& dofs, const Vec& values) {
    if (static_cast<Eigen::Index>(dofs.size()) != values.size())
        throw std::invalid_argument("apply_dirichlet: dofs/values size mismatch");
    if (dofs.empty()) return;

    std::vector<int> unique_dofs;
    Vec unique_values;
    const auto pos = constraint_positions(A.rows(), dofs, &values, unique_dofs, &unique_values);

    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(A.nonZeros()) + unique_dofs.size());
    for (int col = 0; col < A.outerSize(); ++col) {
        for (SpMat::InnerIterator it(A, col); it; ++it) {
            const int i = static_cast<int>(it.row());
            const int j = static_cast<int>(it.col());
            const bool bi = pos[i] >= 0, bj = pos[j] >= 0;
            if (!bi && !bj) {
                trips.emplace_back(i, j, it.value());
            } else if (!bi && bj) {
                rhs[i] -= it.value() * unique_values[pos[j]];
            }
            // rows of constrained dofs are dropped; identity is added below
        }
    }
    for (std::size_t k = 0; k < unique_dofs.size(); ++k)
        trips.emplace_back(unique_dofs[k], unique_dofs[k], 1.0);

    SpMat out(A.rows(), A.cols());
    out.setFromTriplets(trips.begin(), trips.end());
    A.swap(out);
    for (std::size_t k = 0; k < unique_dofs.size(); ++k)
        rhs[unique_dofs[k]] = unique_values[static_cast<Eigen::Index>(k)];
}

Vec DirichletSystem::apply(const Vec& rhs, const Vec& values) const {
    if (values.size() != static_cast<Eigen::Index>(dofs.size()))
        throw std::invalid_argument("DirichletSystem::apply: values size mismatch");
    Vec out = rhs - coupling * values;
    for (std::size_t k = 0; k < dofs.size(); ++k)
        out[dofs[k]] = values[static_cast<Eigen::Index>(k)];
    return out;
}

DirichletSystem make_dirichlet_system(const SpMat& A, const std::vector<int>& dofs) {
    DirichletSystem sys;
    std::vector<int> unique_dofs;
    const auto pos = constraint_positions(A.rows(), dofs, nullptr, unique_dofs, nullptr);

    std::vector<Triplet> trips, ctrips;
    trips.reserve(static_cast<std::size_t>(A.nonZeros()) + unique_dofs.size());
    for (int col = 0; col < A.outerSize(); ++col) {
        for (SpMat::InnerIterator it(A, col); it; ++it) {
            const int i = static_cast<int>(it.row());
            const int j = static_cast<int>(it.col());
            const bool bi = pos[i] >= 0, bj = pos[j] >= 0;
            if (!bi && !bj)
                trips.emplace_back(i, j, it.value());
            else if (!bi && bj)
                ctrips.emplace_back(i, pos[j], it.value());
        }
    }
    for (std::size_t k = 0; k < unique_dofs.size(); ++k)
        trips.emplace_back(unique_dofs[k], unique_dofs[k], 1.0);

    sys.A.resize(A.rows(), A.cols());
    sys.A.setFromTriplets(trips.begin(), trips.end());
    sys.coupling.resize(A.rows(), static_cast<Eigen::Index>(unique_dofs.size()));
    sys.coupling.setFromTriplets(ctrips.begin(), ctrips.end());
    sys.dofs = std::move(unique_dofs);
    return sys;
}

}  // namespace subdiff
