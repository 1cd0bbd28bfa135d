#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <stdexcept>
#include <string>

namespace subdiff {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;
using Vec = Eigen::VectorXd;

/// Thrown for configuration-level problems (bad files, bad keys, parameter
/// gates). Mapped to exit code 1 by the CLI.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a linear solve or the fixed-point iteration fails.
/// Mapped to exit code 2 by the CLI.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subdiff
