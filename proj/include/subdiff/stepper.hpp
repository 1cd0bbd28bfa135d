#pragma once

#include <memory>
#include <string>

#include "subdiff/assembly.hpp"
#include "subdiff/dirichlet.hpp"
#include "subdiff/gl.hpp"
#include "subdiff/params.hpp"
#include "subdiff/schedule.hpp"

namespace subdiff {

struct SolverSettings {
    enum class LinearSolver { Direct, Krylov };

    double fp_tol = 1e-6;
    int fp_max = 50;
    double lin_tol = 1e-10;
    bool mass_lumping = true;
    LinearSolver linear_solver = LinearSolver::Direct;
};

/// Nodal unknowns at one time level. u is interleaved (ux0, uy0, ux1, ...).
struct FieldState {
    double t = 0.0;
    Vec phi, mu, psi, chi, u;
    int fp_iters = 0;
};

/// Time signals driving the run: volumetric sources, Dirichlet values on
/// Gamma_psi, and constant-in-space Neumann data on the rest of the boundary.
struct Schedules {
    Schedule S_psi, S_chi;
    Schedule psi_dirichlet, chi_dirichlet;
    Schedule psi_neumann, chi_neumann;
};

/// Assembles every matrix the discrete system needs for the given parameters.
Operators build_operators(const Mesh& mesh, const Params& p);

/// Linear solver wrapper: direct factorisation (computed once, reused) or a
/// preconditioned Krylov method, per SolverSettings. Throws SolverError with
/// the block name and residual on failure.
class LinearBlock {
public:
    LinearBlock() = default;
    void factor(const SpMat& A, bool spd, SolverSettings::LinearSolver mode, double lin_tol,
                std::string name);
    Vec solve(const Vec& rhs) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// The coupled integrator. All per-step system matrices are time-independent,
/// so each block is constrained and factorised once at construction.
class Stepper {
public:
    Stepper(const Mesh& mesh, const Params& p, const Schedules& schedules,
            const SolverSettings& settings, double dt);

    /// Elastic pre-solve for the t = 0 record: E u0 = -lambda D^T phi0 with
    /// Gamma_u constraints, then mu0 from the mass (or lumped-mass) relation.
    /// The scheme itself never consumes u history.
    void initial_elastic_solve(const Vec& phi0, Vec& u0, Vec& mu0) const;

    /// One inner-iteration update of psi:
    /// (M + dt K_psi) psi_n = M psi_prev - dt N_psi F(phi*, psi*)
    ///                        + dt S_psi(t_n) M 1 + dt psi_b(t_n) B 1,
    /// with Dirichlet rows on Gamma_psi pinned to psi_dirichlet(t_n).
    Vec psi_step(const Vec& psi_prev, const Vec& phi_star, const Vec& psi_star,
                 double t_n) const;

    /// Same for chi, plus the implicit decay term dt N_chi M chi_n and the
    /// kill term -dt P_chi G(phi*, chi*).
    Vec chi_step(const Vec& chi_prev, const Vec& phi_star, const Vec& chi_star,
                 double t_n) const;

    /// Monolithic (phi, mu, u) solve with the memory right-hand side
    /// hist_rhs = M * cq_history_rhs and reactions at (phi*, psi_new, chi_new).
    void coupled_phi_block(const Vec& hist_rhs_M, const Vec& phi_star, const Vec& psi_new,
                           const Vec& chi_new, Vec& phi, Vec& mu, Vec& u) const;

    /// Gauss-Seidel sweep [psi -> chi -> coupled block] iterated to fp_tol,
    /// starting from the previous time level; appends phi_n - phi_0 to the
    /// history on success.
    FieldState fixed_point_step(const FieldState& prev, History& history,
                                const CQWeights& w, int n) const;

    const Operators& ops() const { return ops_; }
    const Params& params() const { return params_; }
    double dt() const { return dt_; }

private:
    Vec reaction_load_f(const Vec& phi, const Vec& psi) const;
    Vec reaction_load_g(const Vec& phi, const Vec& chi) const;

    const Mesh& mesh_;
    Params params_;
    Schedules schedules_;
    SolverSettings settings_;
    double dt_ = 0.0;
    double dt_alpha_ = 0.0;

    Operators ops_;
    Vec boundary_ones_;            // B_psi * 1, carries the Neumann data
    std::vector<int> gpsi_nodes_;  // Dirichlet nodes for psi/chi
    std::vector<int> gu_dofs_;     // constrained displacement dofs

    DirichletSystem psi_sys_, chi_sys_;
    LinearBlock psi_solver_, chi_solver_;

    bool coupled_trivial_ = false;  // lambda == 0: u decouples to zero
    DirichletSystem coupled_sys_;
    LinearBlock coupled_solver_;    // lambda > 0 monolithic block
    LinearBlock phi_solver_;        // lambda == 0 SPD phi block

    DirichletSystem elast_sys_;
    LinearBlock elast_solver_;      // constrained E, for the t=0 solve
    LinearBlock mass_solver_;       // consistent-mass solves for mu recovery
};

}  // namespace subdiff
