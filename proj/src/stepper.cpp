#include "subdiff/stepper.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "subdiff/reactions.hpp"

namespace subdiff {

Operators build_operators(const Mesh& mesh, const Params& p) {
    Operators ops;
    ops.M = assemble_mass(mesh);
    ops.ML = lump_mass(ops.M);
    ops.K_mu = assemble_stiffness(mesh, [&p](double x, double y) { return p.M_phi(x, y); });
    ops.K_psi = assemble_stiffness(mesh, [&p](double x, double y) { return p.M_psi(x, y); });
    ops.K_chi = assemble_stiffness(mesh, [&p](double x, double y) { return p.M_chi(x, y); });
    ops.E = assemble_elasticity(mesh, p.G, p.nu);
    ops.D = assemble_divergence_coupling(mesh);
    ops.B_psi = assemble_boundary_mass(mesh, BoundaryTag::NeumannRest);
    return ops;
}

struct LinearBlock::Impl {
    SpMat A;
    std::string name;
    std::unique_ptr<Eigen::SimplicialLDLT<SpMat>> ldlt;
    std::unique_ptr<Eigen::SparseLU<SpMat>> lu;
    std::unique_ptr<Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper>> cg;
    std::unique_ptr<Eigen::BiCGSTAB<SpMat>> bicg;
};

void LinearBlock::factor(const SpMat& A, bool spd, SolverSettings::LinearSolver mode,
                         double lin_tol, std::string name) {
    impl_ = std::make_shared<Impl>();
    impl_->A = A;
    impl_->A.makeCompressed();
    impl_->name = std::move(name);

    const auto fail = [this](const char* what) {
        throw SolverError(impl_->name + ": factorisation failed (" + what + ")");
    };
    if (mode == SolverSettings::LinearSolver::Direct) {
        if (spd) {
            impl_->ldlt = std::make_unique<Eigen::SimplicialLDLT<SpMat>>();
            impl_->ldlt->compute(impl_->A);
            if (impl_->ldlt->info() != Eigen::Success) fail("LDLT");
        } else {
            impl_->lu = std::make_unique<Eigen::SparseLU<SpMat>>();
            impl_->lu->compute(impl_->A);
            if (impl_->lu->info() != Eigen::Success) fail("LU");
        }
    } else {
        if (spd) {
            impl_->cg = std::make_unique<
                Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper>>();
            impl_->cg->setTolerance(lin_tol);
            impl_->cg->setMaxIterations(8 * impl_->A.rows());
            impl_->cg->compute(impl_->A);
        } else {
            impl_->bicg = std::make_unique<Eigen::BiCGSTAB<SpMat>>();
            impl_->bicg->setTolerance(lin_tol);
            impl_->bicg->setMaxIterations(8 * impl_->A.rows());
            impl_->bicg->compute(impl_->A);
        }
    }
}

Vec LinearBlock::solve(const Vec& rhs) const {
    if (!impl_) throw SolverError("LinearBlock: solve before factor");
    if (impl_->ldlt) {
        Vec x = impl_->ldlt->solve(rhs);
        if (impl_->ldlt->info() != Eigen::Success)
            throw SolverError(impl_->name + ": LDLT solve failed");
        return x;
    }
    if (impl_->lu) {
        Vec x = impl_->lu->solve(rhs);
        if (impl_->lu->info() != Eigen::Success)
            throw SolverError(impl_->name + ": LU solve failed");
        return x;
    }
    const auto report = [this](double err) {
        std::ostringstream os;
        os << impl_->name << ": Krylov iteration did not converge, relative residual " << err;
        throw SolverError(os.str());
    };
    if (impl_->cg) {
        Vec x = impl_->cg->solve(rhs);
        if (impl_->cg->info() != Eigen::Success) report(impl_->cg->error());
        return x;
    }
    Vec x = impl_->bicg->solve(rhs);
    if (impl_->bicg->info() != Eigen::Success) report(impl_->bicg->error());
    return x;
}

namespace {

void add_block(std::vector<Triplet>& trips, const SpMat& A, int row_off, int col_off,
               double scale = 1.0) {
    for (int k = 0; k < A.outerSize(); ++k)
        for (SpMat::InnerIterator it(A, k); it; ++it)
            trips.emplace_back(static_cast<int>(it.row()) + row_off,
                               static_cast<int>(it.col()) + col_off, scale * it.value());
}

double relative_change(const Vec& now, const Vec& before) {
    constexpr double floor = 1e-14;
    return (now - before).norm() / std::max(now.norm(), floor);
}

}  // namespace

Stepper::Stepper(const Mesh& mesh, const Params& p, const Schedules& schedules,
                 const SolverSettings& settings, double dt)
    : mesh_(mesh), params_(p), schedules_(schedules), settings_(settings), dt_(dt) {
    if (!(dt > 0.0)) throw ConfigError("Stepper: dt must be > 0");
    const auto report = validate_params(p);
    if (!report.ok) {
        std::string msg = "Stepper: invalid parameters:";
        for (const auto& v : report.violations) msg += "\n  " + v;
        throw ConfigError(msg);
    }
    dt_alpha_ = std::pow(dt_, params_.alpha);
    ops_ = build_operators(mesh_, params_);
    boundary_ones_ = ops_.B_psi * Vec::Ones(mesh_.num_nodes());
    gpsi_nodes_ = boundary_nodes(mesh_, BoundaryTag::GammaPsi);

    const auto mode = settings_.linear_solver;
    const double tol = settings_.lin_tol;
    const int N = mesh_.num_nodes();

    {
        SpMat A = ops_.M + dt_ * ops_.K_psi;
        psi_sys_ = make_dirichlet_system(A, gpsi_nodes_);
        psi_solver_.factor(psi_sys_.A, /*spd=*/true, mode, tol, "psi block");
    }
    {
        SpMat A = (1.0 + dt_ * params_.N_chi) * ops_.M + dt_ * ops_.K_chi;
        chi_sys_ = make_dirichlet_system(A, gpsi_nodes_);
        chi_solver_.factor(chi_sys_.A, /*spd=*/true, mode, tol, "chi block");
    }

    for (int v : boundary_nodes(mesh_, BoundaryTag::GammaU)) {
        gu_dofs_.push_back(2 * v);
        gu_dofs_.push_back(2 * v + 1);
    }

    coupled_trivial_ = params_.lambda == 0.0;
    if (coupled_trivial_) {
        SpMat A = ops_.M + params_.c * dt_alpha_ * ops_.K_mu;
        phi_solver_.factor(A, /*spd=*/true, mode, tol, "phi block");
        return;
    }

    if (gu_dofs_.empty())
        throw ConfigError(
            "Stepper: lambda > 0 with empty Gamma_u leaves the elasticity system "
            "pure-Neumann and singular; constrain at least one boundary segment");

    elast_sys_ = make_dirichlet_system(ops_.E, gu_dofs_);
    elast_solver_.factor(elast_sys_.A, /*spd=*/true, mode, tol, "elasticity block");

    if (settings_.mass_lumping) {
        // Unknowns (phi, u): mu eliminated through mu = c phi + lambda ML^-1 D u.
        SpMat ml_inv_D = ops_.ML.cwiseInverse().asDiagonal() * ops_.D;
        SpMat Kmu_mlD = ops_.K_mu * ml_inv_D;
        SpMat Dt = SpMat(ops_.D.transpose());

        std::vector<Triplet> trips;
        SpMat Aphi = ops_.M + params_.c * dt_alpha_ * ops_.K_mu;
        add_block(trips, Aphi, 0, 0);
        add_block(trips, Kmu_mlD, 0, N, params_.lambda * dt_alpha_);
        add_block(trips, Dt, N, 0, params_.lambda);
        add_block(trips, ops_.E, N, N);
        SpMat A(3 * N, 3 * N);
        A.setFromTriplets(trips.begin(), trips.end());

        std::vector<int> bc;
        for (int d : gu_dofs_) bc.push_back(N + d);
        coupled_sys_ = make_dirichlet_system(A, bc);
        coupled_solver_.factor(coupled_sys_.A, /*spd=*/false, mode, tol, "coupled block");
    } else {
        // Unknowns (phi, mu, u) with the consistent mass matrix throughout.
        SpMat Dt = SpMat(ops_.D.transpose());
        std::vector<Triplet> trips;
        add_block(trips, ops_.M, 0, 0);
        add_block(trips, ops_.K_mu, 0, N, dt_alpha_);
        add_block(trips, ops_.M, N, 0, -params_.c);
        add_block(trips, ops_.M, N, N);
        add_block(trips, ops_.D, N, 2 * N, -params_.lambda);
        add_block(trips, Dt, 2 * N, 0, params_.lambda);
        add_block(trips, ops_.E, 2 * N, 2 * N);
        SpMat A(4 * N, 4 * N);
        A.setFromTriplets(trips.begin(), trips.end());

        std::vector<int> bc;
        for (int d : gu_dofs_) bc.push_back(2 * N + d);
        coupled_sys_ = make_dirichlet_system(A, bc);
        coupled_solver_.factor(coupled_sys_.A, /*spd=*/false, mode, tol, "coupled block");

        mass_solver_.factor(ops_.M, /*spd=*/true, mode, tol, "mass recovery");
    }
}

Vec Stepper::reaction_load_f(const Vec& phi, const Vec& psi) const {
    const double K = params_.K_psi;
    return assemble_nonlinear_load(
        mesh_, phi, psi, [K](double p, double s) { return monod_f_clamped(p, s, K); });
}

Vec Stepper::reaction_load_g(const Vec& phi, const Vec& chi) const {
    const double K = params_.K_chi;
    return assemble_nonlinear_load(
        mesh_, phi, chi, [K](double p, double c) { return monod_g_clamped(p, c, K); });
}

void Stepper::initial_elastic_solve(const Vec& phi0, Vec& u0, Vec& mu0) const {
    const int N = mesh_.num_nodes();
    if (params_.lambda == 0.0) {
        u0 = Vec::Zero(2 * N);
        mu0 = params_.c * phi0;
        return;
    }
    Vec rhs = -params_.lambda * (SpMat(ops_.D.transpose()) * phi0);
    rhs = elast_sys_.apply(rhs, Vec::Zero(static_cast<Eigen::Index>(elast_sys_.dofs.size())));
    u0 = elast_solver_.solve(rhs);
    if (settings_.mass_lumping) {
        mu0 = params_.c * phi0 +
              params_.lambda * (ops_.ML.cwiseInverse().asDiagonal() * (ops_.D * u0));
    } else {
        mu0 = mass_solver_.solve(params_.c * (ops_.M * phi0) + params_.lambda * (ops_.D * u0));
    }
}

Vec Stepper::psi_step(const Vec& psi_prev, const Vec& phi_star, const Vec& psi_star,
                      double t_n) const {
    Vec rhs = ops_.M * psi_prev - dt_ * params_.N_psi * reaction_load_f(phi_star, psi_star) +
              dt_ * schedules_.S_psi(t_n) * ops_.ML +
              dt_ * schedules_.psi_neumann(t_n) * boundary_ones_;
    const Vec vals = Vec::Constant(static_cast<Eigen::Index>(psi_sys_.dofs.size()),
                                   schedules_.psi_dirichlet(t_n));
    return psi_solver_.solve(psi_sys_.apply(rhs, vals));
}

Vec Stepper::chi_step(const Vec& chi_prev, const Vec& phi_star, const Vec& chi_star,
                      double t_n) const {
    Vec rhs = ops_.M * chi_prev - dt_ * params_.P_chi * reaction_load_g(phi_star, chi_star) +
              dt_ * schedules_.S_chi(t_n) * ops_.ML +
              dt_ * schedules_.chi_neumann(t_n) * boundary_ones_;
    const Vec vals = Vec::Constant(static_cast<Eigen::Index>(chi_sys_.dofs.size()),
                                   schedules_.chi_dirichlet(t_n));
    return chi_solver_.solve(chi_sys_.apply(rhs, vals));
}

void Stepper::coupled_phi_block(const Vec& hist_rhs_M, const Vec& phi_star,
                                const Vec& psi_new, const Vec& chi_new, Vec& phi, Vec& mu,
                                Vec& u) const {
    const int N = mesh_.num_nodes();
    Vec rhs_phi = hist_rhs_M +
                  dt_alpha_ * (params_.N_phi * reaction_load_f(phi_star, psi_new) -
                               params_.P_phi * reaction_load_g(phi_star, chi_new));
    if (coupled_trivial_) {
        phi = phi_solver_.solve(rhs_phi);
        u = Vec::Zero(2 * N);
        mu = params_.c * phi;
        return;
    }
    if (settings_.mass_lumping) {
        Vec rhs = Vec::Zero(3 * N);
        rhs.head(N) = rhs_phi;
        rhs = coupled_sys_.apply(rhs,
                                 Vec::Zero(static_cast<Eigen::Index>(coupled_sys_.dofs.size())));
        const Vec x = coupled_solver_.solve(rhs);
        phi = x.head(N);
        u = x.tail(2 * N);
        mu = params_.c * phi +
             params_.lambda * (ops_.ML.cwiseInverse().asDiagonal() * (ops_.D * u));
    } else {
        Vec rhs = Vec::Zero(4 * N);
        rhs.head(N) = rhs_phi;
        rhs = coupled_sys_.apply(rhs,
                                 Vec::Zero(static_cast<Eigen::Index>(coupled_sys_.dofs.size())));
        const Vec x = coupled_solver_.solve(rhs);
        phi = x.head(N);
        mu = x.segment(N, N);
        u = x.tail(2 * N);
    }
}

FieldState Stepper::fixed_point_step(const FieldState& prev, History& history,
                                     const CQWeights& w, int n) const {
    if (n < 1) throw std::invalid_argument("fixed_point_step: step index must be >= 1");
    const double t_n = n * dt_;
    const Vec hist_rhs_M = ops_.M * cq_history_rhs(w.b, history, n);

    Vec phi = prev.phi, mu = prev.mu, psi = prev.psi, chi = prev.chi, u = prev.u;
    double change = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= settings_.fp_max; ++it) {
        const Vec psi_new = psi_step(prev.psi, phi, psi, t_n);
        const Vec chi_new = chi_step(prev.chi, phi, chi, t_n);
        Vec phi_new, mu_new, u_new;
        coupled_phi_block(hist_rhs_M, phi, psi_new, chi_new, phi_new, mu_new, u_new);

        change = std::max({relative_change(phi_new, phi), relative_change(mu_new, mu),
                           relative_change(psi_new, psi), relative_change(chi_new, chi),
                           relative_change(u_new, u)});
        phi = phi_new;
        mu = mu_new;
        psi = psi_new;
        chi = chi_new;
        u = u_new;
        if (change <= settings_.fp_tol) {
            history.deltas.push_back(phi - history.phi0);
            FieldState next;
            next.t = t_n;
            next.phi = std::move(phi);
            next.mu = std::move(mu);
            next.psi = std::move(psi);
            next.chi = std::move(chi);
            next.u = std::move(u);
            next.fp_iters = it;
            return next;
        }
    }
    std::ostringstream os;
    os << "fixed_point_step: no convergence within " << settings_.fp_max
       << " iterations at step " << n << " (t = " << t_n << "), last relative change "
       << change;
    throw SolverError(os.str());
}

}  // namespace subdiff
