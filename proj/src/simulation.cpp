#include "subdiff/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include "subdiff/gl.hpp"
#include "subdiff/initial_conditions.hpp"

namespace subdiff {

Vec initial_phi(const Config& cfg, const Mesh& mesh) {
    switch (cfg.ic.variant) {
        case ICConfig::Variant::CircularPlateau:
            return interpolate_nodal(
                ic_circular_plateau(cfg.ic.a, cfg.ic.b, cfg.ic.center_x, cfg.ic.center_y), mesh);
        case ICConfig::Variant::TwoEllipses:
            return interpolate_nodal(ic_two_ellipses(cfg.ic.ellipse_a, cfg.ic.gamma, cfg.ic.c1_x,
                                                     cfg.ic.c1_y, cfg.ic.c2_x, cfg.ic.c2_y),
                                     mesh);
        case ICConfig::Variant::Irregular:
            return interpolate_nodal(ic_irregular(), mesh);
        case ICConfig::Variant::NodalFile:
            return ic_from_file(cfg.ic.path, mesh);
    }
    throw ConfigError("unknown initial-condition variant");
}

namespace {

Vec initial_psi(const Config& cfg, const Mesh& mesh) {
    if (cfg.ic.psi0_kind == ICConfig::Psi0::Equilibrium)
        return interpolate_nodal(ic_nutrient_equilibrium(), mesh);
    return Vec::Constant(mesh.num_nodes(), cfg.ic.psi0_value);
}

TimeRecord make_record(const Config& cfg, const Mesh& mesh, const SpMat& M,
                       const FieldState& s) {
    TimeRecord rec;
    rec.t = s.t;
    rec.tumour_mass = field_mass(M, s.phi);
    rec.nutrient_mass = field_mass(M, s.psi);
    rec.chemo_mass = field_mass(M, s.chi);
    rec.total_displacement = total_displacement(M, s.u);
    rec.radius = tumour_radius(mesh, s.phi, cfg.output.radius_center_x,
                               cfg.output.radius_center_y, cfg.output.radius_thresh);
    rec.fp_iters = s.fp_iters;
    rec.phi_min = s.phi.minCoeff();
    rec.phi_max = s.phi.maxCoeff();
    return rec;
}

}  // namespace

SimulationResult run_simulation(const Config& cfg, std::ostream* log) {
    validate_config(cfg);
    const int n_steps = cfg.num_steps();

    SimulationResult result;
    result.mesh = build_unit_square_mesh(cfg.n, cfg.gamma_u, cfg.gamma_psi);
    const Mesh& mesh = result.mesh;

    Stepper stepper(mesh, cfg.params, cfg.schedules, cfg.solver, cfg.dt);

    FieldState state;
    state.t = 0.0;
    state.phi = initial_phi(cfg, mesh);
    state.psi = initial_psi(cfg, mesh);
    state.chi = Vec::Constant(mesh.num_nodes(), cfg.ic.chi0_value);
    stepper.initial_elastic_solve(state.phi, state.u, state.mu);

    History history;
    history.phi0 = state.phi;
    history.deltas.reserve(n_steps);
    const CQWeights weights = make_cq_weights(cfg.params.alpha, cfg.dt, n_steps);

    if (log) {
        const double mib =
            static_cast<double>(n_steps) * mesh.num_nodes() * sizeof(double) / (1024.0 * 1024.0);
        *log << "history storage estimate: " << n_steps << " steps x " << mesh.num_nodes()
             << " nodes = " << mib << " MiB\n";
    }

    std::set<int> snapshot_steps;
    for (double t : cfg.output.snapshot_times) {
        const int idx = static_cast<int>(std::llround(t / cfg.dt));
        snapshot_steps.insert(std::clamp(idx, 0, n_steps));
    }

    const SpMat& M = stepper.ops().M;
    result.series.push_back(make_record(cfg, mesh, M, state));
    if (snapshot_steps.count(0)) result.snapshots.emplace_back(0, state);

    for (int n = 1; n <= n_steps; ++n) {
        try {
            state = stepper.fixed_point_step(state, history, weights, n);
        } catch (const SolverError& e) {
            std::ostringstream os;
            os << "step " << n << " of " << n_steps << " (t = " << n * cfg.dt
               << ") failed: " << e.what();
            throw SolverError(os.str());
        }
        result.max_fp_iters = std::max(result.max_fp_iters, state.fp_iters);
        result.series.push_back(make_record(cfg, mesh, M, state));
        if (snapshot_steps.count(n)) result.snapshots.emplace_back(n, state);
    }
    result.final_state = state;
    return result;
}

}  // namespace subdiff
