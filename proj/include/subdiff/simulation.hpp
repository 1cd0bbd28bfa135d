#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "subdiff/config.hpp"
#include "subdiff/observables.hpp"
#include "subdiff/stepper.hpp"

namespace subdiff {

struct SimulationResult {
    Mesh mesh;
    TimeSeries series;
    std::vector<std::pair<int, FieldState>> snapshots;  // (step index, state)
    FieldState final_state;
    int max_fp_iters = 0;
};

// Builds the initial nodal tumour fraction for the configured variant.
Vec initial_phi(const Config& cfg, const Mesh& mesh);

// Advances the configured problem from t = 0 to t = T. The time series gets
// one record per time level (so T = 0 yields just the initial record) and
// snapshots are taken at the time levels nearest the configured times. If
// `log` is given, a memory estimate for the stored history is printed before
// stepping starts. Identical configs produce identical results.
SimulationResult run_simulation(const Config& cfg, std::ostream* log = nullptr);

}  // namespace subdiff
