#pragma once

#include <string>

#include "subdiff/observables.hpp"
#include "subdiff/simulation.hpp"

namespace subdiff {

// 17-significant-digit round-trippable formatting used by every writer.
std::string format_double(double v);

// Fixed schema, LF line endings:
// t,tumour_mass,nutrient_mass,chemo_mass,total_displacement,radius,fp_iters,phi_min,phi_max
void write_series_csv(const std::string& path, const TimeSeries& series);

// "# t=<time>" header, then one "x y phi mu ux uy psi chi" line per node in
// node-index order.
void write_snapshot(const std::string& path, const Mesh& mesh, const FieldState& state);

// Writes the series and the snapshot files for a finished run. A nonempty
// label is inserted into every file name so sweep runs cannot collide.
void write_run_outputs(const Config& cfg, const SimulationResult& result,
                       const std::string& label = "");

// Path helper: "dir/series.csv" + label "alpha0.5" -> "dir/series_alpha0.5.csv".
std::string labelled_path(const std::string& path, const std::string& label);

}  // namespace subdiff
