#pragma once

#include <string>
#include <vector>

#include "subdiff/mesh.hpp"
#include "subdiff/params.hpp"
#include "subdiff/stepper.hpp"

namespace subdiff {

// Initial-data selection. Parameters are grouped per variant so switching the
// variant never silently reuses another variant's geometry.
struct ICConfig {
    enum class Variant { CircularPlateau, TwoEllipses, Irregular, NodalFile };
    Variant variant = Variant::CircularPlateau;

    // circular_plateau
    double a = 0.22;
    double b = 0.05;
    double center_x = 0.5;
    double center_y = 0.5;

    // two_ellipses
    double ellipse_a = 0.2;
    double gamma = 2.2360679774997896;  // sqrt(5)
    double c1_x = 0.5, c1_y = 0.6;
    double c2_x = 0.5, c2_y = 0.4;

    // nodal_file
    std::string path;

    enum class Psi0 { Constant, Equilibrium };
    Psi0 psi0_kind = Psi0::Constant;
    double psi0_value = 0.0;
    double chi0_value = 0.0;
};

struct OutputConfig {
    std::string series_path = "series.csv";
    std::vector<double> snapshot_times;
    std::string snapshot_dir = ".";
    double radius_center_x = 0.5;
    double radius_center_y = 0.5;
    double radius_thresh = 1e-3;
};

struct Config {
    int n = 0;           // required: mesh.n
    double dt = 0.0;     // required: time.dt
    double T = 0.0;      // required: time.T
    Params params;       // model.*; model.alpha is required
    ICConfig ic;
    Segment gamma_u = Segment::Left;
    Segment gamma_psi = Segment::None;
    Schedules schedules;
    SolverSettings solver;
    OutputConfig output;

    int num_steps() const;  // T/dt, validated to be integral
};

// Strict flat key=value parser with dotted section keys. Unknown keys, syntax
// errors (reported with line numbers) and invariant violations all raise
// ConfigError. After the file is read, environment variables of the form
// SUBDIFF_<SECTION>_<KEY> override the corresponding entry.
Config parse_config(const std::string& path);

// Applies a single "section.key=value" assignment; exposed for the env
// override pass and for tests.
void apply_config_entry(Config& cfg, const std::string& key, const std::string& value);

// Post-parse validation shared by parse_config and programmatic configs.
void validate_config(const Config& cfg);

}  // namespace subdiff
