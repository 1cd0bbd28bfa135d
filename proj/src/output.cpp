#include "subdiff/output.hpp"

#include <cstdio>
#include <fstream>

namespace subdiff {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

void write_series_csv(const std::string& path, const TimeSeries& series) {
    auto out = open_for_write(path);
    out << "t,tumour_mass,nutrient_mass,chemo_mass,total_displacement,radius,fp_iters,"
           "phi_min,phi_max\n";
    for (const auto& r : series) {
        out << format_double(r.t) << ',' << format_double(r.tumour_mass) << ','
            << format_double(r.nutrient_mass) << ',' << format_double(r.chemo_mass) << ','
            << format_double(r.total_displacement) << ',' << format_double(r.radius) << ','
            << r.fp_iters << ',' << format_double(r.phi_min) << ',' << format_double(r.phi_max)
            << '\n';
    }
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

void write_snapshot(const std::string& path, const Mesh& mesh, const FieldState& state) {
    auto out = open_for_write(path);
    out << "# t=" << format_double(state.t) << '\n';
    for (int i = 0; i < mesh.num_nodes(); ++i) {
        out << format_double(mesh.nodes[i].x) << ' ' << format_double(mesh.nodes[i].y) << ' '
            << format_double(state.phi[i]) << ' ' << format_double(state.mu[i]) << ' '
            << format_double(state.u[2 * i]) << ' ' << format_double(state.u[2 * i + 1]) << ' '
            << format_double(state.psi[i]) << ' ' << format_double(state.chi[i]) << '\n';
    }
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

std::string labelled_path(const std::string& path, const std::string& label) {
    if (label.empty()) return path;
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "_" + label;
    return path.substr(0, dot) + "_" + label + path.substr(dot);
}

void write_run_outputs(const Config& cfg, const SimulationResult& result,
                       const std::string& label) {
    write_series_csv(labelled_path(cfg.output.series_path, label), result.series);
    for (const auto& [step, state] : result.snapshots) {
        std::string name = "snapshot_step" + std::to_string(step) + ".dat";
        if (!label.empty()) name = label + "_" + name;
        write_snapshot(cfg.output.snapshot_dir + "/" + name, result.mesh, state);
    }
}

}  // namespace subdiff
