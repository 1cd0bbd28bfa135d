#include "subdiff/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace subdiff {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a number, got '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("trailing characters in number '" + s + "'");
    if (!std::isfinite(v)) throw std::invalid_argument("number '" + s + "' is not finite");
    return v;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("trailing characters in integer '" + s + "'");
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw std::invalid_argument("integer '" + s + "' out of range");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "on" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "off" || s == "no") return false;
    throw std::invalid_argument("expected a boolean, got '" + s + "'");
}

Segment parse_segment(const std::string& s) {
    if (s == "none") return Segment::None;
    if (s == "left") return Segment::Left;
    if (s == "right") return Segment::Right;
    if (s == "bottom") return Segment::Bottom;
    if (s == "top") return Segment::Top;
    if (s == "all") return Segment::All;
    throw std::invalid_argument("expected one of none/left/right/bottom/top/all, got '" + s +
                                "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, sep)) out.push_back(trim(piece));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

// Either a bare number (constant schedule) or comma-separated
// "start:end:value" intervals, active on the half-open window (start, end].
Schedule parse_schedule(const std::string& s) {
    try {
        return Schedule::constant(parse_double(s));
    } catch (const std::invalid_argument&) {
    }
    std::vector<Interval> intervals;
    for (const auto& piece : split(s, ',')) {
        const auto parts = split(piece, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("expected start:end:value, got '" + piece + "'");
        intervals.push_back(
            {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])});
    }
    return make_schedule(std::move(intervals));
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    if (trim(s).empty()) return out;
    for (const auto& piece : split(s, ',')) out.push_back(parse_double(piece));
    return out;
}

MobilityProfile parse_profile(const std::string& s) {
    if (s == "constant") return MobilityProfile::Constant;
    if (s == "exp5y") return MobilityProfile::Exp5Y;
    throw std::invalid_argument("expected constant or exp5y, got '" + s + "'");
}

ICConfig::Variant parse_variant(const std::string& s) {
    if (s == "circular_plateau") return ICConfig::Variant::CircularPlateau;
    if (s == "two_ellipses") return ICConfig::Variant::TwoEllipses;
    if (s == "irregular") return ICConfig::Variant::Irregular;
    if (s == "nodal_file") return ICConfig::Variant::NodalFile;
    throw std::invalid_argument(
        "expected circular_plateau/two_ellipses/irregular/nodal_file, got '" + s + "'");
}

ICConfig::Psi0 parse_psi0(const std::string& s) {
    if (s == "constant") return ICConfig::Psi0::Constant;
    if (s == "equilibrium") return ICConfig::Psi0::Equilibrium;
    throw std::invalid_argument("expected constant or equilibrium, got '" + s + "'");
}

using Handler = std::function<void(Config&, const std::string&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"mesh.n", [](Config& c, const std::string& v) { c.n = parse_int(v); }},
        {"time.dt", [](Config& c, const std::string& v) { c.dt = parse_double(v); }},
        {"time.T", [](Config& c, const std::string& v) { c.T = parse_double(v); }},

        {"model.alpha", [](Config& c, const std::string& v) { c.params.alpha = parse_double(v); }},
        {"model.M_phi", [](Config& c, const std::string& v) { c.params.M_phi.base = parse_double(v); }},
        {"model.M_phi_profile", [](Config& c, const std::string& v) { c.params.M_phi.profile = parse_profile(v); }},
        {"model.M_psi", [](Config& c, const std::string& v) { c.params.M_psi.base = parse_double(v); }},
        {"model.M_psi_profile", [](Config& c, const std::string& v) { c.params.M_psi.profile = parse_profile(v); }},
        {"model.M_chi", [](Config& c, const std::string& v) { c.params.M_chi.base = parse_double(v); }},
        {"model.M_chi_profile", [](Config& c, const std::string& v) { c.params.M_chi.profile = parse_profile(v); }},
        {"model.N_phi", [](Config& c, const std::string& v) { c.params.N_phi = parse_double(v); }},
        {"model.K_psi", [](Config& c, const std::string& v) { c.params.K_psi = parse_double(v); }},
        {"model.P_phi", [](Config& c, const std::string& v) { c.params.P_phi = parse_double(v); }},
        {"model.c", [](Config& c, const std::string& v) { c.params.c = parse_double(v); }},
        {"model.lambda", [](Config& c, const std::string& v) { c.params.lambda = parse_double(v); }},
        {"model.G", [](Config& c, const std::string& v) { c.params.G = parse_double(v); }},
        {"model.nu", [](Config& c, const std::string& v) { c.params.nu = parse_double(v); }},
        {"model.N_psi", [](Config& c, const std::string& v) { c.params.N_psi = parse_double(v); }},
        {"model.N_chi", [](Config& c, const std::string& v) { c.params.N_chi = parse_double(v); }},
        {"model.P_chi", [](Config& c, const std::string& v) { c.params.P_chi = parse_double(v); }},
        {"model.K_chi", [](Config& c, const std::string& v) { c.params.K_chi = parse_double(v); }},

        {"ic.variant", [](Config& c, const std::string& v) { c.ic.variant = parse_variant(v); }},
        {"ic.a", [](Config& c, const std::string& v) { c.ic.a = parse_double(v); }},
        {"ic.b", [](Config& c, const std::string& v) { c.ic.b = parse_double(v); }},
        {"ic.center_x", [](Config& c, const std::string& v) { c.ic.center_x = parse_double(v); }},
        {"ic.center_y", [](Config& c, const std::string& v) { c.ic.center_y = parse_double(v); }},
        {"ic.ellipse_a", [](Config& c, const std::string& v) { c.ic.ellipse_a = parse_double(v); }},
        {"ic.gamma", [](Config& c, const std::string& v) { c.ic.gamma = parse_double(v); }},
        {"ic.c1_x", [](Config& c, const std::string& v) { c.ic.c1_x = parse_double(v); }},
        {"ic.c1_y", [](Config& c, const std::string& v) { c.ic.c1_y = parse_double(v); }},
        {"ic.c2_x", [](Config& c, const std::string& v) { c.ic.c2_x = parse_double(v); }},
        {"ic.c2_y", [](Config& c, const std::string& v) { c.ic.c2_y = parse_double(v); }},
        {"ic.path", [](Config& c, const std::string& v) { c.ic.path = v; }},
        {"ic.psi0_kind", [](Config& c, const std::string& v) { c.ic.psi0_kind = parse_psi0(v); }},
        {"ic.psi0_value", [](Config& c, const std::string& v) { c.ic.psi0_value = parse_double(v); }},
        {"ic.chi0_value", [](Config& c, const std::string& v) { c.ic.chi0_value = parse_double(v); }},

        {"bc.gamma_u", [](Config& c, const std::string& v) { c.gamma_u = parse_segment(v); }},
        {"bc.gamma_psi", [](Config& c, const std::string& v) { c.gamma_psi = parse_segment(v); }},
        {"bc.psi_dirichlet", [](Config& c, const std::string& v) { c.schedules.psi_dirichlet = parse_schedule(v); }},
        {"bc.chi_dirichlet", [](Config& c, const std::string& v) { c.schedules.chi_dirichlet = parse_schedule(v); }},
        {"bc.psi_neumann", [](Config& c, const std::string& v) { c.schedules.psi_neumann = parse_schedule(v); }},
        {"bc.chi_neumann", [](Config& c, const std::string& v) { c.schedules.chi_neumann = parse_schedule(v); }},

        {"sources.S_psi", [](Config& c, const std::string& v) { c.schedules.S_psi = parse_schedule(v); }},
        {"sources.S_chi", [](Config& c, const std::string& v) { c.schedules.S_chi = parse_schedule(v); }},

        {"solver.fp_tol", [](Config& c, const std::string& v) { c.solver.fp_tol = parse_double(v); }},
        {"solver.fp_max", [](Config& c, const std::string& v) { c.solver.fp_max = parse_int(v); }},
        {"solver.lin_tol", [](Config& c, const std::string& v) { c.solver.lin_tol = parse_double(v); }},
        {"solver.mass_lumping", [](Config& c, const std::string& v) { c.solver.mass_lumping = parse_bool(v); }},
        {"solver.linear_solver",
         [](Config& c, const std::string& v) {
             if (v == "direct")
                 c.solver.linear_solver = SolverSettings::LinearSolver::Direct;
             else if (v == "krylov")
                 c.solver.linear_solver = SolverSettings::LinearSolver::Krylov;
             else
                 throw std::invalid_argument("expected direct or krylov, got '" + v + "'");
         }},

        {"output.series_path", [](Config& c, const std::string& v) { c.output.series_path = v; }},
        {"output.snapshot_times", [](Config& c, const std::string& v) { c.output.snapshot_times = parse_double_list(v); }},
        {"output.snapshot_dir", [](Config& c, const std::string& v) { c.output.snapshot_dir = v; }},
        {"output.radius_center_x", [](Config& c, const std::string& v) { c.output.radius_center_x = parse_double(v); }},
        {"output.radius_center_y", [](Config& c, const std::string& v) { c.output.radius_center_y = parse_double(v); }},
        {"output.radius_thresh", [](Config& c, const std::string& v) { c.output.radius_thresh = parse_double(v); }},
    };
    return table;
}

std::string env_name_for(const std::string& key) {
    std::string name = "SUBDIFF_";
    for (char ch : key)
        name += ch == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return name;
}

}  // namespace

void apply_config_entry(Config& cfg, const std::string& key, const std::string& value) {
    const auto& table = handlers();
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown key '" + key + "'");
    try {
        it->second(cfg, value);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("key '" + key + "': " + e.what());
    }
}

int Config::num_steps() const {
    const double ratio = T / dt;
    const auto n = static_cast<long long>(std::llround(ratio));
    const double tol = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, ratio);
    if (std::abs(ratio - static_cast<double>(n)) > tol)
        throw ConfigError("time.T is not an integer multiple of time.dt (T/dt = " +
                          std::to_string(ratio) + ")");
    return static_cast<int>(n);
}

void validate_config(const Config& cfg) {
    if (cfg.n < 1) throw ConfigError("mesh.n must be >= 1");
    if (!(cfg.dt > 0.0)) throw ConfigError("time.dt must be > 0");
    if (cfg.T < 0.0) throw ConfigError("time.T must be >= 0");
    (void)cfg.num_steps();

    const auto report = validate_params(cfg.params);
    if (!report.ok) {
        std::string msg = "model parameters rejected:";
        for (const auto& v : report.violations) msg += "\n  " + v;
        throw ConfigError(msg);
    }

    if (!(cfg.solver.fp_tol > 0.0)) throw ConfigError("solver.fp_tol must be > 0");
    if (cfg.solver.fp_max < 1) throw ConfigError("solver.fp_max must be >= 1");
    if (!(cfg.solver.lin_tol > 0.0)) throw ConfigError("solver.lin_tol must be > 0");
    if (!(cfg.output.radius_thresh > 0.0)) throw ConfigError("output.radius_thresh must be > 0");

    switch (cfg.ic.variant) {
        case ICConfig::Variant::CircularPlateau:
            if (!(cfg.ic.a > 0.0) || cfg.ic.b < 0.0 || cfg.ic.b >= cfg.ic.a)
                throw ConfigError("circular_plateau needs 0 <= ic.b < ic.a");
            break;
        case ICConfig::Variant::TwoEllipses:
            if (!(cfg.ic.ellipse_a > 0.0) || !(cfg.ic.gamma > 0.0))
                throw ConfigError("two_ellipses needs ic.ellipse_a > 0 and ic.gamma > 0");
            break;
        case ICConfig::Variant::NodalFile:
            if (cfg.ic.path.empty()) throw ConfigError("nodal_file needs ic.path");
            break;
        case ICConfig::Variant::Irregular:
            break;
    }

    for (double t : cfg.output.snapshot_times)
        if (t < 0.0 || t > cfg.T + 1e-9)
            throw ConfigError("output.snapshot_times entry " + std::to_string(t) +
                              " lies outside [0, T]");
}

Config parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");

    Config cfg;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected key = value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        try {
            apply_config_entry(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        seen.insert(key);
    }

    for (const auto& [key, handler] : handlers()) {
        (void)handler;
        if (const char* env = std::getenv(env_name_for(key).c_str())) {
            try {
                apply_config_entry(cfg, key, env);
            } catch (const ConfigError& e) {
                throw ConfigError("environment override " + env_name_for(key) + ": " + e.what());
            }
            seen.insert(key);
        }
    }

    for (const char* required : {"mesh.n", "time.dt", "time.T", "model.alpha"})
        if (!seen.count(required))
            throw ConfigError(path + ": missing required key '" + std::string(required) + "'");

    validate_config(cfg);
    return cfg;
}

}  // namespace subdiff
