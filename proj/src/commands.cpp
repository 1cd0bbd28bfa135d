#include "subdiff/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include "subdiff/config.hpp"
#include "subdiff/output.hpp"
#include "subdiff/simulation.hpp"
#include "subdiff/verify.hpp"

namespace subdiff {

namespace {

void print_summary(const SimulationResult& result, const std::string& label) {
    const auto& last = result.series.back();
    if (!label.empty()) std::cout << label << ": ";
    std::cout << "t=" << format_double(last.t) << " tumour_mass=" << format_double(last.tumour_mass)
              << " nutrient_mass=" << format_double(last.nutrient_mass)
              << " chemo_mass=" << format_double(last.chemo_mass)
              << " radius=" << format_double(last.radius)
              << " max_fp_iters=" << result.max_fp_iters << "\n";
}

std::string alpha_label(double alpha) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "alpha%g", alpha);
    return buf;
}

}  // namespace

int cmd_run(const std::string& config_path) {
    try {
        const Config cfg = parse_config(config_path);
        const SimulationResult result = run_simulation(cfg, &std::cout);
        write_run_outputs(cfg, result);
        print_summary(result, "");
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_sweep_alpha(const std::string& config_path, const std::vector<double>& alphas) {
    if (alphas.empty()) {
        std::cerr << "config error: sweep-alpha needs at least one alpha\n";
        return 1;
    }
    Config base;
    try {
        base = parse_config(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    struct Outcome {
        int code = 0;
        std::string message;
        SimulationResult result;
    };
    std::vector<Outcome> outcomes(alphas.size());

    const auto worker = [&](std::size_t i) {
        Config cfg = base;
        cfg.params.alpha = alphas[i];
        try {
            validate_config(cfg);
            outcomes[i].result = run_simulation(cfg);
            write_run_outputs(cfg, outcomes[i].result, alpha_label(alphas[i]));
        } catch (const ConfigError& e) {
            outcomes[i] = {1, e.what(), {}};
        } catch (const SolverError& e) {
            outcomes[i] = {2, e.what(), {}};
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(alphas.size(), std::max(1u, std::thread::hardware_concurrency()));
    for (std::size_t begin = 0; begin < alphas.size(); begin += workers) {
        std::vector<std::thread> pool;
        for (std::size_t i = begin; i < std::min(begin + workers, alphas.size()); ++i)
            pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    int exit_code = 0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (outcomes[i].code == 0) {
            print_summary(outcomes[i].result, alpha_label(alphas[i]));
        } else {
            std::cerr << alpha_label(alphas[i]) << ": "
                      << (outcomes[i].code == 1 ? "config error: " : "solver error: ")
                      << outcomes[i].message << "\n";
            exit_code = std::max(exit_code, outcomes[i].code);
        }
    }
    if (exit_code != 0) return exit_code;

    // Combined radius table: one row per time level, one column per alpha.
    const std::string table_path = labelled_path(base.output.series_path, "radius_table");
    std::ofstream out(table_path, std::ios::binary);
    if (!out) {
        std::cerr << "config error: cannot open '" << table_path << "' for writing\n";
        return 1;
    }
    out << "t";
    for (double a : alphas) out << ",R_" << alpha_label(a);
    out << "\n";
    const auto& grid = outcomes.front().result.series;
    for (std::size_t row = 0; row < grid.size(); ++row) {
        out << format_double(grid[row].t);
        for (const auto& o : outcomes) out << ',' << format_double(o.result.series[row].radius);
        out << "\n";
    }
    std::cout << "radius table written to " << table_path << "\n";
    return 0;
}

int cmd_verify() {
    const auto results = run_verification({}, &std::cout);
    int gated = 0, passed = 0;
    for (const auto& r : results) {
        if (!r.gated) continue;
        ++gated;
        passed += r.pass ? 1 : 0;
    }
    std::cout << "verification: " << passed << "/" << gated << " gated criteria passed\n";
    return verification_passed(results) ? 0 : 3;
}

}  // namespace subdiff
