#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "subdiff/config.hpp"

using namespace subdiff;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& body) : path(name) {
        std::ofstream out(path);
        out << body;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const std::string kMinimal =
    "mesh.n = 8\n"
    "time.dt = 0.1\n"
    "time.T = 1.0\n"
    "model.alpha = 0.5\n";

}  // namespace

TEST_SUITE("config") {

    TEST_CASE("minimal file parses with defaults intact") {
        TempFile f("cfg_minimal.cfg", kMinimal);
        const Config cfg = parse_config(f.path);
        CHECK(cfg.n == 8);
        CHECK(cfg.dt == doctest::Approx(0.1));
        CHECK(cfg.T == doctest::Approx(1.0));
        CHECK(cfg.params.alpha == doctest::Approx(0.5));
        CHECK(cfg.num_steps() == 10);
        // untouched defaults
        CHECK(cfg.params.c == doctest::Approx(0.4));
        CHECK(cfg.params.G == doctest::Approx(0.4615));
        CHECK(cfg.gamma_u == Segment::Left);
        CHECK(cfg.gamma_psi == Segment::None);
        CHECK(cfg.solver.fp_tol == doctest::Approx(1e-6));
        CHECK(cfg.solver.mass_lumping);
        CHECK(cfg.output.series_path == "series.csv");
        CHECK(cfg.ic.variant == ICConfig::Variant::CircularPlateau);
    }

    TEST_CASE("comments, blank lines and full sections parse") {
        TempFile f("cfg_full.cfg", kMinimal +
                                       "# a comment line\n"
                                       "\n"
                                       "model.lambda = 0.004   # trailing comment\n"
                                       "model.M_phi_profile = exp5y\n"
                                       "bc.gamma_u = bottom\n"
                                       "bc.gamma_psi = all\n"
                                       "bc.psi_dirichlet = 1.0:3.0:2.5, 4.0:5.0:1.0\n"
                                       "sources.S_psi = 0.5\n"
                                       "ic.variant = two_ellipses\n"
                                       "ic.psi0_kind = equilibrium\n"
                                       "solver.linear_solver = krylov\n"
                                       "solver.mass_lumping = false\n"
                                       "output.snapshot_times = 0.0, 0.5, 1.0\n");
        const Config cfg = parse_config(f.path);
        CHECK(cfg.params.lambda == doctest::Approx(0.004));
        CHECK(cfg.params.M_phi.profile == MobilityProfile::Exp5Y);
        CHECK(cfg.gamma_u == Segment::Bottom);
        CHECK(cfg.gamma_psi == Segment::All);
        CHECK(cfg.schedules.psi_dirichlet(2.0) == doctest::Approx(2.5));
        CHECK(cfg.schedules.psi_dirichlet(3.5) == doctest::Approx(0.0));
        CHECK(cfg.schedules.psi_dirichlet(4.5) == doctest::Approx(1.0));
        CHECK(cfg.schedules.S_psi(10.0) == doctest::Approx(0.5));
        CHECK(cfg.ic.variant == ICConfig::Variant::TwoEllipses);
        CHECK(cfg.ic.psi0_kind == ICConfig::Psi0::Equilibrium);
        CHECK(cfg.solver.linear_solver == SolverSettings::LinearSolver::Krylov);
        CHECK_FALSE(cfg.solver.mass_lumping);
        REQUIRE(cfg.output.snapshot_times.size() == 3);
        CHECK(cfg.output.snapshot_times[1] == doctest::Approx(0.5));
    }

    TEST_CASE("unknown keys and syntax errors name the line") {
        {
            TempFile f("cfg_unknown.cfg", kMinimal + "model.zeta = 3\n");
            try {
                parse_config(f.path);
                FAIL("expected ConfigError");
            } catch (const ConfigError& e) {
                const std::string msg = e.what();
                CHECK(msg.find("model.zeta") != std::string::npos);
                CHECK(msg.find(":5:") != std::string::npos);
            }
        }
        {
            TempFile f("cfg_noeq.cfg", kMinimal + "just some words\n");
            try {
                parse_config(f.path);
                FAIL("expected ConfigError");
            } catch (const ConfigError& e) {
                CHECK(std::string(e.what()).find(":5:") != std::string::npos);
            }
        }
        {
            // repeated keys are not an error: the later assignment wins, which
            // is also what the environment override pass relies on
            TempFile f("cfg_dup.cfg", kMinimal + "mesh.n = 9\n");
            CHECK(parse_config(f.path).n == 9);
        }
        {
            TempFile f("cfg_badnum.cfg", kMinimal + "model.c = fast\n");
            CHECK_THROWS_AS(parse_config(f.path), ConfigError);
        }
        CHECK_THROWS_AS(parse_config("no_such_file.cfg"), ConfigError);
    }

    TEST_CASE("each required key is enforced") {
        const std::string lines[] = {"mesh.n = 8\n", "time.dt = 0.1\n", "time.T = 1.0\n",
                                     "model.alpha = 0.5\n"};
        for (int skip = 0; skip < 4; ++skip) {
            std::string body;
            for (int i = 0; i < 4; ++i)
                if (i != skip) body += lines[i];
            TempFile f("cfg_missing.cfg", body);
            CHECK_THROWS_AS(parse_config(f.path), ConfigError);
        }
    }

    TEST_CASE("invariant violations surface as ConfigError") {
        {
            TempFile f("cfg_nu.cfg", kMinimal + "model.nu = 0.5\n");
            try {
                parse_config(f.path);
                FAIL("expected ConfigError");
            } catch (const ConfigError& e) {
                CHECK(std::string(e.what()).find("A4") != std::string::npos);
            }
        }
        {
            TempFile f("cfg_gate.cfg", kMinimal + "model.c = 1e-7\nmodel.lambda = 0.01\n");
            try {
                parse_config(f.path);
                FAIL("expected ConfigError");
            } catch (const ConfigError& e) {
                CHECK(std::string(e.what()).find("A5") != std::string::npos);
            }
        }
        {
            TempFile f("cfg_grid.cfg",
                       "mesh.n = 8\ntime.dt = 0.3\ntime.T = 1.0\nmodel.alpha = 0.5\n");
            CHECK_THROWS_AS(parse_config(f.path), ConfigError);  // T/dt not integral
        }
        {
            TempFile f("cfg_alpha.cfg",
                       "mesh.n = 8\ntime.dt = 0.1\ntime.T = 1.0\nmodel.alpha = 1.5\n");
            CHECK_THROWS_AS(parse_config(f.path), ConfigError);
        }
        {
            TempFile f("cfg_snap.cfg", kMinimal + "output.snapshot_times = 2.0\n");
            CHECK_THROWS_AS(parse_config(f.path), ConfigError);  // beyond T
        }
        {
            TempFile f("cfg_icfile.cfg", kMinimal + "ic.variant = nodal_file\n");
            CHECK_THROWS_AS(parse_config(f.path), ConfigError);  // missing ic.path
        }
    }

    TEST_CASE("environment variables override file entries") {
        TempFile f("cfg_env.cfg", kMinimal);
        setenv("SUBDIFF_MODEL_ALPHA", "0.75", 1);
        setenv("SUBDIFF_MESH_N", "16", 1);
        const Config cfg = parse_config(f.path);
        unsetenv("SUBDIFF_MODEL_ALPHA");
        unsetenv("SUBDIFF_MESH_N");
        CHECK(cfg.params.alpha == doctest::Approx(0.75));
        CHECK(cfg.n == 16);
    }

    TEST_CASE("environment variables can supply a missing required key") {
        TempFile f("cfg_env2.cfg", "mesh.n = 8\ntime.dt = 0.1\ntime.T = 1.0\n");
        setenv("SUBDIFF_MODEL_ALPHA", "0.6", 1);
        const Config cfg = parse_config(f.path);
        unsetenv("SUBDIFF_MODEL_ALPHA");
        CHECK(cfg.params.alpha == doctest::Approx(0.6));
    }

    TEST_CASE("a bad environment value is a ConfigError, not a crash") {
        TempFile f("cfg_env3.cfg", kMinimal);
        setenv("SUBDIFF_TIME_DT", "soon", 1);
        CHECK_THROWS_AS(parse_config(f.path), ConfigError);
        unsetenv("SUBDIFF_TIME_DT");
    }

    TEST_CASE("apply_config_entry handles single assignments") {
        Config cfg;
        apply_config_entry(cfg, "mesh.n", "32");
        CHECK(cfg.n == 32);
        apply_config_entry(cfg, "model.K_psi", "3.5");
        CHECK(cfg.params.K_psi == doctest::Approx(3.5));
        apply_config_entry(cfg, "bc.psi_neumann", "0.25");
        CHECK(cfg.schedules.psi_neumann(1.0) == doctest::Approx(0.25));
        CHECK_THROWS_AS(apply_config_entry(cfg, "nonsense", "1"), ConfigError);
        CHECK_THROWS_AS(apply_config_entry(cfg, "mesh.n", "eight"), ConfigError);
    }

    TEST_CASE("num_steps rounds robustly and rejects misfits") {
        Config cfg;
        cfg.n = 4;
        cfg.params.alpha = 1.0;
        cfg.dt = 0.1;
        cfg.T = 15.0;  // 15/0.1 = 149.99999999999997 in floating point
        CHECK(cfg.num_steps() == 150);
        cfg.T = 0.0;
        CHECK(cfg.num_steps() == 0);
        cfg.T = 1.05;
        CHECK_THROWS_AS(cfg.num_steps(), ConfigError);
    }
}
