#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "subdiff/assembly.hpp"
#include "subdiff/initial_conditions.hpp"
#include "subdiff/observables.hpp"

using namespace subdiff;

TEST_SUITE("observe") {

    TEST_CASE("field mass is the exact P1 integral") {
        const Mesh m = build_unit_square_mesh(8);
        const SpMat M = assemble_mass(m);
        CHECK(field_mass(M, Vec::Constant(m.num_nodes(), 1.0)) ==
              doctest::Approx(1.0).epsilon(1e-14));
        CHECK(field_mass(M, Vec::Zero(m.num_nodes())) == doctest::Approx(0.0));
        const Vec x = interpolate_nodal([](double x_, double) { return x_; }, m);
        CHECK(field_mass(M, x) == doctest::Approx(0.5).epsilon(1e-14));
    }

    TEST_CASE("plateau mass matches the frozen radial quadrature value") {
        const Mesh m = build_unit_square_mesh(64);
        const SpMat M = assemble_mass(m);
        const Vec phi = interpolate_nodal(ic_circular_plateau(0.22, 0.05, 0.5, 0.5), m);
        CHECK(std::abs(field_mass(M, phi) - 0.07673093133668725) < 1e-3);
    }

    TEST_CASE("total displacement handles exact cases") {
        const Mesh m = build_unit_square_mesh(10);
        const SpMat M = assemble_mass(m);
        const int N = m.num_nodes();

        CHECK(total_displacement(M, Vec::Zero(2 * N)) == doctest::Approx(0.0));

        Vec unit = Vec::Zero(2 * N);
        for (int v = 0; v < N; ++v) unit[2 * v] = 1.0;
        CHECK(total_displacement(M, unit) == doctest::Approx(1.0).epsilon(1e-14));

        // u = (x, 0): |u| = x is linear, interpolation is exact
        Vec ux = Vec::Zero(2 * N);
        for (int v = 0; v < N; ++v) ux[2 * v] = m.nodes[static_cast<std::size_t>(v)].x;
        CHECK(total_displacement(M, ux) == doctest::Approx(0.5).epsilon(1e-14));

        CHECK_THROWS_AS(total_displacement(M, Vec::Zero(N)), std::invalid_argument);
    }

    TEST_CASE("tumour radius tracks the support of the field") {
        const Mesh m = build_unit_square_mesh(40);
        const int N = m.num_nodes();
        const double h = m.h();

        CHECK(tumour_radius(m, Vec::Zero(N), 0.5, 0.5, 1e-3) == 0.0);

        // indicator of the disk r <= 0.2
        Vec disk(N);
        for (int v = 0; v < N; ++v) {
            const auto& nd = m.nodes[static_cast<std::size_t>(v)];
            disk[v] = std::hypot(nd.x - 0.5, nd.y - 0.5) <= 0.2 ? 1.0 : 0.0;
        }
        CHECK(std::abs(tumour_radius(m, disk, 0.5, 0.5, 0.5) - 0.2) <= h);

        const Vec phi = interpolate_nodal(ic_circular_plateau(0.22, 0.05, 0.5, 0.5), m);
        const double r_small = tumour_radius(m, phi, 0.5, 0.5, 1e-6);
        const double r_half = tumour_radius(m, phi, 0.5, 0.5, 0.5);
        CHECK(std::abs(r_small - 0.22) <= h);
        CHECK(r_half < r_small);  // monotone in the threshold
        CHECK(r_half > 0.05);     // the flat core clears 0.5 everywhere

        CHECK_THROWS_AS(tumour_radius(m, phi, 0.5, 0.5, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(tumour_radius(m, Vec::Zero(N + 1), 0.5, 0.5, 0.1),
                        std::invalid_argument);
    }

    TEST_CASE("cross sections sample the interpolant along grid lines") {
        const Mesh m = build_unit_square_mesh(8);

        // constant field: every sample is the constant
        const auto flat =
            cross_section(m, Vec::Constant(m.num_nodes(), 2.5), Axis::X, 0.5);
        REQUIRE(flat.size() >= 9);
        for (const auto& s : flat) CHECK(s.value == doctest::Approx(2.5).epsilon(1e-14));
        for (std::size_t i = 1; i < flat.size(); ++i) CHECK(flat[i].s > flat[i - 1].s);
        CHECK(flat.front().s == doctest::Approx(0.0));
        CHECK(flat.back().s == doctest::Approx(1.0));

        // field = x along y = 0.5: value equals the free coordinate
        const Vec fx = interpolate_nodal([](double x, double) { return x; }, m);
        for (const auto& s : cross_section(m, fx, Axis::X, 0.5))
            CHECK(s.value == doctest::Approx(s.s).epsilon(1e-13));

        // same field cut along x = 0.3 (between grid lines): constant 0.3
        for (const auto& s : cross_section(m, fx, Axis::Y, 0.3))
            CHECK(s.value == doctest::Approx(0.3).epsilon(1e-13));

        // sections are linear in the field
        const Vec fy = interpolate_nodal([](double, double y) { return y * y; }, m);
        const auto a = cross_section(m, fx, Axis::X, 0.25);
        const auto b = cross_section(m, fy, Axis::X, 0.25);
        const auto ab = cross_section(m, Vec(fx + fy), Axis::X, 0.25);
        REQUIRE(a.size() == b.size());
        REQUIRE(a.size() == ab.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(ab[i].value ==
                  doctest::Approx(a[i].value + b[i].value).epsilon(1e-13));

        CHECK_THROWS_AS(cross_section(m, fx, Axis::X, -0.1), std::invalid_argument);
        CHECK_THROWS_AS(cross_section(m, fx, Axis::Y, 1.1), std::invalid_argument);
    }

    TEST_CASE("plateau profile along the midline is symmetric with a flat core") {
        const Mesh m = build_unit_square_mesh(40);
        const Vec phi = interpolate_nodal(ic_circular_plateau(0.22, 0.05, 0.5, 0.5), m);
        const auto prof = cross_section(m, phi, Axis::X, 0.5);
        REQUIRE(prof.size() >= 41);
        for (const auto& s : prof) {
            if (std::abs(s.s - 0.5) <= 0.05)
                CHECK(s.value == doctest::Approx(1.0).epsilon(1e-12));
            if (std::abs(s.s - 0.5) >= 0.25) CHECK(s.value == doctest::Approx(0.0));
        }
        // symmetry about x = 0.5 at the node positions
        for (int i = 0; i <= 40; ++i) {
            const double xl = i / 40.0, xr = 1.0 - xl;
            double vl = 0.0, vr = 0.0;
            for (const auto& s : prof) {
                if (std::abs(s.s - xl) < 1e-12) vl = s.value;
                if (std::abs(s.s - xr) < 1e-12) vr = s.value;
            }
            CHECK(vl == doctest::Approx(vr).epsilon(1e-12));
        }
    }
}
