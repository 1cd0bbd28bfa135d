#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "subdiff/assembly.hpp"

using namespace subdiff;

namespace {

Vec nodal(const Mesh& m, const ScalarField& f) { return interpolate_nodal(f, m); }

Vec nodal_vector(const Mesh& m, const std::function<std::pair<double, double>(double, double)>& f) {
    Vec u(2 * m.num_nodes());
    for (int i = 0; i < m.num_nodes(); ++i) {
        const auto [ux, uy] = f(m.nodes[i].x, m.nodes[i].y);
        u[2 * i] = ux;
        u[2 * i + 1] = uy;
    }
    return u;
}

// Independent stiffness assembly: hat gradients recovered by solving the
// 3x3 Vandermonde system per triangle instead of the closed-form edge rule.
Eigen::MatrixXd stiffness_oracle(const Mesh& m, const ScalarField& coeff) {
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(m.num_nodes(), m.num_nodes());
    for (const auto& t : m.tris) {
        Eigen::Matrix3d V;
        for (int k = 0; k < 3; ++k)
            V.row(k) << 1.0, m.nodes[t.v[k]].x, m.nodes[t.v[k]].y;
        const Eigen::Matrix3d C = V.inverse();  // column k: coefficients of hat k
        const double area = triangle_area(m, t);
        const double cx = (m.nodes[t.v[0]].x + m.nodes[t.v[1]].x + m.nodes[t.v[2]].x) / 3.0;
        const double cy = (m.nodes[t.v[0]].y + m.nodes[t.v[1]].y + m.nodes[t.v[2]].y) / 3.0;
        const double a = coeff(cx, cy);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                K(t.v[i], t.v[j]) += a * area * (C(1, i) * C(1, j) + C(2, i) * C(2, j));
    }
    return K;
}

}  // namespace

TEST_SUITE("assembly") {

    TEST_CASE("mass matrix integrates the unit square") {
        const Mesh m = build_unit_square_mesh(5);
        const SpMat M = assemble_mass(m);
        const Vec ones = Vec::Ones(m.num_nodes());
        CHECK((M * ones).sum() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK((Eigen::MatrixXd(M) - Eigen::MatrixXd(M).transpose()).norm() <= 1e-15);

        // exact integral of a linear field
        const Vec x = nodal(m, [](double x_, double) { return x_; });
        CHECK(integrate_scalar(M, x) == doctest::Approx(0.5).epsilon(1e-14));
    }

    TEST_CASE("quadratic integration error shrinks with the mesh") {
        constexpr double pi = 3.14159265358979323846;
        const auto f = [](double x, double y) { return std::sin(pi * x) * std::sin(pi * y); };
        const double exact = 4.0 / (pi * pi);  // 0.4052847345693511
        double prev = 0.0;
        for (const int n : {8, 16, 32}) {
            const Mesh m = build_unit_square_mesh(n);
            const double approx = integrate_scalar(assemble_mass(m), nodal(m, f));
            const double err = std::abs(approx - exact);
            if (n > 8) CHECK(err < 0.3 * prev);  // ~O(h^2)
            prev = err;
        }
        CHECK(prev < 1e-3);
    }

    TEST_CASE("lumped mass equals row sums and stays positive") {
        const Mesh m = build_unit_square_mesh(6);
        const SpMat M = assemble_mass(m);
        const Vec ML = lump_mass(M);
        const Vec rows = M * Vec::Ones(m.num_nodes());
        CHECK((ML - rows).lpNorm<Eigen::Infinity>() <= 1e-16);
        CHECK(ML.minCoeff() > 0.0);
        CHECK(ML.sum() == doctest::Approx(1.0).epsilon(1e-14));

        SpMat bad(2, 2);
        std::vector<Triplet> trips{{0, 0, 1.0}, {1, 1, -1.0}};
        bad.setFromTriplets(trips.begin(), trips.end());
        CHECK_THROWS_AS(lump_mass(bad), std::runtime_error);
    }

    TEST_CASE("stiffness matches an independent Vandermonde oracle") {
        const Mesh m = build_unit_square_mesh(4);
        const ScalarField coeff = [](double x, double y) { return 1.0 + x + 2.0 * y; };
        const Eigen::MatrixXd K = Eigen::MatrixXd(assemble_stiffness(m, coeff));
        const Eigen::MatrixXd ref = stiffness_oracle(m, coeff);
        CHECK((K - ref).lpNorm<Eigen::Infinity>() <= 1e-13);
    }

    TEST_CASE("stiffness annihilates constants and reproduces Dirichlet energy") {
        const Mesh m = build_unit_square_mesh(7);
        const SpMat K = assemble_stiffness(m, 1.0);
        const Vec ones = Vec::Ones(m.num_nodes());
        CHECK((K * ones).lpNorm<Eigen::Infinity>() <= 1e-14);

        const Vec x = nodal(m, [](double x_, double) { return x_; });
        CHECK(x.dot(K * x) == doctest::Approx(1.0).epsilon(1e-13));  // int |grad x|^2

        CHECK_THROWS_AS(assemble_stiffness(m, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(assemble_stiffness(m, [](double, double) { return -1.0; }),
                        std::invalid_argument);
    }

    TEST_CASE("elasticity energies of linear fields are exact") {
        const Mesh m = build_unit_square_mesh(6);
        const double G = 0.4615, nu = 0.3;
        const SpMat E = assemble_elasticity(m, G, nu);
        const double kdiv = 2.0 * G * nu / (1.0 - 2.0 * nu);

        const Vec stretch = nodal_vector(m, [](double x, double) { return std::pair{x, 0.0}; });
        CHECK(stretch.dot(E * stretch) ==
              doctest::Approx(2.0 * G + kdiv).epsilon(1e-12));  // 1.61525

        const Vec shear = nodal_vector(m, [](double x, double y) { return std::pair{y, x}; });
        CHECK(shear.dot(E * shear) == doctest::Approx(4.0 * G).epsilon(1e-12));

        const Vec dilate = nodal_vector(m, [](double x, double y) { return std::pair{x, y}; });
        CHECK(dilate.dot(E * dilate) == doctest::Approx(4.0 * G + 4.0 * kdiv).epsilon(1e-12));

        const Vec rigid = nodal_vector(m, [](double x, double y) { return std::pair{y, -x}; });
        CHECK(std::abs(rigid.dot(E * rigid)) <= 1e-13);
        CHECK((E * rigid).lpNorm<Eigen::Infinity>() <= 1e-13);

        CHECK_THROWS_AS(assemble_elasticity(m, -1.0, 0.3), std::invalid_argument);
        CHECK_THROWS_AS(assemble_elasticity(m, 1.0, 0.5), std::invalid_argument);
    }

    TEST_CASE("divergence coupling integrates w div u exactly for P1 fields") {
        const Mesh m = build_unit_square_mesh(5);
        const SpMat D = assemble_divergence_coupling(m);
        REQUIRE(D.rows() == m.num_nodes());
        REQUIRE(D.cols() == 2 * m.num_nodes());

        const Vec u = nodal_vector(m, [](double x, double) { return std::pair{x, 0.0}; });
        const Vec ones = Vec::Ones(m.num_nodes());
        CHECK(ones.dot(D * u) == doctest::Approx(1.0).epsilon(1e-14));  // int div u = 1

        const Vec w = nodal(m, [](double x, double) { return x; });
        CHECK(w.dot(D * u) == doctest::Approx(0.5).epsilon(1e-14));  // int x * 1

        const Vec rigid = nodal_vector(m, [](double, double) { return std::pair{1.0, 0.0}; });
        CHECK((D * rigid).lpNorm<Eigen::Infinity>() <= 1e-15);
    }

    TEST_CASE("boundary mass measures the tagged perimeter") {
        const Mesh all = build_unit_square_mesh(8, Segment::Left, Segment::All);
        const SpMat B_all = assemble_boundary_mass(all, BoundaryTag::GammaPsi);
        const Vec ones = Vec::Ones(all.num_nodes());
        CHECK(ones.dot(B_all * ones) == doctest::Approx(4.0).epsilon(1e-13));

        // int_boundary x ds = 0 (left) + 1 (right) + 0.5 (top) + 0.5 (bottom)
        const Vec x = nodal(all, [](double x_, double) { return x_; });
        CHECK(x.dot(B_all * ones) == doctest::Approx(2.0).epsilon(1e-13));

        const Mesh part = build_unit_square_mesh(8, Segment::Left, Segment::Left);
        const SpMat B_rest = assemble_boundary_mass(part, BoundaryTag::NeumannRest);
        const Vec ones_p = Vec::Ones(part.num_nodes());
        CHECK(ones_p.dot(B_rest * ones_p) == doctest::Approx(3.0).epsilon(1e-13));

        // Left edge only: gamma_u covers length 1
        const SpMat B_gu = assemble_boundary_mass(part, BoundaryTag::GammaU);
        CHECK(ones_p.dot(B_gu * ones_p) == doctest::Approx(1.0).epsilon(1e-13));
    }

    TEST_CASE("nonlinear load is exact through quadratic integrands") {
        const Mesh m = build_unit_square_mesh(6);
        const SpMat M = assemble_mass(m);
        const Vec x = nodal(m, [](double x_, double) { return x_; });
        const Vec y = nodal(m, [](double, double y_) { return y_; });

        // fn(a,b) = a: load entries must coincide with M x (both exact)
        const Vec Fx = assemble_nonlinear_load(m, x, y, [](double a, double) { return a; });
        CHECK((Fx - M * x).lpNorm<Eigen::Infinity>() <= 1e-15);

        // fn(a,b) = 1: load entries are the lumped masses
        const Vec F1 = assemble_nonlinear_load(m, x, y, [](double, double) { return 1.0; });
        CHECK((F1 - lump_mass(M)).lpNorm<Eigen::Infinity>() <= 1e-15);

        // total of fn(a,b) = a*b integrates the quadratic x*y exactly
        const Vec Fxy = assemble_nonlinear_load(m, x, y, [](double a, double b) { return a * b; });
        CHECK(Fxy.sum() == doctest::Approx(0.25).epsilon(1e-13));

        CHECK_THROWS_AS(
            assemble_nonlinear_load(m, Vec::Ones(3), y, [](double, double) { return 1.0; }),
            std::invalid_argument);
    }

    TEST_CASE("nodal interpolation rejects non-finite data") {
        const Mesh m = build_unit_square_mesh(2);
        CHECK_THROWS_AS(nodal(m, [](double, double) { return std::nan(""); }),
                        std::invalid_argument);
        CHECK_THROWS_AS(integrate_scalar(assemble_mass(m), Vec::Ones(4)),
                        std::invalid_argument);
    }
}
