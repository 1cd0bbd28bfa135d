#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "subdiff/fode.hpp"
#include "subdiff/special.hpp"
#include "subdiff/types.hpp"

using namespace subdiff;

namespace {

MultiOrderSystem scalar_system(double alpha, double x0,
                               std::function<double(double, double)> f, double L) {
    MultiOrderSystem sys;
    sys.alphas = {alpha};
    sys.X0 = Vec::Constant(1, x0);
    sys.F = [f](double t, const Vec& x) { return Vec::Constant(1, f(t, x[0])); };
    sys.L_F = L;
    return sys;
}

}  // namespace

TEST_SUITE("fode") {

    TEST_CASE("volterra weights: closed forms and telescoping row sums") {
        // alpha = 1: the kernel is 1, every weight is just dt
        const auto w1 = volterra_weights(1.0, 0.125, 16);
        REQUIRE(w1.size() == 16);
        for (double w : w1) CHECK(w == doctest::Approx(0.125).epsilon(1e-15));

        // alpha = 1/2, dt = 1, lag 1: (1 - 0)/Gamma(3/2) = 2/sqrt(pi)
        const auto wh = volterra_weights(0.5, 1.0, 8);
        CHECK(wh[0] == doctest::Approx(1.1283791670955126).epsilon(1e-15));

        // nonnegative, decreasing in the lag, and row sums telescope to
        // t_i^alpha / Gamma(alpha+1)
        for (double alpha : {0.3, 0.5, 0.9}) {
            const double dt = 0.05;
            const auto w = volterra_weights(alpha, dt, 200);
            double run = 0.0;
            for (int m = 1; m <= 200; ++m) {
                CHECK(w[m - 1] > 0.0);
                if (m > 1) CHECK(w[m - 1] <= w[m - 2]);
                run += w[m - 1];
                const double expect =
                    std::pow(m * dt, alpha) / std::tgamma(alpha + 1.0);
                CHECK(run == doctest::Approx(expect).epsilon(1e-13));
            }
        }

        CHECK_THROWS_AS(volterra_weights(0.0, 0.1, 4), std::invalid_argument);
        CHECK_THROWS_AS(volterra_weights(1.2, 0.1, 4), std::invalid_argument);
        CHECK_THROWS_AS(volterra_weights(0.5, 0.0, 4), std::invalid_argument);
    }

    TEST_CASE("zero right-hand side keeps the trajectory constant") {
        auto sys = scalar_system(0.4, 3.25, [](double, double) { return 0.0; }, 0.0);
        const auto pic = picard_solve(sys, 2.0, 64, 1e-14, 200);
        const auto cq = cq_solve(sys, 2.0, 64);
        REQUIRE(pic.size() == 65);
        REQUIRE(cq.size() == 65);
        for (int i = 0; i <= 64; ++i) {
            CHECK(pic[i][0] == doctest::Approx(3.25).epsilon(1e-14));
            CHECK(cq[i][0] == doctest::Approx(3.25).epsilon(1e-14));
        }
        const auto rep = cross_check_cq(sys, 2.0, 64);
        CHECK(rep.max_discrepancy == doctest::Approx(0.0));
    }

    TEST_CASE("linear decay at alpha = 1/2 reproduces the Mittag-Leffler value") {
        auto sys = scalar_system(0.5, 1.0, [](double, double x) { return -x; }, 1.0);
        const int N = 2000;
        const auto pic = picard_solve(sys, 1.0, N, 1e-12, 4000);
        const auto cq = cq_solve(sys, 1.0, N);
        // E_{1/2}(-1) = exp(1) erfc(1)
        const double exact = 0.42758357615580705;
        CHECK(std::abs(pic[N][0] - exact) < 5e-3);
        CHECK(std::abs(cq[N][0] - exact) < 5e-3);
        CHECK(mittag_leffler(0.5, -1.0) == doctest::Approx(exact).epsilon(1e-13));
    }

    TEST_CASE("constant forcing integrates to X0 + c t^alpha / Gamma(alpha+1)") {
        const double alpha = 0.6, c = 2.0, T = 1.0;
        auto sys = scalar_system(alpha, 0.5, [c](double, double) { return c; }, 0.0);
        auto err = [&](int N) {
            const auto tr = cq_solve(sys, T, N);
            const double exact = 0.5 + c * std::pow(T, alpha) / std::tgamma(alpha + 1.0);
            return std::abs(tr[N][0] - exact);
        };
        const double e40 = err(40), e80 = err(80);
        CHECK(e40 < 2e-2);
        CHECK(e80 < 0.65 * e40);  // first order in dt
    }

    TEST_CASE("alpha = 1 CQ solve is backward Euler exactly") {
        auto sys = scalar_system(1.0, 1.0, [](double, double x) { return -x; }, 1.0);
        const int N = 100;
        const auto tr = cq_solve(sys, 1.0, N, 1e-14, 400);
        const double dt = 1.0 / N;
        double ref = 1.0;
        for (int n = 0; n < N; ++n) ref /= 1.0 + dt;
        CHECK(tr[N][0] == doctest::Approx(ref).epsilon(1e-10));
    }

    TEST_CASE("alpha = 1 Picard recovers exp(-t) with midpoint accuracy") {
        auto sys = scalar_system(1.0, 1.0, [](double, double x) { return -x; }, 1.0);
        const int N = 1000;
        const auto tr = picard_solve(sys, 1.0, N, 1e-13, 4000);
        CHECK(std::abs(tr[N][0] - std::exp(-1.0)) < 1e-5);
    }

    TEST_CASE("two-component mixed orders cross-check") {
        MultiOrderSystem sys;
        sys.alphas = {0.5, 1.0};
        sys.X0 = Vec::Zero(2);
        sys.X0 << 1.0, 1.0;
        sys.F = [](double, const Vec& x) {
            Vec out(2);
            out << -x[0], -x[1];
            return out;
        };
        sys.L_F = 1.0;
        const auto rep = cross_check_cq(sys, 1.0, 400);
        CHECK(rep.max_discrepancy < 2e-2);
        // the integer-order component is plain exponential decay
        CHECK(std::abs(rep.picard.back()[1] - std::exp(-1.0)) < 1e-3);
        CHECK(std::abs(rep.cq.back()[1] - std::exp(-1.0)) < 1e-2);
    }

    TEST_CASE("invalid systems and grids are rejected") {
        MultiOrderSystem bad;
        bad.alphas = {0.5, 0.5};
        bad.X0 = Vec::Zero(1);  // size mismatch
        bad.F = [](double, const Vec& x) { return x; };
        CHECK_THROWS_AS(picard_solve(bad, 1.0, 10, 1e-8, 100), std::invalid_argument);
        CHECK_THROWS_AS(cq_solve(bad, 1.0, 10), std::invalid_argument);

        auto sys = scalar_system(1.5, 1.0, [](double, double) { return 0.0; }, 0.0);
        CHECK_THROWS_AS(cq_solve(sys, 1.0, 10), std::invalid_argument);

        auto ok = scalar_system(0.5, 1.0, [](double, double) { return 0.0; }, 0.0);
        CHECK_THROWS_AS(cq_solve(ok, 1.0, 0), std::invalid_argument);
        CHECK_THROWS_AS(picard_solve(ok, 1.0, -3, 1e-8, 100), std::invalid_argument);
    }
}
