#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "subdiff/special.hpp"

using namespace subdiff;

TEST_SUITE("special") {

    TEST_CASE("kernel values") {
        CHECK(kernel_g(1.0, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(kernel_g(1.0, 7.0) == doctest::Approx(1.0).epsilon(1e-15));
        // 1/Gamma(0.5) = 1/sqrt(pi)
        CHECK(kernel_g(0.5, 1.0) == doctest::Approx(0.5641895835477563).epsilon(1e-14));
        // t^{-1/2}/sqrt(pi) at t = 4
        CHECK(kernel_g(0.5, 4.0) == doctest::Approx(0.28209479177387814).epsilon(1e-14));
        CHECK_THROWS_AS(kernel_g(0.5, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(kernel_g(0.5, -1.0), std::invalid_argument);
    }

    TEST_CASE("Mittag-Leffler closed forms") {
        // E_1(x) = exp(x)
        CHECK(mittag_leffler(1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));
        CHECK(mittag_leffler(1.0, -2.5) == doctest::Approx(std::exp(-2.5)).epsilon(1e-12));
        // E_2(x) = cosh(sqrt(x))
        CHECK(mittag_leffler(2.0, 1.0, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-13));
        // E_{1,2}(x) = (exp(x) - 1)/x
        CHECK(mittag_leffler(1.0, 2.0, 1.0) ==
              doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
        // E_{1/2}(-1) = exp(1) erfc(1), digits frozen from the closed form
        CHECK(mittag_leffler(0.5, -1.0) ==
              doctest::Approx(0.42758357615580705).epsilon(1e-13));
        // E_{a,b}(0) = 1/Gamma(b)
        CHECK(mittag_leffler(0.7, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("Mittag-Leffler guards its domain") {
        CHECK_THROWS_AS(mittag_leffler(0.5, 60.0), std::domain_error);
        CHECK_THROWS_AS(mittag_leffler(0.5, -60.0), std::domain_error);
        CHECK_THROWS_AS(mittag_leffler(0.5, 0.0, 1.0), std::invalid_argument);
    }

    TEST_CASE("Gauss-Legendre nodes and weights") {
        const auto [x, w] = gauss_legendre(3);
        REQUIRE(x.size() == 3);
        CHECK(x[0] == doctest::Approx(-std::sqrt(3.0 / 5.0)).epsilon(1e-14));
        CHECK(std::abs(x[1]) <= 1e-15);
        CHECK(w[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
        CHECK(w[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-14));

        // the 12-point rule integrates x^10 over [-1,1] exactly
        const auto [xs, ws] = gauss_legendre(12);
        double integral = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            integral += ws[i] * std::pow(xs[i], 10);
        CHECK(integral == doctest::Approx(2.0 / 11.0).epsilon(1e-13));
    }

    TEST_CASE("kernel semigroup identity g_{1-a} * g_a = 1") {
        for (const double alpha : {0.25, 0.5, 0.75}) {
            for (const double t : {0.1, 1.0, 5.0}) {
                CHECK(kernel_semigroup_check(alpha, t, 64) ==
                      doctest::Approx(1.0).epsilon(1e-10));
            }
        }
        CHECK(kernel_semigroup_check(1.0, 2.0, 8) == 1.0);
    }
}
