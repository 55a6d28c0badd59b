#include "doctest.h"

#include "memchan/numeric.hpp"

#include <cmath>

using memchan::find_root_brent;
using memchan::integrate_adaptive;
using memchan::solve_decreasing_for_target;

TEST_CASE("quadrature: polynomials are exact") {
    auto cubic = [](double x) { return 3.0 * x * x * x - x + 2.0; };
    // antiderivative 3/4 x^4 - x^2/2 + 2x over [-1, 2]
    const double exact = (0.75 * 16 - 2.0 + 4.0) - (0.75 - 0.5 - 2.0);
    CHECK(integrate_adaptive(cubic, -1.0, 2.0, 1e-12) == doctest::Approx(exact).epsilon(1e-13));
}

TEST_CASE("quadrature: smooth transcendental") {
    const double pi = 3.14159265358979323846;
    auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
    // int_0^pi e^-x sin(3x) dx = 3(1 + e^-pi)/10
    const double exact = 0.3 * (1.0 + std::exp(-pi));
    CHECK(integrate_adaptive(f, 0.0, pi, 1e-12) == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("quadrature: kink handled by subdivision") {
    auto f = [](double x) { return std::fabs(x - 0.3); };
    const double exact = 0.5 * (0.3 * 0.3 + 0.7 * 0.7);
    CHECK(integrate_adaptive(f, -0.0, 1.0, 1e-10) == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("quadrature: reversed interval flips sign") {
    auto f = [](double x) { return x * x; };
    const double fw = integrate_adaptive(f, 0.0, 1.0, 1e-12);
    const double bw = integrate_adaptive(f, 1.0, 0.0, 1e-12);
    CHECK(fw == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(bw == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("quadrature: empty interval") {
    auto f = [](double x) { return 1.0 / x; };
    CHECK(integrate_adaptive(f, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("root: brent finds simple roots") {
    auto f = [](double x) { return x * x - 2.0; };
    CHECK(find_root_brent(f, 0.0, 2.0, 1e-14) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    auto c = [](double x) { return std::cos(x) - x; };
    const double r = find_root_brent(c, 0.0, 1.0, 1e-14);
    CHECK(std::fabs(std::cos(r) - r) < 1e-13);
}

TEST_CASE("root: endpoint roots are returned as-is") {
    auto f = [](double x) { return x - 1.0; };
    CHECK(find_root_brent(f, 1.0, 3.0, 1e-14) == doctest::Approx(1.0));
    CHECK(find_root_brent(f, -1.0, 1.0, 1e-14) == doctest::Approx(1.0));
}

TEST_CASE("root: no sign change throws") {
    auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(find_root_brent(f, -1.0, 1.0, 1e-12), std::invalid_argument);
}

TEST_CASE("lagrange solve: recovers known multiplier") {
    // budget(L) = 3/L is strictly decreasing; target 0.5 -> L = 6
    auto budget = [](double L) { return 3.0 / L; };
    const double L = solve_decreasing_for_target(budget, 0.5, 1.0, 1e-12);
    CHECK(L == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("lagrange solve: bracket expands both directions") {
    auto budget = [](double L) { return std::exp(-L); };
    CHECK(solve_decreasing_for_target(budget, std::exp(-20.0), 1.0, 1e-18) ==
          doctest::Approx(20.0).epsilon(1e-8));
    CHECK(solve_decreasing_for_target(budget, std::exp(-1e-4), 1.0, 1e-12) ==
          doctest::Approx(1e-4).epsilon(1e-6));
}

TEST_CASE("lagrange solve: unreachable target throws") {
    auto budget = [](double L) { return 1.0 + 1.0 / L; };  // never below 1
    CHECK_THROWS_AS(solve_decreasing_for_target(budget, 0.5, 1.0, 1e-12),
                    memchan::NonConvergence);
}
