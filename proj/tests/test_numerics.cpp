#include <doctest.h>

#include <cmath>

#include "ncgear/numerics.hpp"
#include "ncgear/types.hpp"

using namespace ncgear;

TEST_CASE("quadrature on known integrals") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(integrate(f, 0.0, pi, 1e-12) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate(f, pi, 0.0, 1e-12) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(integrate(f, 1.3, 1.3, 1e-12) == 0.0);

    auto g = [](double x) { return std::exp(-x * x); };
    // erf(2) * sqrt(pi) / 2
    CHECK(integrate(g, 0.0, 2.0, 1e-13) == doctest::Approx(0.8820813907624215).epsilon(1e-12));
}

TEST_CASE("quadrature additivity") {
    auto f = [](double x) { return 1.0 / (1.0 + x * x); };
    const double whole = integrate(f, -1.0, 5.0, 1e-12);
    const double split = integrate(f, -1.0, 2.2, 1e-12) + integrate(f, 2.2, 5.0, 1e-12);
    CHECK(whole == doctest::Approx(split).epsilon(1e-11));
}

TEST_CASE("bracketed newton with bisection fallback") {
    auto f = [](double x) { return x * x * x - 2.0 * x - 5.0; };
    auto df = [](double x) { return 3.0 * x * x - 2.0; };
    const RootResult res = newton_bracketed(f, df, 1.0, 3.0, 1e-14, 100);
    CHECK(res.x == doctest::Approx(2.0945514815423265).epsilon(1e-12));

    CHECK_THROWS_AS(newton_bracketed(f, df, 3.0, 4.0, 1e-14, 100), RootNotBracketed);
}

TEST_CASE("brent solves without derivatives") {
    auto f = [](double x) { return std::cos(x) - x; };
    const RootResult res = brent(f, 0.0, 1.0, 1e-14, 100);
    CHECK(res.x == doctest::Approx(0.7390851332151607).epsilon(1e-12));
}

TEST_CASE("bracket scan finds every sign change") {
    auto f = [](double x) { return std::sin(3.0 * x); };
    const auto brackets = scan_brackets(f, 0.1, 3.0, 200);
    REQUIRE(brackets.size() == 2);  // roots at pi/3 and 2*pi/3
    CHECK(brackets[0].first < pi / 3.0);
    CHECK(brackets[0].second > pi / 3.0);
    CHECK(brackets[1].first < 2.0 * pi / 3.0);
    CHECK(brackets[1].second > 2.0 * pi / 3.0);
}

TEST_CASE("2d newton on a nonlinear system") {
    // intersect a circle with an exponential curve
    auto f = [](double x, double y) -> std::array<double, 2> {
        return {x * x + y * y - 4.0, y - std::exp(x) + 1.0};
    };
    const auto res = newton2d(f, 1.0, 1.5, 1e-12, 60, "test system");
    CHECK(res.residual <= 1e-12);
    CHECK(res.x[0] * res.x[0] + res.x[1] * res.x[1] == doctest::Approx(4.0).epsilon(1e-10));

    auto bad = [](double, double) -> std::array<double, 2> { return {1.0, 1.0}; };
    CHECK_THROWS_AS(newton2d(bad, 0.0, 0.0, 1e-12, 20, "unsolvable"), SolverDiverged);
}
