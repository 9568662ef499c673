#include <doctest.h>

#include <cmath>
#include <random>

#include "ncgear/base_involute.hpp"
#include "ncgear/driven_tooth.hpp"
#include "support/oracles.hpp"

using namespace ncgear;

TEST_CASE("base curves of the constant-ratio pair are the base circles") {
    const Context& ctx = oracle::circular_ctx_z14();
    const double r_base = 14.0 * std::cos(ctx.rack().alpha);
    for (double phi : {0.3, 1.1, 2.7, 5.0}) {
        for (Side side : {Side::minus, Side::plus}) {
            CHECK(std::abs(base_curve_drive(ctx, side, phi)) ==
                  doctest::Approx(r_base).epsilon(1e-12));
            CHECK(std::abs(base_curve_driven(ctx, side, phi)) ==
                  doctest::Approx(r_base).epsilon(1e-12));
        }
    }
}

TEST_CASE("base curve point at infinity where the centrode curvature vanishes") {
    Context unit_scale(Transmission::sinusoidal(oracle::sine_amplitude()),
                       oracle::standard_rack(2.0), 14, 14);
    CHECK_THROWS_AS(base_curve_drive(unit_scale, Side::plus, 0.0), PointAtInfinity);
}

TEST_CASE("base curve mirror property of the sinusoidal pair") {
    const Context& ctx = oracle::sine_ctx();
    for (double phi : {0.4, 1.2, 2.9, 4.4}) {
        const Complex plus = base_curve_drive(ctx, Side::plus, phi);
        const Complex minus = base_curve_drive(ctx, Side::minus, two_pi - phi);
        CHECK(std::abs(minus - std::conj(plus)) < 1e-9 * ctx.center_dist());
    }
}

TEST_CASE("involute cusp sits at its start with vanishing derivative") {
    const Context& ctx = oracle::sine_ctx();
    const double phi_s = singular_point(ctx, 4, Side::plus);
    const Complex at_cusp = involute_drive(ctx, Side::plus, phi_s, phi_s);
    CHECK(std::abs(at_cusp - flank_point(ctx, 4, Side::plus, phi_s)) < 1e-9 * ctx.center_dist());
    const Complex d = oracle::fd_derivative(
        [&](double x) { return involute_drive(ctx, Side::plus, phi_s, x); }, phi_s);
    CHECK(std::abs(d) < 1e-5 * ctx.center_dist());
}

TEST_CASE("rack-generated flanks coincide with involutes of the base curve") {
    const Context& ctx = oracle::sine_ctx();
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> pick_k(1, 14);
    std::uniform_int_distribution<int> pick_side(0, 1);
    std::uniform_real_distribution<double> spread(-0.5, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        const int k = pick_k(rng);
        const Side side = pick_side(rng) ? Side::plus : Side::minus;
        const double phi_s = singular_point(ctx, k, side);
        for (int i = 0; i < 50; ++i) {
            const double phi = phi_s + spread(rng);
            CHECK(std::abs(involute_drive(ctx, side, phi_s, phi) -
                           flank_point(ctx, k, side, phi)) < 1e-9 * ctx.center_dist());
        }
    }
}

TEST_CASE("driven flanks coincide with involutes of the driven base curve") {
    const Context& ctx = oracle::sine_ctx();
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> spread(-0.5, 0.5);
    for (int k : {3, 11}) {
        for (Side side : {Side::minus, Side::plus}) {
            const double phi_s = singular_point_driven(ctx, k, side);
            for (int i = 0; i < 25; ++i) {
                const double phi = phi_s + spread(rng);
                CHECK(std::abs(involute_driven(ctx, side, phi_s, phi) -
                               flank_point_driven(ctx, k, side, phi)) <
                      1e-9 * ctx.center_dist());
            }
        }
    }
}

TEST_CASE("constant-ratio involute reproduces the classical circle involute") {
    const Context& ctx = oracle::circular_ctx_z20();
    const oracle::CircularGear classical =
        oracle::classical_gear(20, 2.0, 20.0, 1.0, 1.2, 0.3);
    const double phi_s = singular_point(ctx, 1, Side::plus);
    // the working branch of the "+" flank runs from the cusp toward smaller phi
    for (double dphi : {0.05, 0.15, 0.3}) {
        const Complex p = involute_drive(ctx, Side::plus, phi_s, phi_s - dphi);
        // distance to the classical involute curve of the matching flank
        double best = 1e300;
        for (int i = 0; i <= 4000; ++i) {
            const double t = 1.2 * i / 4000;
            // "+" side flank of our tooth 1 leans toward negative polar angles
            best = std::min(best, std::abs(p - classical.flank(t, -1)));
        }
        CHECK(best < 1e-3 * ctx.module());
    }
}

TEST_CASE("evolute property: connecting segment is the involute normal") {
    const Context& ctx = oracle::sine_ctx();
    const double phi_s = singular_point(ctx, 6, Side::minus);
    for (double phi : {phi_s + 0.15, phi_s + 0.35}) {
        const Complex inv = involute_drive(ctx, Side::minus, phi_s, phi);
        const Complex base = base_curve_drive(ctx, Side::minus, phi);
        const Complex seg = (base - inv) / std::abs(base - inv);
        const Complex inv_tan = oracle::fd_derivative(
            [&](double x) { return involute_drive(ctx, Side::minus, phi_s, x); }, phi);
        // perpendicular to the involute: the dot product measures the angle error
        const Complex it = inv_tan / std::abs(inv_tan);
        CHECK(std::abs(seg.real() * it.real() + seg.imag() * it.imag()) < 1e-6);
        const Complex base_tan = oracle::fd_derivative(
            [&](double x) { return base_curve_drive(ctx, Side::minus, x); }, phi);
        // tangent to the base curve: the cross product measures the angle error
        CHECK(std::abs(ext(seg, base_tan / std::abs(base_tan))) < 1e-6);
    }
}

TEST_CASE("involutes from different cusps are normal offsets of each other") {
    const Context& ctx = oracle::sine_ctx();
    const double s1 = 1.0, s2 = 1.4;
    double offset_seen = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double phi = 1.8 + 0.5 * i / 10;
        const Complex d = involute_drive(ctx, Side::plus, s1, phi) -
                          involute_drive(ctx, Side::plus, s2, phi);
        const Complex dir =
            ctx.drive_tangent(phi) * std::exp(Complex(0.0, ctx.rack().alpha));
        // difference is a fixed multiple of the involute normal direction
        CHECK(std::abs(ext(d / std::abs(d), dir)) < 1e-9);
        if (i == 0) {
            offset_seen = std::abs(d);
        } else {
            CHECK(std::abs(d) == doctest::Approx(offset_seen).epsilon(1e-9));
        }
    }
}

TEST_CASE("flank curvature radius: zero at the cusp, classical growth for circles") {
    const Context& ctx = oracle::circular_ctx_z20();
    const double phi_s = singular_point(ctx, 1, Side::minus);
    CHECK(flank_curvature_radius_at(ctx, Side::minus, phi_s, phi_s) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // constant curvature: radius = a cos(alpha) (phi - phi_s) / 2
    const double a = ctx.center_dist();
    for (double dphi : {0.1, 0.25}) {
        CHECK(flank_curvature_radius_at(ctx, Side::minus, phi_s, phi_s + dphi) ==
              doctest::Approx(a * std::cos(ctx.rack().alpha) * dphi / 2.0).epsilon(1e-10));
    }
}

TEST_CASE("flank curvature radius against a numeric curvature oracle") {
    const Context& ctx = oracle::sine_ctx();
    const int k = 5;
    const Side side = Side::minus;
    const double phi_s = singular_point(ctx, k, side);
    const double phi = phi_s + 0.2;
    const double numeric =
        oracle::fd_curvature([&](double x) { return flank_point(ctx, k, side, x); }, phi);
    const double radius = flank_curvature_radius(ctx, k, side, phi);
    CHECK(radius == doctest::Approx(1.0 / std::abs(numeric)).epsilon(1e-4));
}

TEST_CASE("base curve sampling flags the points at infinity") {
    const Context& ctx = oracle::sine_ctx();
    const auto samples = base_curve_samples(ctx, GearRole::drive, Side::plus, 720);
    REQUIRE(samples.size() == 721);
    CHECK_FALSE(samples.front().regular);  // curvature vanishes at phi = 0
    CHECK_FALSE(samples.back().regular);
    int regular_count = 0;
    for (const auto& s : samples) regular_count += s.regular;
    CHECK(regular_count > 600);
}
