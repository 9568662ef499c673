#include "ncgear/base_involute.hpp"

#include <cmath>

namespace ncgear {
namespace {

double curvature_floor(const Context& ctx) { return 1e-8 / ctx.center_dist(); }

Complex lean(Side side, double alpha) {
    return std::exp(Complex(0.0, side_sign(side) * alpha));
}

// Signed length element of the base curve; its sign changes mark cusps.
double base_length_element(const Context& ctx, GearRole gear, Side side, double phi) {
    const Transmission& tr = ctx.transmission();
    const double g = 1.0 + tr.dpsi(phi);
    const double speed = ctx.center_dist() * tr.tangent_scale(phi) / (g * g);
    const double alpha = ctx.rack().alpha;
    const double h = 1e-6 * (1.0 + std::abs(phi));
    const double kappa = gear == GearRole::drive ? ctx.drive_curvature(phi)
                                                 : ctx.driven_curvature(phi);
    const double kp = gear == GearRole::drive
                          ? (ctx.drive_curvature(phi + h) - ctx.drive_curvature(phi - h)) / (2 * h)
                          : (ctx.driven_curvature(phi + h) - ctx.driven_curvature(phi - h)) / (2 * h);
    return speed * std::cos(alpha) - side_sign(side) * (kp / (kappa * kappa)) * std::sin(alpha);
}

}  // namespace

Complex base_curve_drive(const Context& ctx, Side side, double phi) {
    const double kappa = ctx.drive_curvature(phi);
    if (std::abs(kappa) < curvature_floor(ctx)) {
        throw PointAtInfinity("base_curve_drive: centrode curvature vanishes at phi = " +
                              std::to_string(phi));
    }
    const double alpha = ctx.rack().alpha;
    return ctx.drive_point(phi) + side_sign(side) * (std::sin(alpha) / kappa) *
                                      ctx.drive_tangent(phi) * lean(side, alpha);
}

Complex base_curve_driven(const Context& ctx, Side side, double phi) {
    const double kappa = ctx.driven_curvature(phi);
    if (std::abs(kappa) < curvature_floor(ctx)) {
        throw PointAtInfinity("base_curve_driven: centrode curvature vanishes at phi = " +
                              std::to_string(phi));
    }
    const double alpha = ctx.rack().alpha;
    return ctx.driven_point(phi) + side_sign(side) * (std::sin(alpha) / kappa) *
                                       ctx.driven_tangent(phi) * lean(side, alpha);
}

Complex involute_drive(const Context& ctx, Side side, double phi_s, double phi) {
    const double alpha = ctx.rack().alpha;
    const double unroll = ctx.center_dist() * std::cos(alpha) * ctx.arc(phi_s, phi) -
                          side_sign(side) * std::sin(alpha) / ctx.drive_curvature(phi_s);
    return ctx.drive_point(phi) - unroll * ctx.drive_tangent(phi) * lean(side, alpha);
}

Complex involute_driven(const Context& ctx, Side side, double phi_s, double phi) {
    const double alpha = ctx.rack().alpha;
    const double unroll = ctx.center_dist() * std::cos(alpha) * ctx.arc(phi_s, phi) -
                          side_sign(side) * std::sin(alpha) / ctx.driven_curvature(phi_s);
    return ctx.driven_point(phi) - unroll * ctx.driven_tangent(phi) * lean(side, alpha);
}

double flank_curvature_radius_at(const Context& ctx, Side side, double phi_s, double phi) {
    const double alpha = ctx.rack().alpha;
    const double value =
        ctx.center_dist() * std::cos(alpha) * ctx.arc(phi_s, phi) -
        side_sign(side) * std::sin(alpha) *
            (1.0 / ctx.drive_curvature(phi_s) - 1.0 / ctx.drive_curvature(phi));
    return std::abs(value);
}

double flank_curvature_radius(const Context& ctx, int k, Side side, double phi) {
    return flank_curvature_radius_at(ctx, side, singular_point(ctx, k, side), phi);
}

std::vector<BaseCurveSample> base_curve_samples(const Context& ctx, GearRole gear, Side side,
                                                int count) {
    std::vector<BaseCurveSample> out;
    out.reserve(count + 1);
    double prev_element = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= count; ++i) {
        const double phi = two_pi * i / count;
        BaseCurveSample s{phi, Complex{}, true};
        try {
            s.point = gear == GearRole::drive ? base_curve_drive(ctx, side, phi)
                                              : base_curve_driven(ctx, side, phi);
        } catch (const PointAtInfinity&) {
            s.regular = false;
        }
        if (s.regular) {
            const double element = base_length_element(ctx, gear, side, phi);
            if (have_prev && (element > 0.0) != (prev_element > 0.0)) {
                s.regular = false;  // cusp between this sample and the previous one
                have_prev = false;
            } else {
                prev_element = element;
                have_prev = true;
            }
        } else {
            have_prev = false;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace ncgear
