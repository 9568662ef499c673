#include "ncgear/drive_tooth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncgear/numerics.hpp"

namespace ncgear {
namespace {

// Below this |h| the corner-center path is treated as stationary and the
// normal sign is borrowed from a nearby sample.
constexpr double degenerate_turn_rate = 1e-9;

double sign_of_turn_rate(const Context& ctx, double phi) {
    double h = ctx.transmission().turn_rate(phi);
    if (std::abs(h) >= degenerate_turn_rate) {
        return h > 0.0 ? 1.0 : -1.0;
    }
    // walk outward until a regular sample appears
    for (double step = 1e-6; step < 1.0; step *= 4.0) {
        for (const double probe : {phi + step, phi - step}) {
            h = ctx.transmission().turn_rate(probe);
            if (std::abs(h) >= degenerate_turn_rate) {
                return h > 0.0 ? 1.0 : -1.0;
            }
        }
    }
    throw DegenerateNormal("fillet_point: corner-center path is stationary near phi = " +
                           std::to_string(phi));
}

// Complex coefficient of T in the corner-center path:
// lambda +- (rho sec(alpha) + (h_f - rho) tan(alpha)) - i (h_f - rho).
Complex corner_coefficient(const Context& ctx, int k, Side side, double phi) {
    const RackProfile& rack = ctx.rack();
    const double lambda = flank_line_offset(ctx, k, side, phi);
    return {lambda + side_sign(side) * rack.corner_center_offset(),
            -(rack.dedendum - rack.fillet_radius)};
}

}  // namespace

double flank_line_offset(const Context& ctx, int k, Side side, double phi) {
    const double quarter_pitch = pi * ctx.module() / 4.0;
    return side_sign(side) * quarter_pitch -
           ctx.center_dist() * ctx.arc(ctx.tooth_center(k), phi);
}

Complex rack_flank_line(const Context& ctx, int k, Side side, double phi, double mu) {
    const double lambda = flank_line_offset(ctx, k, side, phi);
    const Complex incline = imag_unit * std::exp(Complex(0.0, side_sign(side) * ctx.rack().alpha));
    return ctx.drive_point(phi) + (lambda + mu * incline) * ctx.drive_tangent(phi);
}

Complex flank_point(const Context& ctx, int k, Side side, double phi) {
    const double alpha = ctx.rack().alpha;
    const double lambda = flank_line_offset(ctx, k, side, phi);
    const Complex lean = std::exp(Complex(0.0, side_sign(side) * alpha)) * std::cos(alpha);
    return ctx.drive_point(phi) + lambda * lean * ctx.drive_tangent(phi);
}

Complex fillet_center(const Context& ctx, int k, Side side, double phi) {
    return ctx.drive_point(phi) + corner_coefficient(ctx, k, side, phi) * ctx.drive_tangent(phi);
}

Complex fillet_point(const Context& ctx, int k, Side side, double phi) {
    const Complex c = corner_coefficient(ctx, k, side, phi);
    const Complex normal = -sign_of_turn_rate(ctx, phi) * c * ctx.drive_tangent(phi) / std::abs(c);
    return fillet_center(ctx, k, side, phi) + ctx.rack().fillet_radius * normal;
}

namespace detail {

std::pair<double, double> tooth_window(const Context& ctx, int k) {
    const double two_pitches = 2.0 * pi * ctx.module();
    return {ctx.angle_at_arc(k, -two_pitches), ctx.angle_at_arc(k, +two_pitches)};
}

FlankStatus classify_undercut_at(const Context& ctx, double phi_s) {
    const double limit = ctx.rack().undercut_threshold();
    return -ctx.drive_curvature(phi_s) <= limit ? FlankStatus::free : FlankStatus::undercut;
}

}  // namespace detail

// lambda is strictly decreasing, so lambda-target equations have one root.
static double solve_offset_equation(const Context& ctx, int k, Side side, double target,
                                    const char* what) {
    const auto [lo, hi] = detail::tooth_window(ctx, k);
    auto f = [&](double phi) { return flank_line_offset(ctx, k, side, phi) - target; };
    auto df = [&](double phi) {
        const double g = 1.0 + ctx.transmission().dpsi(phi);
        return -ctx.center_dist() * ctx.transmission().tangent_scale(phi) / (g * g);
    };
    if (!(f(lo) > 0.0 && f(hi) < 0.0)) {
        throw RootNotBracketed(std::string(what) + ": target offset outside the tooth window");
    }
    auto neg = [&f](double phi) { return -f(phi); };
    auto ndf = [&df](double phi) { return -df(phi); };
    return newton_bracketed(neg, ndf, lo, hi, ctx.tol().root, ctx.tol().max_iter).x;
}

double fillet_dedendum_contact(const Context& ctx, int k, Side side) {
    // -+lambda = (h_f - rho) tan(alpha) + rho sec(alpha)
    const double target = -side_sign(side) * ctx.rack().corner_center_offset();
    return solve_offset_equation(ctx, k, side, target, "fillet_dedendum_contact");
}

double flank_fillet_contact(const Context& ctx, int k, Side side) {
    const RackProfile& rack = ctx.rack();
    const double rhs =
        (rack.dedendum - rack.fillet_radius) / std::sin(rack.alpha) + rack.fillet_radius;
    const double target = -side_sign(side) * rhs / std::cos(rack.alpha);
    return solve_offset_equation(ctx, k, side, target, "flank_fillet_contact");
}

double singular_point(const Context& ctx, int k, Side side) {
    const auto [lo, hi] = detail::tooth_window(ctx, k);
    const double rhs = side_sign(side) * std::tan(ctx.rack().alpha);
    auto f = [&](double phi) {
        return flank_line_offset(ctx, k, side, phi) * ctx.drive_curvature(phi) - rhs;
    };

    const auto brackets = scan_brackets(f, lo, hi, 256);
    const double chi_k = ctx.tooth_center(k);
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [blo, bhi] : brackets) {
        const double root = blo == bhi
                                ? blo
                                : brent(f, blo, bhi, ctx.tol().root, ctx.tol().max_iter).x;
        if (std::isnan(best) || std::abs(root - chi_k) < std::abs(best - chi_k)) {
            best = root;
        }
    }
    if (std::isnan(best)) {
        throw NoSingularPoint("singular_point: flank (" + std::to_string(k) + ", " +
                              side_name(side) + ") has no cusp in the search window");
    }
    return best;
}

FlankStatus classify_undercut(const Context& ctx, int k, Side side) {
    try {
        return detail::classify_undercut_at(ctx, singular_point(ctx, k, side));
    } catch (const NoSingularPoint&) {
        return FlankStatus::free;  // no cusp in range, nothing to cut into
    }
}

SizingBounds sizing_bounds(const Transmission& tr, const RackRatios& ratios, double quad_tol) {
    const double s = std::sin(ratios.alpha);
    const double denom = ratios.dedendum_rel - ratios.fillet_rel * (1.0 - s);
    if (!(denom > 0.0)) {
        throw GearError("sizing_bounds: h_f/m - rho/m*(1 - sin alpha) must be positive");
    }

    // max over a revolution of -kappa at unit center distance, refined around
    // the best grid sample. -kappa*a = |(1+psi')^2 h / w| for a convex drive.
    constexpr int samples = 4096;
    double max_neg = 0.0;
    double arg_max = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double phi = two_pi * i / samples;
        const double v = -tr.curvature(1.0, phi);
        if (v > max_neg) {
            max_neg = v;
            arg_max = phi;
        }
    }
    const double step = two_pi / samples;
    double lo = arg_max - step, hi = arg_max + step;
    for (int it = 0; it < 80; ++it) {  // golden-section polish
        const double m1 = lo + 0.381966011250105 * (hi - lo);
        const double m2 = hi - 0.381966011250105 * (hi - lo);
        if (-tr.curvature(1.0, m1) > -tr.curvature(1.0, m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    max_neg = std::max(max_neg, -tr.curvature(1.0, 0.5 * (lo + hi)));

    SizingBounds out{};
    out.max_kappa_unit = max_neg;
    out.a_over_m_min = denom / (s * s) * max_neg;
    const double z1_bound = arc_integral(tr, 0.0, two_pi, quad_tol) * out.a_over_m_min / pi;
    out.z1_min = std::max(3, static_cast<int>(std::ceil(z1_bound - 1e-9)));
    return out;
}

}  // namespace ncgear
