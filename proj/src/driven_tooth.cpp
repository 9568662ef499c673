#include "ncgear/driven_tooth.hpp"

#include <cmath>
#include <limits>

#include "ncgear/numerics.hpp"

namespace ncgear {
namespace {

constexpr double degenerate_turn_rate = 1e-9;

double sign_of_turn_rate_driven(const Context& ctx, double phi) {
    double h = ctx.transmission().turn_rate_driven(phi);
    if (std::abs(h) >= degenerate_turn_rate) {
        return h > 0.0 ? 1.0 : -1.0;
    }
    for (double step = 1e-6; step < 1.0; step *= 4.0) {
        for (const double probe : {phi + step, phi - step}) {
            h = ctx.transmission().turn_rate_driven(probe);
            if (std::abs(h) >= degenerate_turn_rate) {
                return h > 0.0 ? 1.0 : -1.0;
            }
        }
    }
    throw DegenerateNormal("fillet_point_driven: corner-center path is stationary near phi = " +
                           std::to_string(phi));
}

// Coefficient of T~ in the driven corner-center path:
// lambda -+ (rho sec(alpha) + (h_f - rho) tan(alpha)) + i (h_f - rho).
// The rack teeth protrude toward +i*T~ here (into the driven blank).
Complex corner_coefficient_driven(const Context& ctx, int k, Side side, double phi) {
    const RackProfile& rack = ctx.rack();
    const double lambda = flank_line_offset(ctx, k, side, phi);
    return {lambda - side_sign(side) * rack.corner_center_offset(),
            rack.dedendum - rack.fillet_radius};
}

double solve_offset_equation_driven(const Context& ctx, int k, Side side, double target,
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

}  // namespace

Complex rack_flank_line_driven(const Context& ctx, int k, Side side, double phi, double mu) {
    const double lambda = flank_line_offset(ctx, k, side, phi);
    const Complex incline = imag_unit * std::exp(Complex(0.0, side_sign(side) * ctx.rack().alpha));
    return ctx.driven_point(phi) + (lambda + mu * incline) * ctx.driven_tangent(phi);
}

Complex flank_point_driven(const Context& ctx, int k, Side side, double phi) {
    const double alpha = ctx.rack().alpha;
    const double lambda = flank_line_offset(ctx, k, side, phi);
    const Complex lean = std::exp(Complex(0.0, side_sign(side) * alpha)) * std::cos(alpha);
    return ctx.driven_point(phi) + lambda * lean * ctx.driven_tangent(phi);
}

Complex fillet_center_driven(const Context& ctx, int k, Side side, double phi) {
    return ctx.driven_point(phi) +
           corner_coefficient_driven(ctx, k, side, phi) * ctx.driven_tangent(phi);
}

Complex fillet_point_driven(const Context& ctx, int k, Side side, double phi) {
    const Complex c = corner_coefficient_driven(ctx, k, side, phi);
    const Complex normal =
        sign_of_turn_rate_driven(ctx, phi) * c * ctx.driven_tangent(phi) / std::abs(c);
    return fillet_center_driven(ctx, k, side, phi) + ctx.rack().fillet_radius * normal;
}

double fillet_dedendum_contact_driven(const Context& ctx, int k, Side side) {
    // +-lambda = (h_f - rho) tan(alpha) + rho sec(alpha)
    const double target = side_sign(side) * ctx.rack().corner_center_offset();
    return solve_offset_equation_driven(ctx, k, side, target, "fillet_dedendum_contact_driven");
}

double flank_fillet_contact_driven(const Context& ctx, int k, Side side) {
    const RackProfile& rack = ctx.rack();
    const double rhs =
        (rack.dedendum - rack.fillet_radius) / std::sin(rack.alpha) + rack.fillet_radius;
    const double target = side_sign(side) * rhs / std::cos(rack.alpha);
    return solve_offset_equation_driven(ctx, k, side, target, "flank_fillet_contact_driven");
}

double singular_point_driven(const Context& ctx, int k, Side side) {
    const auto [lo, hi] = detail::tooth_window(ctx, k);
    const double rhs = side_sign(side) * std::tan(ctx.rack().alpha);
    auto f = [&](double phi) {
        return flank_line_offset(ctx, k, side, phi) * ctx.driven_curvature(phi) - rhs;
    };

    const auto brackets = scan_brackets(f, lo, hi, 256);
    const double chi_k = ctx.tooth_center(k);
    double best = std::numeric_limits<double>::quiet_NaN();
    for (const auto& [blo, bhi] : brackets) {
        const double root =
            blo == bhi ? blo : brent(f, blo, bhi, ctx.tol().root, ctx.tol().max_iter).x;
        if (std::isnan(best) || std::abs(root - chi_k) < std::abs(best - chi_k)) {
            best = root;
        }
    }
    if (std::isnan(best)) {
        throw NoSingularPoint("singular_point_driven: tooth space (" + std::to_string(k) + ", " +
                              side_name(side) + ") has no cusp in the search window");
    }
    return best;
}

namespace detail {

FlankStatus classify_undercut_driven_at(const Context& ctx, double phi_s) {
    const double limit = ctx.rack().undercut_threshold();
    return ctx.driven_curvature(phi_s) <= limit ? FlankStatus::free : FlankStatus::undercut;
}

}  // namespace detail

FlankStatus classify_undercut_driven(const Context& ctx, int k, Side side) {
    try {
        return detail::classify_undercut_driven_at(ctx, singular_point_driven(ctx, k, side));
    } catch (const NoSingularPoint&) {
        return FlankStatus::free;
    }
}

}  // namespace ncgear
