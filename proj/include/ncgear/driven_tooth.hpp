#pragma once

#include "ncgear/drive_tooth.hpp"

namespace ncgear {

/// Driven-gear analogs of the drive tooth operations. Tooth space k of the
/// driven gear is generated by the same rack flanks as tooth k of the drive
/// gear, reused as flanks of a rack tooth, so both gears share the offsets
/// lambda_{k,+-} and the midpoints chi(k).

/// Rack flank line in the driven frame: Xi_P + (lambda + mu*i*e^{+-i alpha}) * T~.
Complex rack_flank_line_driven(const Context& ctx, int k, Side side, double phi, double mu);

/// Flank point of tooth space k: Xi_P + lambda * T~ * e^{+-i alpha} * cos(alpha).
Complex flank_point_driven(const Context& ctx, int k, Side side, double phi);

/// Corner-center path and root fillet of the driven tooth space.
Complex fillet_center_driven(const Context& ctx, int k, Side side, double phi);
Complex fillet_point_driven(const Context& ctx, int k, Side side, double phi);

/// Fillet / dedendum-curve contact: +-lambda_{k,+-}(phi) = (h_f - rho) tan(alpha) + rho sec(alpha).
double fillet_dedendum_contact_driven(const Context& ctx, int k, Side side);

/// Cusp parameter of the driven flank: lambda_{k,+-}(phi) * kappa~(phi) = +-tan(alpha).
double singular_point_driven(const Context& ctx, int k, Side side);

/// Flank / fillet tangential contact: +-lambda_{k,+-}(phi) cos(alpha) = (h_f - rho)/sin(alpha) + rho.
double flank_fillet_contact_driven(const Context& ctx, int k, Side side);

/// Free iff kappa~(phi_S) <= sin^2(alpha) / (h_f - rho (1 - sin alpha)).
FlankStatus classify_undercut_driven(const Context& ctx, int k, Side side);

namespace detail {
FlankStatus classify_undercut_driven_at(const Context& ctx, double phi_s);
}

}  // namespace ncgear
