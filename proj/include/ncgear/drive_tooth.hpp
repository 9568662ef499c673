#pragma once

#include "ncgear/centrodes.hpp"
#include "ncgear/types.hpp"

namespace ncgear {

enum class FlankStatus { free, undercut };

/// Dimensionless rack proportions used by the sizing criteria.
struct RackRatios {
    double dedendum_rel;  ///< h_f / m
    double fillet_rel;    ///< rho / m
    double alpha;         ///< profile angle in radians
};

/// Module / center-distance / tooth-count bounds that guarantee every drive
/// flank is free of undercut.
struct SizingBounds {
    double a_over_m_min;       ///< smallest admissible center distance per unit module
    int z1_min;                ///< smallest undercut-free drive tooth count
    double max_kappa_unit;     ///< max of -kappa over a revolution, at a = 1

    /// Largest undercut-free module for a given center distance.
    double max_module(double a) const { return a / a_over_m_min; }
};

/// Signed distance lambda_{k,+-}(phi) = +-pi*m/4 - a*I(chi(k), phi) between
/// the pitch point and the crossing of rack flank (k, side) with the
/// reference line. Strictly decreasing in phi with slope -a*w/(1+psi')^2.
double flank_line_offset(const Context& ctx, int k, Side side, double phi);

/// Point of the rack-cutter flank line at line parameter mu:
/// X_P + (lambda + mu*i*e^{+-i alpha}) * T.
Complex rack_flank_line(const Context& ctx, int k, Side side, double phi, double mu);

/// Generated flank point of tooth k: X_P + lambda * T * e^{+-i alpha} * cos(alpha),
/// the envelope of the rack flank lines.
Complex flank_point(const Context& ctx, int k, Side side, double phi);

/// Path of the rack tip-corner center M_{+-} carried by the rolling rack.
Complex fillet_center(const Context& ctx, int k, Side side, double phi);

/// Root fillet point: parallel of the corner-center path at distance rho.
/// Where the path's tangent vanishes (|h| below threshold) the normal sign
/// is taken from the nearest regular sample.
Complex fillet_point(const Context& ctx, int k, Side side, double phi);

/// Angle at which the fillet touches the dedendum curve:
/// -+lambda_{k,+-}(phi) = (h_f - rho) tan(alpha) + rho / cos(alpha).
/// At the root, fillet and dedendum point coincide at the same phi.
double fillet_dedendum_contact(const Context& ctx, int k, Side side);

/// Cusp parameter phi_S of the flank, where the generated curve's derivative
/// vanishes: lambda_{k,+-}(phi) * kappa(phi) = +-tan(alpha).
/// Throws NoSingularPoint when the window holds no such root.
double singular_point(const Context& ctx, int k, Side side);

/// Angle phi_B of the tangential contact between flank and fillet:
/// -+lambda_{k,+-}(phi) cos(alpha) = (h_f - rho)/sin(alpha) + rho.
double flank_fillet_contact(const Context& ctx, int k, Side side);

/// Undercut test: free iff -kappa(phi_S) <= sin^2(alpha)/(h_f - rho(1-sin alpha)).
/// A flank without a cusp in range cannot be undercut and reports free.
FlankStatus classify_undercut(const Context& ctx, int k, Side side);

/// Sizing criteria: bounds on m, a/m and z1 under which no drive flank has
/// undercut, for the given transmission and rack proportions.
SizingBounds sizing_bounds(const Transmission& tr, const RackRatios& ratios,
                           double quad_tol = 1e-10);

namespace detail {
/// Inclusive root-search window around chi(k): +-2 pitches of arc length.
std::pair<double, double> tooth_window(const Context& ctx, int k);

/// classify_undercut given a precomputed cusp parameter.
FlankStatus classify_undercut_at(const Context& ctx, double phi_s);
}  // namespace detail

}  // namespace ncgear
