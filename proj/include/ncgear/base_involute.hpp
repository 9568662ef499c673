#pragma once

#include <vector>

#include "ncgear/centrodes.hpp"
#include "ncgear/drive_tooth.hpp"

namespace ncgear {

/// One sample of a base curve. `regular` is false where the point escapes to
/// infinity (centrode curvature ~ 0) or sits on a cusp of the base curve.
struct BaseCurveSample {
    double phi;
    Complex point;  ///< meaningful only when regular
    bool regular;
};

/// Base curve of all unidirectional drive flanks (their common evolute):
/// X_B = X_P +- (sin(alpha)/kappa) T e^{+-i alpha}.
/// Throws PointAtInfinity where |kappa| < 1e-8 / a.
Complex base_curve_drive(const Context& ctx, Side side, double phi);

/// Driven analog with kappa~ and T~.
Complex base_curve_driven(const Context& ctx, Side side, double phi);

/// Involute of the drive base curve with cusp at phi_s:
/// X_P - (a cos(alpha) I(phi_s, phi) -+ sin(alpha)/kappa(phi_s)) T e^{+-i alpha}.
/// With phi_s = singular_point(ctx, k, side) this reproduces the generated
/// flank of tooth k exactly.
Complex involute_drive(const Context& ctx, Side side, double phi_s, double phi);

/// Driven analog.
Complex involute_driven(const Context& ctx, Side side, double phi_s, double phi);

/// Radius of curvature of the drive flank (k, side) at parameter phi:
/// |a cos(alpha) I(phi_s, phi) -+ sin(alpha) (1/kappa(phi_s) - 1/kappa(phi))|.
double flank_curvature_radius(const Context& ctx, int k, Side side, double phi);

/// Same with a precomputed cusp parameter.
double flank_curvature_radius_at(const Context& ctx, Side side, double phi_s, double phi);

/// Uniform sampling of a base curve for export. Samples are flagged
/// irregular near points at infinity and where the signed length element
/// |X_P'| cos(alpha) -+ (kappa'/kappa^2) sin(alpha) changes sign (cusps), so
/// callers can split polylines there.
std::vector<BaseCurveSample> base_curve_samples(const Context& ctx, GearRole gear, Side side,
                                                int count);

}  // namespace ncgear
