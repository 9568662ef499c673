#pragma once

#include <cmath>

#include "ncgear/errors.hpp"
#include "ncgear/types.hpp"

namespace ncgear {

/// Reference profile of the rack-cutter. All lengths in millimetres,
/// the profile angle in radians. The derived lengths l1..l4 locate the
/// tip-corner arc relative to the straight flank:
///   l1 = (h_f - rho) tan(alpha)   flank foot to corner-center, along the tip
///   l2 = rho / cos(alpha)         corner-center to flank, along the tip
///   l3 = (h_f - rho) / cos(alpha) flank length below the reference line
///   l4 = rho tan(alpha)           flank end to tangency point of the corner
struct RackProfile {
    double module;        ///< m; pitch p = pi*m
    double alpha;         ///< profile angle
    double addendum;      ///< h_a, tooth height above the reference line
    double dedendum;      ///< h_f, tooth depth below the reference line
    double fillet_radius; ///< rho, tip corner radius

    double pitch() const { return pi * module; }
    double l1() const { return (dedendum - fillet_radius) * std::tan(alpha); }
    double l2() const { return fillet_radius / std::cos(alpha); }
    double l3() const { return (dedendum - fillet_radius) / std::cos(alpha); }
    double l4() const { return fillet_radius * std::tan(alpha); }

    /// Signed offset of the tip-corner center from the flank's reference-line
    /// crossing, measured along the reference line: l1 + l2.
    double corner_center_offset() const { return l1() + l2(); }

    /// Curvature bound below which a flank is free of undercut:
    /// sin^2(alpha) / (h_f - rho (1 - sin(alpha))).
    double undercut_threshold() const {
        const double s = std::sin(alpha);
        return s * s / (dedendum - fillet_radius * (1.0 - s));
    }

    void validate() const {
        if (!(module > 0.0)) throw GearError("rack: module must be positive");
        if (!(alpha > 0.0 && alpha < pi / 2.0))
            throw GearError("rack: profile angle must lie in (0, pi/2)");
        if (!(fillet_radius >= 0.0)) throw GearError("rack: fillet radius must be >= 0");
        if (!(addendum > 0.0) || !(dedendum > 0.0))
            throw GearError("rack: addendum and dedendum must be positive");
        if (!(dedendum > fillet_radius * (1.0 - std::sin(alpha))))
            throw GearError("rack: invariant h_f > rho*(1 - sin(alpha)) violated");
    }
};

}  // namespace ncgear
