#pragma once

#include <string>

#include "ncgear/profile.hpp"

namespace ncgear {

struct SvgOptions {
    double pose_phi = 0.0;         ///< drive rotation in radians
    bool base_curves = false;      ///< add base-curve layers
    int base_curve_samples = 720;
};

/// Render the meshing pair: drive profile rotated by +pose about the origin,
/// driven profile rotated by -psi(pose) and shifted to (a, 0), with centrode
/// overlays and the pitch-point marker at (r(pose), 0). 1 user unit = 1 mm.
std::string svg_document(const Context& ctx, const Assembly& assembly, const SvgOptions& options);

}  // namespace ncgear
