#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ncgear/centrodes.hpp"
#include "ncgear/drive_tooth.hpp"
#include "ncgear/driven_tooth.hpp"

namespace ncgear {

/// Trimmed parameter intervals of one flank of one tooth (or tooth space).
///
/// phi_flank covers the working flank, phi_fillet the root fillet, phi_tip is
/// the addendum-curve parameter matched to the flank tip. Interval ends are
/// ordered as assembled: on the drive gear the "-" side runs fillet first,
/// the "+" side flank first; the driven gear mirrors this. When the flank is
/// free of undercut the flank and fillet intervals share the tangential
/// contact parameter phi_contact.
struct FlankSegments {
    int k = 0;
    Side side = Side::minus;
    bool undercut = false;
    bool has_cusp = true;        ///< false if no singular point in range
    bool multiple_roots = false; ///< flank/fillet system had several admissible roots
    double phi_cusp = 0.0;       ///< cusp parameter phi_S (valid if has_cusp)
    double kappa_cusp = 0.0;     ///< centrode curvature at the cusp
    double phi_contact = 0.0;    ///< tangential flank/fillet contact phi_B
    std::array<double, 2> phi_flank{};
    std::array<double, 2> phi_fillet{};
    double phi_tip = 0.0;
};

struct ProfileVertex {
    enum class Source { flank, fillet, addendum, dedendum };
    Complex point;
    Source source;
    int k;
    int side;  ///< -1 / +1 for flank and fillet vertices, 0 for arc vertices
    double phi;
};

/// Closed, oriented boundary polyline of one gear. The closing edge from the
/// last to the first vertex is implicit. Drive profiles are negatively
/// oriented, driven profiles positively, matching their centrodes.
struct GearProfile {
    std::vector<ProfileVertex> vertices;
    bool closed = false;
    double closure_gap = 0.0;  ///< endpoint mismatch absorbed when closing
};

struct SynthesisReport {
    double center_distance = 0.0;
    double total_arc_integral = 0.0;
    double undercut_threshold = 0.0;
    std::vector<double> tooth_centers;
    SizingBounds sizing{};
    std::vector<FlankSegments> drive_flanks;   ///< 2*z1 rows, (k, -) then (k, +)
    std::vector<FlankSegments> driven_flanks;  ///< 2*z2 rows
};

struct Assembly {
    GearProfile drive;
    GearProfile driven;
    SynthesisReport report;
};

struct MeshReport {
    int samples = 0;
    int active_checks = 0;
    double max_fixed_frame_deviation = 0.0;
    double max_transmission_error = 0.0;   ///< radians
    double max_contact_height = 0.0;       ///< |Im| of fixed-frame contact points
};

struct ProfileCheck {
    double signed_area = 0.0;
    bool self_intersects = false;
};

/// Resolve every boundary parameter of one flank. Undercut flanks solve the
/// two-unknown flank/fillet coincidence system; the flank tip always solves
/// the flank/addendum coincidence system.
FlankSegments trim_flank(const Context& ctx, GearRole gear, int k, Side side);

/// Run the whole synthesis: trim all flanks of both gears, assemble closed
/// profiles with the wrap-around seam on tooth 1, and produce the report.
Assembly assemble(const Context& ctx);

/// Check the conjugacy of the assembled pair: at sampled drive angles, active
/// flank pairs must meet at one fixed-frame point, and the driven rotation
/// reconstructed from that contact must reproduce psi.
MeshReport mesh_verify(const Context& ctx, const SynthesisReport& report, int samples);

/// Shoelace area and segment-pair intersection scan.
ProfileCheck validate_profile(const GearProfile& profile);

/// Adaptive polyline sampling of a parametric curve with chord-height
/// tolerance; t0 > t1 traverses the curve in reverse.
std::vector<std::pair<double, Complex>> sample_curve(const std::function<Complex(double)>& f,
                                                     double t0, double t1, double chord_tol);

}  // namespace ncgear
