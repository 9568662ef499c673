#pragma once

#include <memory>
#include <vector>

#include "ncgear/rack.hpp"
#include "ncgear/transmission.hpp"
#include "ncgear/types.hpp"

namespace ncgear {

struct ToleranceSet {
    double quad = 1e-10;  ///< absolute quadrature tolerance (dimensionless integrand)
    double root = 1e-12;  ///< scalar root parameter tolerance / 2D residual scale
    double geom = 0.0;    ///< point-coincidence tolerance in mm; 0 = pick 1e-9*a at build
    int max_iter = 100;

    void validate() const {
        if (!(quad > 0.0) || !(root > 0.0) || max_iter <= 0 || geom < 0.0)
            throw GearError("tolerances: all entries must be positive");
    }
};

/// Arc-length integral of the drive centrode divided by the center distance:
/// integral of w / (1+psi')^2 over [phi0, phi1]. Antisymmetric under swapping
/// the bounds and additive over concatenated intervals.
double arc_integral(const Transmission& tr, double phi0, double phi1, double quad_tol = 1e-10);

/// Center distance a = z1 * pi * m / I(0, 2*pi).
double center_distance(const Transmission& tr, double module, int z1, double quad_tol = 1e-10);

/// Everything the per-tooth geometry needs, resolved once per job:
/// center distance, total arc integral, tooth midpoints, rack and tolerances.
/// Immutable after construction; all evaluations are const and thread-safe.
class Context {
  public:
    /// Validates the rack, enforces z2 == z1, gates non-convex centrodes,
    /// then resolves a and the tooth midpoints chi(k).
    Context(Transmission tr, RackProfile rack, int z1, int z2, ToleranceSet tol = {});

    const Transmission& transmission() const { return tr_; }
    const RackProfile& rack() const { return rack_; }
    const ToleranceSet& tol() const { return tol_; }
    int z1() const { return z1_; }
    int z2() const { return z2_; }
    double module() const { return rack_.module; }
    double center_dist() const { return a_; }
    double total_arc_integral() const { return total_integral_; }

    /// Midpoint angle chi(k) of tooth k, 1-based, chi(1) = 0.
    double tooth_center(int k) const;
    const std::vector<double>& tooth_centers() const { return chi_; }

    /// Polar radii of the two centrodes; r + R = a for every phi.
    double drive_radius(double phi) const;
    double driven_radius(double phi) const;

    /// Centrode points: drive r(phi) e^{-i phi} about O1 = 0 (negatively
    /// oriented), driven -R(phi) e^{i psi(phi)} about O2 = 0 (positively
    /// oriented).
    Complex drive_point(double phi) const;
    Complex driven_point(double phi) const;

    /// Unit tangent vectors of the centrodes.
    Complex drive_tangent(double phi) const;
    Complex driven_tangent(double phi) const;

    double drive_curvature(double phi) const { return tr_.curvature(a_, phi); }
    double driven_curvature(double phi) const { return tr_.curvature_driven(a_, phi); }

    /// I(phi0, phi1); arc length between centrode points is a * I.
    double arc(double phi0, double phi1) const;

    /// Parallel curves at distance d > 0. The outer side carries the
    /// addendum curve (d = h_a), the inner side the dedendum curve (d = h_f).
    Complex drive_parallel(double d, ParallelSide side, double phi) const;
    Complex driven_parallel(double d, ParallelSide side, double phi) const;

    Complex drive_addendum(double phi) const {
        return drive_parallel(rack_.addendum, ParallelSide::outer, phi);
    }
    Complex drive_dedendum(double phi) const {
        return drive_parallel(rack_.dedendum, ParallelSide::inner, phi);
    }
    Complex driven_addendum(double phi) const {
        return driven_parallel(rack_.addendum, ParallelSide::outer, phi);
    }
    Complex driven_dedendum(double phi) const {
        return driven_parallel(rack_.dedendum, ParallelSide::inner, phi);
    }

    /// Map a signed arc length (in mm, measured from chi(k)) to the drive
    /// angle covering it; used to size root-search windows.
    double angle_at_arc(int k, double arc_mm) const;

  private:
    Transmission tr_;
    RackProfile rack_;
    ToleranceSet tol_;
    int z1_;
    int z2_;
    double total_integral_;
    double a_;
    std::vector<double> chi_;
};

}  // namespace ncgear
