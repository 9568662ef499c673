#include "ncgear/centrodes.hpp"

#include <cmath>
#include <utility>

#include "ncgear/numerics.hpp"

namespace ncgear {
namespace {

// Convexity is required for rack generation: the drive centrode must keep
// kappa <= 0 and the driven one kappa~ >= 0. Evaluated on the a = 1 scale;
// the slack absorbs roundoff at isolated kappa = 0 points.
constexpr double convexity_slack = 1e-9;
constexpr int convexity_samples = 4096;

}  // namespace

double arc_integral(const Transmission& tr, double phi0, double phi1, double quad_tol) {
    return integrate(
        [&tr](double phi) {
            const double g = 1.0 + tr.dpsi(phi);
            return tr.tangent_scale(phi) / (g * g);
        },
        phi0, phi1, quad_tol);
}

double center_distance(const Transmission& tr, double module, int z1, double quad_tol) {
    if (!(module > 0.0)) throw GearError("center_distance: module must be positive");
    if (z1 < 3) throw GearError("center_distance: drive tooth count must be >= 3");
    return z1 * pi * module / arc_integral(tr, 0.0, two_pi, quad_tol);
}

Context::Context(Transmission tr, RackProfile rack, int z1, int z2, ToleranceSet tol)
    : tr_(std::move(tr)), rack_(rack), tol_(tol), z1_(z1), z2_(z2) {
    rack_.validate();
    tol_.validate();
    if (z1_ < 3) throw GearError("context: drive tooth count must be >= 3");
    if (z2_ != z1_) {
        throw GearError("context: z2 must equal z1; driven tooth spaces share the drive "
                        "tooth midpoints");
    }

    for (int i = 0; i <= convexity_samples; ++i) {
        const double phi = two_pi * i / convexity_samples;
        if (tr_.curvature(1.0, phi) > convexity_slack) {
            throw GearError("context: drive centrode is not convex (curvature > 0 at phi = " +
                            std::to_string(phi) + "); refusing synthesis");
        }
        if (tr_.curvature_driven(1.0, phi) < -convexity_slack) {
            throw GearError("context: driven centrode is not convex (curvature < 0 at phi = " +
                            std::to_string(phi) + "); refusing synthesis");
        }
    }

    total_integral_ = arc_integral(tr_, 0.0, two_pi, tol_.quad);
    a_ = z1_ * pi * rack_.module / total_integral_;
    if (tol_.geom == 0.0) {
        tol_.geom = 1e-9 * a_;
    }

    // chi(k) solves a * I(0, chi) = (k-1) * pi * m; the integrand is positive,
    // so the objective is strictly increasing.
    chi_.resize(z1_);
    chi_[0] = 0.0;
    for (int k = 2; k <= z1_; ++k) {
        const double target = (k - 1) * pi * rack_.module;
        auto f = [this, target](double phi) { return a_ * arc(0.0, phi) - target; };
        auto df = [this](double phi) {
            const double g = 1.0 + tr_.dpsi(phi);
            return a_ * tr_.tangent_scale(phi) / (g * g);
        };
        // try a window around the uniform-spacing seed; the full remaining
        // interval [chi(k-1), 2*pi] always brackets by monotonicity
        const double seed = two_pi * (k - 1) / z1_;
        double lo = std::max(chi_[k - 2], seed - two_pi / z1_);
        double hi = std::min(two_pi, seed + two_pi / z1_);
        if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
            lo = chi_[k - 2];
            hi = two_pi;
        }
        RootResult res = newton_bracketed(f, df, lo, hi, tol_.root, tol_.max_iter);
        chi_[k - 1] = res.x;
    }
}

double Context::tooth_center(int k) const {
    if (k < 1 || k > z1_) throw GearError("tooth_center: index out of range");
    return chi_[k - 1];
}

double Context::drive_radius(double phi) const {
    const double d1 = tr_.dpsi(phi);
    return a_ * d1 / (1.0 + d1);
}

double Context::driven_radius(double phi) const { return a_ / (1.0 + tr_.dpsi(phi)); }

Complex Context::drive_point(double phi) const {
    return drive_radius(phi) * std::exp(Complex(0.0, -phi));
}

Complex Context::driven_point(double phi) const {
    return -driven_radius(phi) * std::exp(Complex(0.0, tr_.psi(phi)));
}

Complex Context::drive_tangent(double phi) const {
    const PsiDerivs d = tr_.derivs(phi);
    const double w = tr_.tangent_scale(phi);
    const Complex pref(d.d2 / w, -d.d1 * (1.0 + d.d1) / w);
    return pref * std::exp(Complex(0.0, -phi));
}

Complex Context::driven_tangent(double phi) const {
    const PsiDerivs d = tr_.derivs(phi);
    const double w = tr_.tangent_scale(phi);
    const Complex pref(d.d2 / w, -d.d1 * (1.0 + d.d1) / w);
    return pref * std::exp(Complex(0.0, d.psi));
}

double Context::arc(double phi0, double phi1) const {
    return arc_integral(tr_, phi0, phi1, tol_.quad);
}

Complex Context::drive_parallel(double d, ParallelSide side, double phi) const {
    if (!(d > 0.0)) throw GearError("drive_parallel: distance must be positive");
    const double s = side == ParallelSide::outer ? +1.0 : -1.0;
    // outer parallel lies left of the negatively oriented drive centrode
    return drive_point(phi) + s * d * imag_unit * drive_tangent(phi);
}

Complex Context::driven_parallel(double d, ParallelSide side, double phi) const {
    if (!(d > 0.0)) throw GearError("driven_parallel: distance must be positive");
    const double s = side == ParallelSide::outer ? -1.0 : +1.0;
    // outer parallel lies right of the positively oriented driven centrode
    return driven_point(phi) + s * d * imag_unit * driven_tangent(phi);
}

double Context::angle_at_arc(int k, double arc_mm) const {
    const double chi_k = tooth_center(k);
    if (arc_mm == 0.0) return chi_k;
    auto f = [this, chi_k, arc_mm](double phi) { return a_ * arc(chi_k, phi) - arc_mm; };
    auto df = [this](double phi) {
        const double g = 1.0 + tr_.dpsi(phi);
        return a_ * tr_.tangent_scale(phi) / (g * g);
    };
    // f is strictly increasing; widen the window until it brackets.
    double span = std::abs(arc_mm) / a_ + 0.25;
    double lo = chi_k - span;
    double hi = chi_k + span;
    for (int attempt = 0; attempt < 12 && !(f(lo) < 0.0 && f(hi) > 0.0); ++attempt) {
        span *= 2.0;
        lo = chi_k - span;
        hi = chi_k + span;
    }
    return newton_bracketed(f, df, lo, hi, tol_.root, tol_.max_iter).x;
}

}  // namespace ncgear
