#include "ncgear/transmission.hpp"

#include <cmath>
#include <utility>

namespace ncgear {
namespace {

constexpr int validation_samples = 4096;

// Reduce phi to [0, 2*pi) and count the whole turns removed.
std::pair<double, double> reduce_angle(double phi) {
    const double turns = std::floor(phi / two_pi);
    double reduced = phi - two_pi * turns;
    if (reduced >= two_pi) {  // guard against rounding at the seam
        reduced -= two_pi;
        return {reduced, turns + 1.0};
    }
    return {reduced, turns};
}

}  // namespace

Transmission::Transmission(Fn psi, Fn dpsi, Fn d2psi, Fn d3psi, int n, std::string name)
    : psi_(std::move(psi)),
      dpsi_(std::move(dpsi)),
      d2psi_(std::move(d2psi)),
      d3psi_(std::move(d3psi)),
      n_(n),
      name_(std::move(name)) {
    if (n_ < 1) {
        throw GearError("transmission '" + name_ + "': periodicity divisor n must be >= 1");
    }
    validate();
}

Transmission Transmission::sinusoidal(double b) {
    return Transmission([b](double phi) { return phi - b * std::sin(phi); },
                        [b](double phi) { return 1.0 - b * std::cos(phi); },
                        [b](double phi) { return b * std::sin(phi); },
                        [b](double phi) { return b * std::cos(phi); }, 1, "sinusoidal");
}

void Transmission::validate() const {
    for (int i = 0; i <= validation_samples; ++i) {
        const double phi = two_pi * i / validation_samples;
        const double d1 = dpsi_(phi);
        if (!(d1 > 0.0)) {
            throw GearError("transmission '" + name_ + "': invariant dpsi > 0 violated at phi = " +
                            std::to_string(phi) + " (dpsi = " + std::to_string(d1) + ")");
        }
        const double period = two_pi / n_;
        const double wrapped = phi + period <= two_pi ? phi + period : phi + period - two_pi;
        if (std::abs(d1 - dpsi_(wrapped)) > 1e-9) {
            throw GearError("transmission '" + name_ +
                            "': dpsi is not 2*pi/n-periodic at phi = " + std::to_string(phi));
        }
    }
    if (std::abs(psi_(two_pi) - two_pi) > 1e-9) {
        throw GearError("transmission '" + name_ + "': invariant psi(2*pi) = 2*pi violated (psi(2*pi) = " +
                        std::to_string(psi_(two_pi)) + "); unequal-revolution pairs are unsupported");
    }

    // Derivative consistency against central differences of the next-lower
    // supplied function. Tolerance is relative to max(1, |value|).
    for (int i = 0; i < 128; ++i) {
        const double phi = 1e-3 + (two_pi - 2e-3) * i / 127;
        const double h = 1e-6 * (1.0 + std::abs(phi));
        const double fd1 = (psi_(phi + h) - psi_(phi - h)) / (2.0 * h);
        const double fd2 = (dpsi_(phi + h) - dpsi_(phi - h)) / (2.0 * h);
        const double fd3 = (d2psi_(phi + h) - d2psi_(phi - h)) / (2.0 * h);
        const double d1 = dpsi_(phi), d2 = d2psi_(phi), d3 = d3psi_(phi);
        if (std::abs(fd1 - d1) > 1e-5 * std::max(1.0, std::abs(d1)) ||
            std::abs(fd2 - d2) > 1e-5 * std::max(1.0, std::abs(d2)) ||
            std::abs(fd3 - d3) > 1e-5 * std::max(1.0, std::abs(d3))) {
            throw GearError("transmission '" + name_ +
                            "': supplied derivatives disagree with finite differences at phi = " +
                            std::to_string(phi));
        }
    }
}

double Transmission::psi(double phi) const {
    const auto [reduced, turns] = reduce_angle(phi);
    return psi_(reduced) + two_pi * turns;
}

double Transmission::dpsi(double phi) const { return dpsi_(reduce_angle(phi).first); }

double Transmission::d2psi(double phi) const { return d2psi_(reduce_angle(phi).first); }

double Transmission::d3psi(double phi) const { return d3psi_(reduce_angle(phi).first); }

PsiDerivs Transmission::derivs(double phi) const {
    const auto [reduced, turns] = reduce_angle(phi);
    return {psi_(reduced) + two_pi * turns, dpsi_(reduced), d2psi_(reduced), d3psi_(reduced)};
}

double Transmission::tangent_scale(double phi) const {
    const PsiDerivs d = derivs(phi);
    const double g = 1.0 + d.d1;
    return std::sqrt(d.d2 * d.d2 + d.d1 * d.d1 * g * g);
}

double Transmission::turn_rate(double phi) const {
    const PsiDerivs d = derivs(phi);
    const double g = 1.0 + d.d1;
    const double w2 = d.d2 * d.d2 + d.d1 * d.d1 * g * g;
    return g * (d.d1 * (d.d3 - d.d1 - d.d1 * d.d1) - 2.0 * d.d2 * d.d2) / w2;
}

double Transmission::turn_rate_driven(double phi) const {
    const PsiDerivs d = derivs(phi);
    const double g = 1.0 + d.d1;
    const double w2 = d.d2 * d.d2 + d.d1 * d.d1 * g * g;
    return g * (d.d1 * (d.d3 + d.d1 * d.d1 + d.d1 * d.d1 * d.d1) - d.d2 * d.d2) / w2;
}

double Transmission::curvature(double a, double phi) const {
    const PsiDerivs d = derivs(phi);
    const double g = 1.0 + d.d1;
    const double w2 = d.d2 * d.d2 + d.d1 * d.d1 * g * g;
    const double w = std::sqrt(w2);
    return g * g * g * (d.d1 * (d.d3 - d.d1 - d.d1 * d.d1) - 2.0 * d.d2 * d.d2) / (a * w2 * w);
}

double Transmission::curvature_driven(double a, double phi) const {
    const PsiDerivs d = derivs(phi);
    const double g = 1.0 + d.d1;
    const double w2 = d.d2 * d.d2 + d.d1 * d.d1 * g * g;
    const double w = std::sqrt(w2);
    return g * g * g * (d.d1 * (d.d3 + d.d1 * d.d1 + d.d1 * d.d1 * d.d1) - d.d2 * d.d2) /
           (a * w2 * w);
}

}  // namespace ncgear
