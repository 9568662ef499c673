#pragma once

#include <functional>
#include <string>

#include "ncgear/errors.hpp"
#include "ncgear/types.hpp"

namespace ncgear {

/// psi and its first three derivatives at one angle.
struct PsiDerivs {
    double psi;
    double d1;
    double d2;
    double d3;
};

/// The transmission function gamma = psi(phi) between the drive angle phi
/// and the driven angle gamma, together with its first three derivatives.
///
/// psi must be strictly increasing with a 2*pi/n-periodic derivative and
/// psi(2*pi) = 2*pi, so that both centrodes close after one revolution.
/// The supplied derivative callables are cross-checked against finite
/// differences at construction; a silent derivative bug would poison every
/// downstream curve.
///
/// Evaluation outside [0, 2*pi] uses the periodic extension
/// psi(phi + 2*pi*j) = psi(phi) + 2*pi*j.
class Transmission {
  public:
    using Fn = std::function<double(double)>;

    Transmission(Fn psi, Fn dpsi, Fn d2psi, Fn d3psi, int n, std::string name);

    /// Built-in family psi(phi) = phi - b*sin(phi). Convex drive centrodes
    /// require 0 <= b <= 2 - sqrt(2); b = 0 degenerates to a circular pair.
    static Transmission sinusoidal(double b);

    double psi(double phi) const;
    double dpsi(double phi) const;
    double d2psi(double phi) const;
    double d3psi(double phi) const;
    PsiDerivs derivs(double phi) const;

    /// w(phi) = sqrt(psi''^2 + psi'^2 (1+psi')^2), the normalising magnitude
    /// shared by the tangent fields of both centrodes. Strictly positive
    /// when psi' > 0.
    double tangent_scale(double phi) const;

    /// h(phi): angular rate of the drive centrode tangent, T' = i h T.
    double turn_rate(double phi) const;

    /// Driven analog: the driven tangent obeys T~' = i h~ T~.
    double turn_rate_driven(double phi) const;

    /// Oriented curvature of the drive centrode for center distance a.
    double curvature(double a, double phi) const;

    /// Oriented curvature of the driven centrode for center distance a.
    double curvature_driven(double a, double phi) const;

    int n() const { return n_; }
    const std::string& name() const { return name_; }

  private:
    void validate() const;

    Fn psi_, dpsi_, d2psi_, d3psi_;
    int n_;
    std::string name_;
};

}  // namespace ncgear
