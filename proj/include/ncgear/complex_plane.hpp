#pragma once

#include "ncgear/errors.hpp"
#include "ncgear/types.hpp"

namespace ncgear {

/// Exterior product of two plane vectors encoded as complex numbers:
/// ext(A,B) = x_A*y_B - y_A*x_B, the signed area of the parallelogram
/// spanned by A and B. Bilinear and anticommutative; ext(1, A) = Im A.
inline double ext(Complex a, Complex b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

/// Two points of a moving straight line and their parameter derivatives,
/// all taken at one fixed value of the family parameter.
struct LineFamilySample {
    Complex a;        ///< first point of the line
    Complex b;        ///< second point, b != a
    Complex a_deriv;  ///< d a / d parameter
    Complex b_deriv;  ///< d b / d parameter
};

/// Default threshold for the stationary-family test, on the a=1 scale.
/// Callers working in millimetres scale it by a^2.
inline constexpr double default_envelope_tol = 1e-12;

/// Characteristic point of the envelope of the sampled line family.
///
/// The line through A and B satisfies ext(A-B, X) = ext(A,B); the envelope
/// point additionally satisfies the derivative of that equation. Solving the
/// resulting 2x2 system gives
///
///   X = [ ext(A,B) (A-B)' - ext(A,B)' (A-B) ] / ext(A-B, (A-B)')
///
/// Throws SingularFamily when |ext(A-B,(A-B)')| < tol, i.e. at an
/// inflection or stationary line where the envelope is undefined.
Complex envelope_point(const LineFamilySample& sample, double tol = default_envelope_tol);

}  // namespace ncgear
