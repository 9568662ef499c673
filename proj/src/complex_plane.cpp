#include "ncgear/complex_plane.hpp"

#include <cmath>

namespace ncgear {

Complex envelope_point(const LineFamilySample& sample, double tol) {
    const Complex d = sample.a - sample.b;
    const Complex d_deriv = sample.a_deriv - sample.b_deriv;

    const double denom = ext(d, d_deriv);
    if (!(std::abs(denom) >= tol)) {
        throw SingularFamily("envelope_point: stationary line family, |ext(A-B,(A-B)')| = " +
                             std::to_string(std::abs(denom)));
    }

    const double line_const = ext(sample.a, sample.b);
    // product rule: d/dphi ext(A,B) = ext(A',B) + ext(A,B')
    const double line_const_deriv = ext(sample.a_deriv, sample.b) + ext(sample.a, sample.b_deriv);

    Complex x = (line_const * d_deriv - line_const_deriv * d) / denom;
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
        throw SingularFamily("envelope_point: non-finite solution");
    }
    return x;
}

}  // namespace ncgear
