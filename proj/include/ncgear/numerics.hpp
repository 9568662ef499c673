#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "ncgear/errors.hpp"
#include "ncgear/types.hpp"

namespace ncgear {

/// Adaptive Gauss-Kronrod (7,15) integration of f over [x0, x1] to the given
/// absolute tolerance. x0 > x1 yields the negated integral. Throws
/// QuadratureFailure if the tolerance cannot be met within the depth budget.
double integrate(const std::function<double(double)>& f, double x0, double x1, double abs_tol);

/// Result of a bracketed scalar solve.
struct RootResult {
    double x;         ///< root location
    double residual;  ///< |f(x)| at the returned point
    int iterations;
};

/// Newton iteration safeguarded by a bracket [lo, hi]; falls back to
/// bisection whenever a Newton step leaves the bracket or stalls.
/// f(lo) and f(hi) must have opposite signs (else RootNotBracketed).
RootResult newton_bracketed(const std::function<double(double)>& f,
                            const std::function<double(double)>& df, double lo, double hi,
                            double x_tol, int max_iter);

/// Derivative-free bracketed solve (bisection/secant hybrid); used where no
/// cheap analytic derivative exists.
RootResult brent(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 int max_iter);

/// All sign-change brackets of f on n+1 uniform samples of [lo, hi].
std::vector<std::pair<double, double>> scan_brackets(const std::function<double(double)>& f,
                                                     double lo, double hi, int n);

/// Result of a 2D solve.
struct Root2dResult {
    std::array<double, 2> x;
    double residual;  ///< Euclidean norm of F at the solution
    int iterations;
};

/// Damped Newton iteration on F: R^2 -> R^2 with finite-difference Jacobian
/// and a Levenberg-style fallback when the Jacobian is near singular.
/// Throws SolverDiverged (message = `label`) if the residual target is not
/// reached.
Root2dResult newton2d(const std::function<std::array<double, 2>(double, double)>& f, double x0,
                      double y0, double residual_tol, int max_iter, const char* label);

}  // namespace ncgear
