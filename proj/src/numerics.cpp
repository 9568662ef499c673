#include "ncgear/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ncgear {
namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1,1] (QUADPACK qk15).
constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> gauss_weights = {0.129484966168870, 0.279705391489277,
                                                 0.381830050505119, 0.417959183673469};

struct GkEstimate {
    double kronrod;
    double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(c);
    double kron = kronrod_weights[7] * fc;
    double gauss = gauss_weights[3] * fc;

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double sum = f(c - dx) + f(c + dx);
        kron += kronrod_weights[j] * sum;
        if (j % 2 == 1) {
            gauss += gauss_weights[j / 2] * sum;
        }
    }
    kron *= half;
    gauss *= half;
    return {kron, std::abs(kron - gauss)};
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int depth) {
    const auto est = gk15(f, a, b);
    if (est.error <= abs_tol || est.error <= 1e-15 * std::abs(est.kronrod)) {
        return est.kronrod;
    }
    if (depth >= 60) {
        throw QuadratureFailure("integrate: tolerance not met after 60 bisections");
    }
    const double c = 0.5 * (a + b);
    return integrate_adaptive(f, a, c, 0.5 * abs_tol, depth + 1) +
           integrate_adaptive(f, c, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double x0, double x1, double abs_tol) {
    if (x0 == x1) {
        return 0.0;
    }
    if (x0 > x1) {
        return -integrate(f, x1, x0, abs_tol);
    }
    // Split long ranges per unit length so the local error budget stays even.
    const int pieces = std::max(1, static_cast<int>(std::ceil(x1 - x0)));
    double total = 0.0;
    for (int j = 0; j < pieces; ++j) {
        const double a = x0 + (x1 - x0) * j / pieces;
        const double b = x0 + (x1 - x0) * (j + 1) / pieces;
        total += integrate_adaptive(f, a, b, abs_tol / pieces, 0);
    }
    return total;
}

RootResult newton_bracketed(const std::function<double(double)>& f,
                            const std::function<double(double)>& df, double lo, double hi,
                            double x_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw RootNotBracketed("newton_bracketed: no sign change on [" + std::to_string(lo) +
                               ", " + std::to_string(hi) + "]");
    }
    const double lo0 = lo, hi0 = hi;

    // pure Newton steps drive the residual to machine level once the stop
    // criterion (often reached through bisection) has localised the root
    auto polish = [&](double x, double fx, int it) -> RootResult {
        for (int extra = 0; extra < 3 && fx != 0.0; ++extra) {
            const double d = df(x);
            if (d == 0.0) break;
            const double x_next = x - fx / d;
            if (!(x_next >= lo0 && x_next <= hi0)) break;
            const double f_next = f(x_next);
            if (!(std::abs(f_next) < std::abs(fx))) break;
            x = x_next;
            fx = f_next;
        }
        return {x, std::abs(fx), it};
    };

    double x = 0.5 * (lo + hi);
    for (int it = 1; it <= max_iter; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return {x, 0.0, it};
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }

        double step_to = x;
        const double d = df(x);
        if (d != 0.0) {
            step_to = x - fx / d;
        }
        if (!(step_to > lo && step_to < hi)) {
            step_to = 0.5 * (lo + hi);  // bisection fallback
        }
        const double step = std::abs(step_to - x);
        x = step_to;
        if (step <= x_tol * (1.0 + std::abs(x)) || hi - lo <= x_tol * (1.0 + std::abs(x))) {
            return polish(x, f(x), it);
        }
    }
    return polish(x, f(x), max_iter);
}

RootResult brent(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                 int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if ((fa > 0.0) == (fb > 0.0)) {
        throw RootNotBracketed("brent: no sign change on [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 1; it <= max_iter; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            return {b, std::abs(fb), it};
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return {b, std::abs(fb), max_iter};
}

std::vector<std::pair<double, double>> scan_brackets(const std::function<double(double)>& f,
                                                     double lo, double hi, int n) {
    std::vector<std::pair<double, double>> brackets;
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double fx = f(x);
        if (f_prev == 0.0) {
            brackets.emplace_back(x_prev, x_prev);
        } else if ((f_prev > 0.0) != (fx > 0.0)) {
            brackets.emplace_back(x_prev, x);
        }
        x_prev = x;
        f_prev = fx;
    }
    return brackets;
}

Root2dResult newton2d(const std::function<std::array<double, 2>(double, double)>& f, double x0,
                      double y0, double residual_tol, int max_iter, const char* label) {
    double x = x0, y = y0;
    auto norm = [](const std::array<double, 2>& v) { return std::hypot(v[0], v[1]); };

    std::array<double, 2> fv = f(x, y);
    double res = norm(fv);
    for (int it = 1; it <= max_iter; ++it) {
        if (res <= residual_tol) {
            return {{x, y}, res, it - 1};
        }
        const double hx = 1e-7 * (1.0 + std::abs(x));
        const double hy = 1e-7 * (1.0 + std::abs(y));
        const auto fxp = f(x + hx, y);
        const auto fxm = f(x - hx, y);
        const auto fyp = f(x, y + hy);
        const auto fym = f(x, y - hy);
        // column-major Jacobian entries
        const double j11 = (fxp[0] - fxm[0]) / (2.0 * hx);
        const double j21 = (fxp[1] - fxm[1]) / (2.0 * hx);
        const double j12 = (fyp[0] - fym[0]) / (2.0 * hy);
        const double j22 = (fyp[1] - fym[1]) / (2.0 * hy);

        double det = j11 * j22 - j12 * j21;
        double dx, dy;
        const double jscale = std::max({std::abs(j11), std::abs(j12), std::abs(j21), std::abs(j22), 1e-300});
        if (std::abs(det) > 1e-12 * jscale * jscale) {
            dx = -(j22 * fv[0] - j12 * fv[1]) / det;
            dy = -(-j21 * fv[0] + j11 * fv[1]) / det;
        } else {
            // Levenberg step on the normal equations when J is near singular.
            const double mu = 1e-6 * jscale * jscale;
            const double a11 = j11 * j11 + j21 * j21 + mu;
            const double a12 = j11 * j12 + j21 * j22;
            const double a22 = j12 * j12 + j22 * j22 + mu;
            const double g1 = j11 * fv[0] + j21 * fv[1];
            const double g2 = j12 * fv[0] + j22 * fv[1];
            const double adet = a11 * a22 - a12 * a12;
            dx = -(a22 * g1 - a12 * g2) / adet;
            dy = -(-a12 * g1 + a11 * g2) / adet;
        }

        // backtracking line search on the residual norm
        double t = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 30; ++ls) {
            const auto trial = f(x + t * dx, y + t * dy);
            const double tres = norm(trial);
            if (tres < res) {
                x += t * dx;
                y += t * dy;
                fv = trial;
                res = tres;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            break;  // stalled; report below
        }
    }
    if (res <= residual_tol) {
        return {{x, y}, res, max_iter};
    }
    throw SolverDiverged(std::string("newton2d: ") + label + " stalled at residual " +
                         std::to_string(res));
}

}  // namespace ncgear
