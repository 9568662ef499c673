#include "ncgear/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ncgear/numerics.hpp"

namespace ncgear {
namespace {

struct FlankCase {
    GearRole gear;
    Side side;
    // true when the flank/fillet transition sits at interval start and the
    // working branch extends from the cusp toward larger phi. Holds for the
    // drive "-" and driven "+" flanks; the other two mirror it.
    bool transition_first;

    std::function<Complex(double)> flank;
    std::function<Complex(double)> fillet;
    std::function<Complex(double)> addendum;
};

FlankCase make_case(const Context& ctx, GearRole gear, int k, Side side) {
    FlankCase c;
    c.gear = gear;
    c.side = side;
    c.transition_first = (gear == GearRole::drive) == (side == Side::minus);
    if (gear == GearRole::drive) {
        c.flank = [&ctx, k, side](double phi) { return flank_point(ctx, k, side, phi); };
        c.fillet = [&ctx, k, side](double phi) { return fillet_point(ctx, k, side, phi); };
        c.addendum = [&ctx](double phi) { return ctx.drive_addendum(phi); };
    } else {
        c.flank = [&ctx, k, side](double phi) { return flank_point_driven(ctx, k, side, phi); };
        c.fillet = [&ctx, k, side](double phi) { return fillet_point_driven(ctx, k, side, phi); };
        c.addendum = [&ctx](double phi) { return ctx.driven_addendum(phi); };
    }
    return c;
}

double dist_point_segment(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

// Coincidence system between the flank and the addendum curve near the tip.
struct TipSolution {
    double phi_flank;
    double phi_addendum;
};

TipSolution solve_tip(const Context& ctx, const FlankCase& c, int k) {
    const RackProfile& rack = ctx.rack();
    const double cs = std::cos(rack.alpha) * std::sin(rack.alpha);
    const double lambda_tip = (c.transition_first ? -1.0 : +1.0) * rack.addendum / cs;
    const double quarter_pitch = pi * ctx.module() / 4.0;
    const double arc_tip = side_sign(c.side) * quarter_pitch - lambda_tip;
    if (std::abs(arc_tip) > 2.5 * pi * ctx.module()) {
        throw InvalidGeometry("trim_flank: flank cannot reach the addendum curve (tooth " +
                              std::to_string(k) + ")");
    }
    const double seed_f = ctx.angle_at_arc(k, arc_tip);

    // seed the addendum parameter by a nearest-point scan around the tip;
    // the tip can trail the generating angle by most of a pitch, so scan two
    const double window = 2.0 * two_pi / ctx.z1();
    double seed_p = seed_f;
    double best = std::numeric_limits<double>::max();
    const Complex tip_guess = c.flank(seed_f);
    for (int i = 0; i <= 128; ++i) {
        const double phi = seed_f - window + 2.0 * window * i / 128;
        const double d = std::abs(c.addendum(phi) - tip_guess);
        if (d < best) {
            best = d;
            seed_p = phi;
        }
    }

    auto fn = [&c](double pf, double pp) -> std::array<double, 2> {
        const Complex d = c.flank(pf) - c.addendum(pp);
        return {d.real(), d.imag()};
    };
    const auto res = newton2d(fn, seed_f, seed_p, ctx.tol().root * ctx.center_dist(),
                              ctx.tol().max_iter, "flank/addendum coincidence");
    return {res.x[0], res.x[1]};
}

// Coincidence system between the working flank branch and the fillet,
// used when the flank is undercut. Returns the admissible root with the
// largest surviving flank extent and whether several roots were seen.
struct UndercutSolution {
    double phi_flank;
    double phi_fillet;
    bool multiple;
};

UndercutSolution solve_undercut(const Context& ctx, const FlankCase& c, int k, double phi_cusp,
                                double phi_tip_seed, double phi_contact, double phi_ded) {
    const double dir = c.transition_first ? +1.0 : -1.0;

    double f_lo = std::min(phi_cusp, phi_tip_seed);
    double f_hi = std::max(phi_cusp, phi_tip_seed);
    // keep clear of the cusp itself, where the flank derivative vanishes
    const double f_pad = 1e-4 * (f_hi - f_lo);
    f_lo += f_pad;
    f_hi -= f_pad;

    double a_lo = std::min(phi_contact, phi_ded);
    double a_hi = std::max(phi_contact, phi_ded);
    const double a_pad = 0.25 * (a_hi - a_lo);
    a_lo -= a_pad;
    a_hi += a_pad;

    auto fn = [&c](double pf, double pa) -> std::array<double, 2> {
        const Complex d = c.flank(pf) - c.fillet(pa);
        return {d.real(), d.imag()};
    };

    constexpr int grid = 48;
    std::vector<double> cost((grid + 1) * (grid + 1));
    for (int i = 0; i <= grid; ++i) {
        const double pf = f_lo + (f_hi - f_lo) * i / grid;
        for (int j = 0; j <= grid; ++j) {
            const double pa = a_lo + (a_hi - a_lo) * j / grid;
            const auto v = fn(pf, pa);
            cost[i * (grid + 1) + j] = v[0] * v[0] + v[1] * v[1];
        }
    }

    // local minima of the sampled cost, best first
    std::vector<std::pair<double, std::pair<int, int>>> seeds;
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; j <= grid; ++j) {
            const double v = cost[i * (grid + 1) + j];
            auto at = [&](int ii, int jj) {
                return cost[std::clamp(ii, 0, grid) * (grid + 1) + std::clamp(jj, 0, grid)];
            };
            if (v <= at(i - 1, j) && v <= at(i + 1, j) && v <= at(i, j - 1) && v <= at(i, j + 1)) {
                seeds.push_back({v, {i, j}});
            }
        }
    }
    std::sort(seeds.begin(), seeds.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<UndercutSolution> roots;
    const double residual_tol = ctx.tol().root * ctx.center_dist();
    const double admissible_slack = 1e-9 * (1.0 + std::abs(phi_cusp));
    int tried = 0;
    for (const auto& seed : seeds) {
        if (++tried > 6) break;
        const double pf0 = f_lo + (f_hi - f_lo) * seed.second.first / grid;
        const double pa0 = a_lo + (a_hi - a_lo) * seed.second.second / grid;
        try {
            const auto res =
                newton2d(fn, pf0, pa0, residual_tol, ctx.tol().max_iter, "flank/fillet coincidence");
            const double pf = res.x[0];
            if (dir * (pf - phi_cusp) < -admissible_slack) {
                continue;  // intersection on the cusp loop, not the working branch
            }
            bool duplicate = false;
            for (const auto& r : roots) {
                if (std::abs(r.phi_flank - pf) < 1e-7) duplicate = true;
            }
            if (!duplicate) roots.push_back({pf, res.x[1], false});
        } catch (const SolverDiverged&) {
            continue;
        }
    }
    if (roots.empty()) {
        throw SolverDiverged("trim_flank: flank/fillet coincidence system unsolved for " +
                             std::string(gear_name(c.gear)) + " tooth " + std::to_string(k) +
                             " side " + side_name(c.side));
    }
    // largest working-flank extent: boundary as close to the cusp as allowed
    auto best = std::min_element(roots.begin(), roots.end(),
                                 [dir](const UndercutSolution& x, const UndercutSolution& y) {
                                     return dir * x.phi_flank < dir * y.phi_flank;
                                 });
    return {best->phi_flank, best->phi_fillet, roots.size() > 1};
}

}  // namespace

FlankSegments trim_flank(const Context& ctx, GearRole gear, int k, Side side) {
    const FlankCase c = make_case(ctx, gear, k, side);

    FlankSegments seg;
    seg.k = k;
    seg.side = side;

    const bool drive = gear == GearRole::drive;
    try {
        seg.phi_cusp =
            drive ? singular_point(ctx, k, side) : singular_point_driven(ctx, k, side);
        seg.kappa_cusp =
            drive ? ctx.drive_curvature(seg.phi_cusp) : ctx.driven_curvature(seg.phi_cusp);
        seg.undercut = (drive ? detail::classify_undercut_at(ctx, seg.phi_cusp)
                              : detail::classify_undercut_driven_at(ctx, seg.phi_cusp)) ==
                       FlankStatus::undercut;
    } catch (const NoSingularPoint&) {
        seg.has_cusp = false;
        seg.undercut = false;
    }

    seg.phi_contact =
        drive ? flank_fillet_contact(ctx, k, side) : flank_fillet_contact_driven(ctx, k, side);
    const double phi_ded =
        drive ? fillet_dedendum_contact(ctx, k, side) : fillet_dedendum_contact_driven(ctx, k, side);

    TipSolution tip{};
    try {
        tip = solve_tip(ctx, c, k);
    } catch (const SolverDiverged& e) {
        throw SolverDiverged(std::string(e.what()) + " (" + gear_name(gear) + " tooth " +
                             std::to_string(k) + " side " + side_name(side) + ")");
    }
    seg.phi_tip = tip.phi_addendum;

    double phi_f_boundary = seg.phi_contact;  // transition parameter on the flank
    double phi_a_boundary = seg.phi_contact;  // transition parameter on the fillet
    if (seg.undercut) {
        const auto sol =
            solve_undercut(ctx, c, k, seg.phi_cusp, tip.phi_flank, seg.phi_contact, phi_ded);
        phi_f_boundary = sol.phi_flank;
        phi_a_boundary = sol.phi_fillet;
        seg.multiple_roots = sol.multiple;
    }

    if (c.transition_first) {
        seg.phi_flank = {phi_f_boundary, tip.phi_flank};
        seg.phi_fillet = {phi_a_boundary, phi_ded};
    } else {
        seg.phi_flank = {tip.phi_flank, phi_f_boundary};
        seg.phi_fillet = {phi_ded, phi_a_boundary};
    }
    if (!(seg.phi_flank[0] < seg.phi_flank[1])) {
        throw InvalidGeometry("trim_flank: working flank vanished on " +
                              std::string(gear_name(gear)) + " tooth " + std::to_string(k) +
                              " side " + side_name(side));
    }
    return seg;
}

std::vector<std::pair<double, Complex>> sample_curve(const std::function<Complex(double)>& f,
                                                     double t0, double t1, double chord_tol) {
    std::vector<std::pair<double, Complex>> out;
    if (t0 == t1) {
        out.push_back({t0, f(t0)});
        return out;
    }
    out.push_back({t0, f(t0)});
    const std::function<void(double, Complex, double, Complex, int)> refine =
        [&](double a, Complex pa, double b, Complex pb, int depth) {
            const double tm = 0.5 * (a + b);
            const Complex pm = f(tm);
            const bool split = depth < 3 || (dist_point_segment(pm, pa, pb) > chord_tol && depth < 24);
            if (split) {
                refine(a, pa, tm, pm, depth + 1);
                refine(tm, pm, b, pb, depth + 1);
            } else {
                out.push_back({tm, pm});
                out.push_back({b, pb});
            }
        };
    refine(t0, f(t0), t1, f(t1), 0);
    return out;
}

namespace {

struct ChainBuilder {
    const Context& ctx;
    GearProfile profile;

    void append(const std::vector<std::pair<double, Complex>>& samples,
                ProfileVertex::Source source, int k, int side_tag) {
        const double join_tol = std::max(ctx.tol().geom, 1e-7 * ctx.center_dist());
        std::size_t start = 0;
        if (!profile.vertices.empty()) {
            const Complex last = profile.vertices.back().point;
            if (std::abs(samples.front().second - last) > join_tol) {
                throw ClosureFailure("assemble: segment junction mismatch of " +
                                     std::to_string(std::abs(samples.front().second - last)) +
                                     " mm at tooth " + std::to_string(k));
            }
            start = 1;
        }
        for (std::size_t i = start; i < samples.size(); ++i) {
            profile.vertices.push_back(
                {samples[i].second, source, k, side_tag, samples[i].first});
        }
    }

    void close() {
        const double join_tol = std::max(ctx.tol().geom, 1e-7 * ctx.center_dist());
        const double gap = std::abs(profile.vertices.back().point - profile.vertices.front().point);
        if (gap > join_tol) {
            throw ClosureFailure("assemble: profile endpoints differ by " + std::to_string(gap) +
                                 " mm");
        }
        profile.vertices.pop_back();
        profile.closed = true;
        profile.closure_gap = gap;
    }
};

}  // namespace

Assembly assemble(const Context& ctx) {
    Assembly out;
    SynthesisReport& rep = out.report;
    rep.center_distance = ctx.center_dist();
    rep.total_arc_integral = ctx.total_arc_integral();
    rep.undercut_threshold = ctx.rack().undercut_threshold();
    rep.tooth_centers = ctx.tooth_centers();
    rep.sizing = sizing_bounds(
        ctx.transmission(),
        {ctx.rack().dedendum / ctx.module(), ctx.rack().fillet_radius / ctx.module(),
         ctx.rack().alpha},
        ctx.tol().quad);

    for (int k = 1; k <= ctx.z1(); ++k) {
        rep.drive_flanks.push_back(trim_flank(ctx, GearRole::drive, k, Side::minus));
        rep.drive_flanks.push_back(trim_flank(ctx, GearRole::drive, k, Side::plus));
    }
    for (int k = 1; k <= ctx.z2(); ++k) {
        rep.driven_flanks.push_back(trim_flank(ctx, GearRole::driven, k, Side::minus));
        rep.driven_flanks.push_back(trim_flank(ctx, GearRole::driven, k, Side::plus));
    }
    auto drive_seg = [&rep](int k, Side s) -> const FlankSegments& {
        return rep.drive_flanks[2 * (k - 1) + (s == Side::plus ? 1 : 0)];
    };
    auto driven_seg = [&rep](int k, Side s) -> const FlankSegments& {
        return rep.driven_flanks[2 * (k - 1) + (s == Side::plus ? 1 : 0)];
    };

    const double chord_tol = 1e-4 * ctx.module();
    using Src = ProfileVertex::Source;

    {  // drive gear: fillet-, flank-, tip arc, flank+, fillet+, root arc
        ChainBuilder chain{ctx, {}};
        for (int k = 1; k <= ctx.z1(); ++k) {
            const FlankSegments& fm = drive_seg(k, Side::minus);
            const FlankSegments& fp = drive_seg(k, Side::plus);
            auto flank_m = [&](double phi) { return flank_point(ctx, k, Side::minus, phi); };
            auto flank_p = [&](double phi) { return flank_point(ctx, k, Side::plus, phi); };
            auto fil_m = [&](double phi) { return fillet_point(ctx, k, Side::minus, phi); };
            auto fil_p = [&](double phi) { return fillet_point(ctx, k, Side::plus, phi); };
            auto add = [&](double phi) { return ctx.drive_addendum(phi); };
            auto ded = [&](double phi) { return ctx.drive_dedendum(phi); };

            chain.append(sample_curve(fil_m, fm.phi_fillet[1], fm.phi_fillet[0], chord_tol),
                         Src::fillet, k, -1);
            chain.append(sample_curve(flank_m, fm.phi_flank[0], fm.phi_flank[1], chord_tol),
                         Src::flank, k, -1);
            chain.append(sample_curve(add, fm.phi_tip, fp.phi_tip, chord_tol), Src::addendum, k, 0);
            chain.append(sample_curve(flank_p, fp.phi_flank[0], fp.phi_flank[1], chord_tol),
                         Src::flank, k, +1);
            chain.append(sample_curve(fil_p, fp.phi_fillet[1], fp.phi_fillet[0], chord_tol),
                         Src::fillet, k, +1);

            const FlankSegments& next = drive_seg(k == ctx.z1() ? 1 : k + 1, Side::minus);
            const double arc_from = fp.phi_fillet[0];
            const double arc_to = (k == ctx.z1() ? two_pi : 0.0) + next.phi_fillet[1];
            chain.append(sample_curve(ded, arc_from, arc_to, chord_tol), Src::dedendum, k, 0);
        }
        chain.close();
        out.drive = std::move(chain.profile);
    }

    {  // driven gear: flank-, fillet-, root arc, fillet+, flank+, tip arc
        ChainBuilder chain{ctx, {}};
        for (int k = 1; k <= ctx.z2(); ++k) {
            const FlankSegments& fm = driven_seg(k, Side::minus);
            const FlankSegments& fp = driven_seg(k, Side::plus);
            auto flank_m = [&](double phi) { return flank_point_driven(ctx, k, Side::minus, phi); };
            auto flank_p = [&](double phi) { return flank_point_driven(ctx, k, Side::plus, phi); };
            auto fil_m = [&](double phi) { return fillet_point_driven(ctx, k, Side::minus, phi); };
            auto fil_p = [&](double phi) { return fillet_point_driven(ctx, k, Side::plus, phi); };
            auto add = [&](double phi) { return ctx.driven_addendum(phi); };
            auto ded = [&](double phi) { return ctx.driven_dedendum(phi); };

            chain.append(sample_curve(flank_m, fm.phi_flank[0], fm.phi_flank[1], chord_tol),
                         Src::flank, k, -1);
            chain.append(sample_curve(fil_m, fm.phi_fillet[1], fm.phi_fillet[0], chord_tol),
                         Src::fillet, k, -1);
            chain.append(sample_curve(ded, fm.phi_fillet[0], fp.phi_fillet[1], chord_tol),
                         Src::dedendum, k, 0);
            chain.append(sample_curve(fil_p, fp.phi_fillet[1], fp.phi_fillet[0], chord_tol),
                         Src::fillet, k, +1);
            chain.append(sample_curve(flank_p, fp.phi_flank[0], fp.phi_flank[1], chord_tol),
                         Src::flank, k, +1);

            const FlankSegments& next = driven_seg(k == ctx.z2() ? 1 : k + 1, Side::minus);
            const double arc_from = fp.phi_tip;
            const double arc_to = (k == ctx.z2() ? two_pi : 0.0) + next.phi_tip;
            chain.append(sample_curve(add, arc_from, arc_to, chord_tol), Src::addendum, k, 0);
        }
        chain.close();
        out.driven = std::move(chain.profile);
    }
    return out;
}

namespace {

bool in_interval_wrapped(double phi, double lo, double hi) {
    for (const double cand : {phi, phi - two_pi, phi + two_pi}) {
        if (cand >= lo && cand <= hi) return true;
    }
    return false;
}

}  // namespace

MeshReport mesh_verify(const Context& ctx, const SynthesisReport& report, int samples) {
    MeshReport mesh;
    mesh.samples = samples;
    const double a = ctx.center_dist();

    for (int i = 0; i < samples; ++i) {
        const double phi = two_pi * i / samples;
        for (std::size_t row = 0; row < report.drive_flanks.size(); ++row) {
            const FlankSegments& df = report.drive_flanks[row];
            const FlankSegments& gf = report.driven_flanks[row];
            double phi_use = phi;
            bool active = false;
            for (const double cand : {phi, phi - two_pi, phi + two_pi}) {
                if (cand >= df.phi_flank[0] && cand <= df.phi_flank[1] &&
                    in_interval_wrapped(cand, gf.phi_flank[0], gf.phi_flank[1])) {
                    phi_use = cand;
                    active = true;
                    break;
                }
            }
            if (!active) continue;
            ++mesh.active_checks;

            const Side side = df.side;
            const int k = df.k;
            const Complex fixed_drive =
                flank_point(ctx, k, side, phi_use) * std::exp(Complex(0.0, phi_use));
            const Complex driven_local = flank_point_driven(ctx, k, side, phi_use);
            const Complex fixed_driven =
                a + driven_local * std::exp(Complex(0.0, -ctx.transmission().psi(phi_use)));

            mesh.max_fixed_frame_deviation =
                std::max(mesh.max_fixed_frame_deviation, std::abs(fixed_drive - fixed_driven));
            mesh.max_contact_height =
                std::max(mesh.max_contact_height, std::abs(fixed_drive.imag()));

            // driven rotation that brings the driven flank point onto the
            // fixed contact point; must reproduce psi(phi)
            const Complex ratio = (fixed_drive - a) / driven_local;
            const double gamma_err =
                std::abs(std::arg(ratio * std::exp(Complex(0.0, ctx.transmission().psi(phi_use)))));
            mesh.max_transmission_error = std::max(mesh.max_transmission_error, gamma_err);
        }
    }
    return mesh;
}

ProfileCheck validate_profile(const GearProfile& profile) {
    ProfileCheck check;
    const auto& v = profile.vertices;
    const std::size_t n = v.size();
    if (n < 3) return check;

    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Complex& p = v[i].point;
        const Complex& q = v[(i + 1) % n].point;
        area2 += p.real() * q.imag() - q.real() * p.imag();
    }
    check.signed_area = 0.5 * area2;

    // segment-pair scan with bounding-box rejection; adjacent pairs share an
    // endpoint by construction and are skipped
    auto orient = [](Complex a, Complex b, Complex c) {
        return (b.real() - a.real()) * (c.imag() - a.imag()) -
               (b.imag() - a.imag()) * (c.real() - a.real());
    };
    for (std::size_t i = 0; i < n && !check.self_intersects; ++i) {
        const Complex a = v[i].point;
        const Complex b = v[(i + 1) % n].point;
        const double ix0 = std::min(a.real(), b.real()), ix1 = std::max(a.real(), b.real());
        const double iy0 = std::min(a.imag(), b.imag()), iy1 = std::max(a.imag(), b.imag());
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // closing edge adjacency
            const Complex c = v[j].point;
            const Complex d = v[(j + 1) % n].point;
            if (std::max(c.real(), d.real()) < ix0 || std::min(c.real(), d.real()) > ix1 ||
                std::max(c.imag(), d.imag()) < iy0 || std::min(c.imag(), d.imag()) > iy1) {
                continue;
            }
            const double o1 = orient(a, b, c), o2 = orient(a, b, d);
            const double o3 = orient(c, d, a), o4 = orient(c, d, b);
            if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) {
                check.self_intersects = true;
                break;
            }
        }
    }
    return check;
}

}  // namespace ncgear
