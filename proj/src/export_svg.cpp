#include "ncgear/export_svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ncgear/base_involute.hpp"
#include "ncgear/report_io.hpp"

namespace ncgear {
namespace {

struct Bounds {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    void grow(Complex p) {
        x0 = std::min(x0, p.real());
        y0 = std::min(y0, p.imag());
        x1 = std::max(x1, p.real());
        y1 = std::max(y1, p.imag());
    }
};

std::string path_data(const std::vector<Complex>& pts, bool close) {
    std::ostringstream d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        d << (i == 0 ? "M" : "L") << format_g9(pts[i].real()) << " " << format_g9(pts[i].imag());
    }
    if (close) d << "Z";
    return d.str();
}

void emit_path(std::ostringstream& out, const std::vector<Complex>& pts, bool close,
               const char* style) {
    out << "  <path d=\"" << path_data(pts, close) << "\" " << style << "/>\n";
}

}  // namespace

std::string svg_document(const Context& ctx, const Assembly& assembly, const SvgOptions& options) {
    const double a = ctx.center_dist();
    const double pose = options.pose_phi;
    const Complex drive_rot = std::exp(Complex(0.0, pose));
    const Complex driven_rot = std::exp(Complex(0.0, -ctx.transmission().psi(pose)));

    std::vector<Complex> drive_pts;
    drive_pts.reserve(assembly.drive.vertices.size());
    for (const auto& v : assembly.drive.vertices) drive_pts.push_back(v.point * drive_rot);

    std::vector<Complex> driven_pts;
    driven_pts.reserve(assembly.driven.vertices.size());
    for (const auto& v : assembly.driven.vertices) driven_pts.push_back(v.point * driven_rot + a);

    constexpr int centrode_samples = 720;
    std::vector<Complex> drive_centrode, driven_centrode;
    for (int i = 0; i <= centrode_samples; ++i) {
        const double phi = two_pi * i / centrode_samples;
        drive_centrode.push_back(ctx.drive_point(phi) * drive_rot);
        driven_centrode.push_back(ctx.driven_point(phi) * driven_rot + a);
    }

    Bounds b;
    for (const auto& p : drive_pts) b.grow(p);
    for (const auto& p : driven_pts) b.grow(p);
    for (const auto& p : drive_centrode) b.grow(p);
    for (const auto& p : driven_centrode) b.grow(p);

    std::vector<std::vector<Complex>> base_layers[4];
    const char* base_names[4] = {"base-drive-minus", "base-drive-plus", "base-driven-minus",
                                 "base-driven-plus"};
    if (options.base_curves) {
        int layer = 0;
        for (GearRole gear : {GearRole::drive, GearRole::driven}) {
            for (Side side : {Side::minus, Side::plus}) {
                const auto samples =
                    base_curve_samples(ctx, gear, side, options.base_curve_samples);
                std::vector<Complex> current;
                const Complex rot = gear == GearRole::drive ? drive_rot : driven_rot;
                const Complex shift = gear == GearRole::drive ? Complex{0.0, 0.0} : Complex{a, 0.0};
                for (const auto& s : samples) {
                    if (!s.regular) {
                        if (current.size() > 1) base_layers[layer].push_back(current);
                        current.clear();
                        continue;
                    }
                    const Complex p = s.point * rot + shift;
                    // clip far-away points so the viewBox stays near the gears
                    if (std::abs(p - Complex(a / 2.0, 0.0)) > 2.0 * a) {
                        if (current.size() > 1) base_layers[layer].push_back(current);
                        current.clear();
                        continue;
                    }
                    current.push_back(p);
                }
                if (current.size() > 1) base_layers[layer].push_back(current);
                ++layer;
            }
        }
    }

    const double margin = 0.05 * std::max(b.x1 - b.x0, b.y1 - b.y0) + 1.0;
    const double x0 = b.x0 - margin, y0 = b.y0 - margin;
    const double width = (b.x1 - b.x0) + 2 * margin, height = (b.y1 - b.y0) + 2 * margin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    // viewBox covers the y-mirrored geometry; the scale(1,-1) group keeps
    // path data in model millimetres with y pointing up
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_g9(x0) << " "
        << format_g9(-(y0 + height)) << " " << format_g9(width) << " " << format_g9(height)
        << "\" width=\"" << format_g9(width) << "mm\" height=\"" << format_g9(height)
        << "mm\">\n";
    out << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linejoin=\"round\">\n";

    out << " <g id=\"centrodes\" stroke=\"#999999\" stroke-width=\"0.08\" stroke-dasharray=\"0.8 0.8\">\n";
    emit_path(out, drive_centrode, false, "");
    emit_path(out, driven_centrode, false, "");
    out << " </g>\n";

    out << " <g id=\"drive-profile\" stroke=\"#1f4e9c\" stroke-width=\"0.12\">\n";
    emit_path(out, drive_pts, true, "");
    out << " </g>\n";
    out << " <g id=\"driven-profile\" stroke=\"#9c1f1f\" stroke-width=\"0.12\">\n";
    emit_path(out, driven_pts, true, "");
    out << " </g>\n";

    if (options.base_curves) {
        const char* styles[4] = {"#2a9d2a", "#2a9d8f", "#b07a1f", "#7a1fb0"};
        for (int layer = 0; layer < 4; ++layer) {
            out << " <g id=\"" << base_names[layer] << "\" stroke=\"" << styles[layer]
                << "\" stroke-width=\"0.08\">\n";
            for (const auto& run : base_layers[layer]) emit_path(out, run, false, "");
            out << " </g>\n";
        }
    }

    const double r_pose = ctx.drive_radius(pose);
    out << " <g id=\"markers\" stroke=\"#000000\" stroke-width=\"0.1\">\n";
    out << "  <circle cx=\"0\" cy=\"0\" r=\"0.6\"/>\n";
    out << "  <circle cx=\"" << format_g9(a) << "\" cy=\"0\" r=\"0.6\"/>\n";
    out << "  <circle cx=\"" << format_g9(r_pose) << "\" cy=\"0\" r=\"0.3\" stroke=\"#007700\"/>\n";
    out << " </g>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace ncgear
