#include "ncgear/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <iomanip>

namespace ncgear {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_g6(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

ordered_json flank_row(const FlankSegments& f) {
    ordered_json row;
    row["k"] = f.k;
    row["side"] = side_name(f.side);
    row["undercut"] = f.undercut;
    if (f.has_cusp) {
        row["phi_cusp"] = format_g9(f.phi_cusp);
        row["kappa_cusp"] = format_g9(f.kappa_cusp);
    } else {
        row["phi_cusp"] = nullptr;
        row["kappa_cusp"] = nullptr;
    }
    row["phi_contact"] = format_g9(f.phi_contact);
    row["phi_flank"] = {format_g9(f.phi_flank[0]), format_g9(f.phi_flank[1])};
    row["phi_fillet"] = {format_g9(f.phi_fillet[0]), format_g9(f.phi_fillet[1])};
    row["phi_tip"] = format_g9(f.phi_tip);
    if (f.multiple_roots) row["multiple_roots"] = true;
    return row;
}

void text_undercut_table(std::ostringstream& out, const std::vector<FlankSegments>& flanks,
                         const char* title) {
    out << title << "\n";
    out << "  k   phi_S,-      kappa(-)     UC-   phi_S,+      kappa(+)     UC+\n";
    for (std::size_t i = 0; i + 1 < flanks.size(); i += 2) {
        const FlankSegments& m = flanks[i];
        const FlankSegments& p = flanks[i + 1];
        out << std::setw(3) << m.k;
        auto cell = [&out](const FlankSegments& f) {
            if (f.has_cusp) {
                out << std::setw(13) << format_g6(f.phi_cusp) << std::setw(13)
                    << format_g6(f.kappa_cusp);
            } else {
                out << std::setw(13) << "-" << std::setw(13) << "-";
            }
            out << std::setw(5) << (f.undercut ? "*" : "-");
        };
        cell(m);
        out << " ";
        cell(p);
        out << "\n";
    }
}

}  // namespace

std::string format_g9(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

ordered_json report_to_json(const SynthesisReport& report, const Context& ctx) {
    ordered_json j;
    j["transmission"] = ctx.transmission().name();
    j["module"] = format_g9(ctx.module());
    j["z1"] = ctx.z1();
    j["z2"] = ctx.z2();
    j["alpha_deg"] = format_g9(ctx.rack().alpha * 180.0 / pi);
    j["center_distance"] = format_g9(report.center_distance);
    j["total_arc_integral"] = format_g9(report.total_arc_integral);
    j["undercut_threshold"] = format_g9(report.undercut_threshold);

    ordered_json chi = ordered_json::array();
    for (double value : report.tooth_centers) chi.push_back(format_g9(value));
    j["tooth_centers"] = chi;

    ordered_json sizing;
    sizing["a_over_m_min"] = format_g9(report.sizing.a_over_m_min);
    sizing["z1_min"] = report.sizing.z1_min;
    sizing["max_module_at_a"] = format_g9(report.sizing.max_module(report.center_distance));
    j["sizing"] = sizing;

    ordered_json drive = ordered_json::array();
    for (const auto& f : report.drive_flanks) drive.push_back(flank_row(f));
    j["drive_flanks"] = drive;

    ordered_json driven = ordered_json::array();
    for (const auto& f : report.driven_flanks) driven.push_back(flank_row(f));
    j["driven_flanks"] = driven;
    return j;
}

std::string report_to_text(const SynthesisReport& report, const Context& ctx,
                           bool with_boundaries) {
    std::ostringstream out;
    out << "gear synthesis report\n";
    out << "  transmission      " << ctx.transmission().name() << "\n";
    out << "  module            " << format_g6(ctx.module()) << "\n";
    out << "  teeth             z1 = " << ctx.z1() << ", z2 = " << ctx.z2() << "\n";
    out << "  I(0,2pi)          " << format_g6(report.total_arc_integral) << "\n";
    out << "  center distance   " << format_g6(report.center_distance) << "\n";
    out << "  undercut limit    " << format_g6(report.undercut_threshold) << "\n";
    out << "  a/m lower bound   " << format_g6(report.sizing.a_over_m_min)
        << "  (z1 >= " << report.sizing.z1_min << " for no undercut)\n\n";

    out << "tooth midpoints chi(k)\n";
    const std::size_t z = report.tooth_centers.size();
    for (std::size_t start = 0; start < z; start += 7) {
        out << "  k      ";
        for (std::size_t k = start; k < std::min(z, start + 7); ++k) {
            out << std::setw(12) << (k + 1);
        }
        out << "\n  chi(k) ";
        for (std::size_t k = start; k < std::min(z, start + 7); ++k) {
            out << std::setw(12) << format_g6(report.tooth_centers[k]);
        }
        out << "\n";
    }
    out << "\n";

    text_undercut_table(out, report.drive_flanks,
                        "drive gear: cusp parameters, curvatures, undercut (*)");
    out << "\n";
    text_undercut_table(out, report.driven_flanks,
                        "driven gear: cusp parameters, curvatures, undercut (*)");

    if (!with_boundaries) {
        return out.str();
    }

    out << "\nboundary parameters (phi_flank, phi_fillet, phi_tip)\n";
    auto boundaries = [&out](const std::vector<FlankSegments>& flanks, const char* title) {
        out << title << "\n";
        for (const auto& f : flanks) {
            out << "  k=" << std::setw(3) << f.k << " " << side_name(f.side) << "  flank ["
                << std::setw(12) << format_g6(f.phi_flank[0]) << "," << std::setw(12)
                << format_g6(f.phi_flank[1]) << "]  fillet [" << std::setw(12)
                << format_g6(f.phi_fillet[0]) << "," << std::setw(12) << format_g6(f.phi_fillet[1])
                << "]  tip " << std::setw(12) << format_g6(f.phi_tip)
                << (f.multiple_roots ? "  (multiple roots)" : "") << "\n";
        }
    };
    boundaries(report.drive_flanks, "drive gear");
    boundaries(report.driven_flanks, "driven gear");
    return out.str();
}

nlohmann::ordered_json mesh_report_to_json(const MeshReport& mesh) {
    ordered_json j;
    j["samples"] = mesh.samples;
    j["active_checks"] = mesh.active_checks;
    j["max_fixed_frame_deviation"] = format_g9(mesh.max_fixed_frame_deviation);
    j["max_transmission_error"] = format_g9(mesh.max_transmission_error);
    j["max_contact_height"] = format_g9(mesh.max_contact_height);
    return j;
}

}  // namespace ncgear
