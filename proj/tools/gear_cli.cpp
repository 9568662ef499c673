#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncgear/export_dxf.hpp"
#include "ncgear/export_svg.hpp"
#include "ncgear/report_io.hpp"
#include "ncgear/run.hpp"

namespace {

using ncgear::Assembly;
using ncgear::Context;
using ncgear::JobConfig;

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    double tol_quad = 0.0;
    double tol_root = 0.0;
    int samples = 1000;

    void attach(CLI::App* cmd) {
        cmd->add_option("config", config_path, "job configuration (JSON)")->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--tol-quad", tol_quad, "quadrature tolerance override");
        cmd->add_option("--tol-root", tol_root, "root-finder tolerance override");
        cmd->add_option("--samples", samples, "mesh verification sample count");
    }

    ncgear::RunOptions run_options() const {
        ncgear::RunOptions opt;
        opt.out_dir = out_dir;
        if (tol_quad > 0.0) opt.tol_quad = tol_quad;
        if (tol_root > 0.0) opt.tol_root = tol_root;
        opt.mesh_samples = samples;
        return opt;
    }

    JobConfig load() const {
        JobConfig cfg = ncgear::load_config(config_path);
        if (tol_quad > 0.0) cfg.tolerances.quad = tol_quad;
        if (tol_root > 0.0) cfg.tolerances.root = tol_root;
        return cfg;
    }
};

int error_exit(const char* kind, const std::exception& e, int code) {
    nlohmann::ordered_json err;
    err["error"]["type"] = kind;
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncircular gear pair synthesis"};
    app.require_subcommand(1);

    CommonArgs synth_args, undercut_args, mesh_args, export_args;

    CLI::App* synth = app.add_subcommand("synthesize", "run the full synthesis and write artifacts");
    synth_args.attach(synth);

    CLI::App* undercut = app.add_subcommand("check-undercut", "classify every flank of both gears");
    undercut_args.attach(undercut);

    CLI::App* mesh = app.add_subcommand("mesh-verify", "verify the assembled pair's conjugacy");
    mesh_args.attach(mesh);

    CLI::App* exp = app.add_subcommand("export", "write SVG/DXF for a given pose");
    export_args.attach(exp);
    bool want_svg = false, want_dxf = false;
    double pose_deg = 0.0;
    exp->add_flag("--svg", want_svg, "write gear_pair.svg");
    exp->add_flag("--dxf", want_dxf, "write gear_pair.dxf");
    exp->add_option("--pose", pose_deg, "drive rotation in degrees");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            const JobConfig cfg = synth_args.load();
            const auto result = ncgear::run_job(cfg, synth_args.run_options());
            for (const auto& path : result.written) {
                std::cout << path.string() << "\n";
            }
            return 0;
        }
        if (undercut->parsed()) {
            const JobConfig cfg = undercut_args.load();
            const Context ctx = ncgear::build_context(cfg);
            ncgear::SynthesisReport report;
            report.center_distance = ctx.center_dist();
            report.total_arc_integral = ctx.total_arc_integral();
            report.undercut_threshold = ctx.rack().undercut_threshold();
            report.tooth_centers = ctx.tooth_centers();
            report.sizing = ncgear::sizing_bounds(
                ctx.transmission(),
                {ctx.rack().dedendum / ctx.module(), ctx.rack().fillet_radius / ctx.module(),
                 ctx.rack().alpha},
                ctx.tol().quad);
            for (int k = 1; k <= ctx.z1(); ++k) {
                for (ncgear::Side side : {ncgear::Side::minus, ncgear::Side::plus}) {
                    ncgear::FlankSegments seg;
                    seg.k = k;
                    seg.side = side;
                    try {
                        seg.phi_cusp = ncgear::singular_point(ctx, k, side);
                        seg.kappa_cusp = ctx.drive_curvature(seg.phi_cusp);
                        seg.undercut = ncgear::detail::classify_undercut_at(ctx, seg.phi_cusp) ==
                                       ncgear::FlankStatus::undercut;
                    } catch (const ncgear::NoSingularPoint&) {
                        seg.has_cusp = false;
                    }
                    report.drive_flanks.push_back(seg);
                }
            }
            for (int k = 1; k <= ctx.z2(); ++k) {
                for (ncgear::Side side : {ncgear::Side::minus, ncgear::Side::plus}) {
                    ncgear::FlankSegments seg;
                    seg.k = k;
                    seg.side = side;
                    try {
                        seg.phi_cusp = ncgear::singular_point_driven(ctx, k, side);
                        seg.kappa_cusp = ctx.driven_curvature(seg.phi_cusp);
                        seg.undercut =
                            ncgear::detail::classify_undercut_driven_at(ctx, seg.phi_cusp) ==
                            ncgear::FlankStatus::undercut;
                    } catch (const ncgear::NoSingularPoint&) {
                        seg.has_cusp = false;
                    }
                    report.driven_flanks.push_back(seg);
                }
            }
            std::cout << ncgear::report_to_text(report, ctx, /*with_boundaries=*/false);
            return 0;
        }
        if (mesh->parsed()) {
            const JobConfig cfg = mesh_args.load();
            const Context ctx = ncgear::build_context(cfg);
            const Assembly assembly = ncgear::assemble(ctx);
            const ncgear::MeshReport report =
                ncgear::mesh_verify(ctx, assembly.report, mesh_args.samples);
            std::cout << ncgear::mesh_report_to_json(report).dump(2) << "\n";
            return 0;
        }
        if (exp->parsed()) {
            if (!want_svg && !want_dxf) {
                throw ncgear::ConfigError("export: pass --svg and/or --dxf");
            }
            const JobConfig cfg = export_args.load();
            const Context ctx = ncgear::build_context(cfg);
            const Assembly assembly = ncgear::assemble(ctx);
            std::filesystem::create_directories(export_args.out_dir);
            if (want_svg) {
                ncgear::SvgOptions svg;
                svg.pose_phi = pose_deg * ncgear::pi / 180.0;
                std::ofstream out(std::filesystem::path(export_args.out_dir) / "gear_pair.svg",
                                  std::ios::binary);
                out << ncgear::svg_document(ctx, assembly, svg);
                std::cout << (std::filesystem::path(export_args.out_dir) / "gear_pair.svg").string()
                          << "\n";
            }
            if (want_dxf) {
                std::vector<ncgear::Complex> drive_pts, driven_pts;
                for (const auto& v : assembly.drive.vertices) drive_pts.push_back(v.point);
                for (const auto& v : assembly.driven.vertices) driven_pts.push_back(v.point);
                std::ofstream out(std::filesystem::path(export_args.out_dir) / "gear_pair.dxf",
                                  std::ios::binary);
                out << ncgear::dxf_document({{"DRIVE", drive_pts}, {"DRIVEN", driven_pts}});
                std::cout << (std::filesystem::path(export_args.out_dir) / "gear_pair.dxf").string()
                          << "\n";
            }
            return 0;
        }
    } catch (const ncgear::ConfigError& e) {
        return error_exit("config", e, 2);
    } catch (const ncgear::SolverDiverged& e) {
        return error_exit("solver", e, 3);
    } catch (const ncgear::GearError& e) {
        return error_exit("synthesis", e, 3);
    } catch (const std::exception& e) {
        return error_exit("internal", e, 1);
    }
    return 1;
}
