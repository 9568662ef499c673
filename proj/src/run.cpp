#include "ncgear/run.hpp"

#include <algorithm>
#include <fstream>

#include "ncgear/export_dxf.hpp"
#include "ncgear/export_svg.hpp"
#include "ncgear/report_io.hpp"

namespace ncgear {
namespace {

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::filesystem::path>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw GearError("cannot write '" + path.string() + "'");
    }
    out << content;
    written.push_back(path);
}

bool wants(const JobConfig& cfg, const char* what) {
    return std::find(cfg.outputs.begin(), cfg.outputs.end(), what) != cfg.outputs.end();
}

}  // namespace

RunResult run_job(const JobConfig& cfg, const RunOptions& options) {
    JobConfig job = cfg;
    if (options.tol_quad) job.tolerances.quad = *options.tol_quad;
    if (options.tol_root) job.tolerances.root = *options.tol_root;

    const Context ctx = build_context(job);
    Assembly assembly = assemble(ctx);

    RunResult result;
    std::filesystem::create_directories(options.out_dir);

    const bool base_curves = wants(job, "base-curves");
    if (wants(job, "svg") || base_curves) {
        SvgOptions svg;
        svg.pose_phi = options.pose_deg * pi / 180.0;
        svg.base_curves = base_curves;
        write_file(options.out_dir / "gear_pair.svg", svg_document(ctx, assembly, svg),
                   result.written);
    }
    if (wants(job, "dxf")) {
        std::vector<Complex> drive_pts, driven_pts;
        for (const auto& v : assembly.drive.vertices) drive_pts.push_back(v.point);
        for (const auto& v : assembly.driven.vertices) driven_pts.push_back(v.point);
        const std::string doc = dxf_document({{"DRIVE", drive_pts}, {"DRIVEN", driven_pts}});
        write_file(options.out_dir / "gear_pair.dxf", doc, result.written);
    }
    if (wants(job, "report")) {
        write_file(options.out_dir / "report.json",
                   report_to_json(assembly.report, ctx).dump(2) + "\n", result.written);
        write_file(options.out_dir / "report.txt", report_to_text(assembly.report, ctx),
                   result.written);
    }
    if (wants(job, "mesh-report")) {
        const MeshReport mesh = mesh_verify(ctx, assembly.report, options.mesh_samples);
        result.mesh = mesh;
        write_file(options.out_dir / "mesh_report.json", mesh_report_to_json(mesh).dump(2) + "\n",
                   result.written);
    }
    result.report = std::move(assembly.report);
    return result;
}

}  // namespace ncgear
