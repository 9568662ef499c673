#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "ncgear/config.hpp"
#include "ncgear/profile.hpp"

namespace ncgear {

struct RunOptions {
    std::filesystem::path out_dir = ".";
    std::optional<double> tol_quad;  ///< override of the config quadrature tolerance
    std::optional<double> tol_root;
    int mesh_samples = 1000;
    double pose_deg = 0.0;
};

struct RunResult {
    std::vector<std::filesystem::path> written;
    SynthesisReport report;
    std::optional<MeshReport> mesh;
};

/// Execute a job: build the context, assemble both profiles and write every
/// requested artifact under out_dir. Deterministic for a fixed config.
RunResult run_job(const JobConfig& cfg, const RunOptions& options);

}  // namespace ncgear
