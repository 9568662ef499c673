#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncgear/centrodes.hpp"

namespace ncgear {

/// One synthesis job as described by a JSON config document. Angles enter in
/// degrees and are converted to radians here at the boundary; rack heights
/// are given relative to the module.
struct JobConfig {
    std::string transmission_name;
    nlohmann::json transmission_params;
    double module = 0.0;
    int z1 = 0;
    int z2 = 0;
    double alpha_deg = 0.0;
    double h_a_over_m = 0.0;
    double h_f_over_m = 0.0;
    double rho_over_m = 0.0;
    ToleranceSet tolerances{};
    std::vector<std::string> outputs;

    RackProfile rack() const;
};

/// Allowed entries of the `outputs` list.
const std::vector<std::string>& known_outputs();

/// Parse and validate a config document. Parse errors carry line:column;
/// semantic errors carry the JSON path of the offending field.
JobConfig parse_config(const std::string& text, const std::string& origin = "config");
JobConfig load_config(const std::filesystem::path& path);

/// Instantiate a named transmission function. Built in: "sinusoidal" with
/// parameter b. New functions register in transmission_registry() in
/// config.cpp.
Transmission make_transmission(const std::string& name, const nlohmann::json& params);

/// Build the full synthesis context for a job.
Context build_context(const JobConfig& cfg);

}  // namespace ncgear
