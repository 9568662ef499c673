#pragma once

#include <string>

#include <json.hpp>

#include "ncgear/profile.hpp"

namespace ncgear {

/// Deterministic number rendering: 9 significant digits, C locale.
std::string format_g9(double value);

nlohmann::ordered_json report_to_json(const SynthesisReport& report, const Context& ctx);

/// Aligned plain-text rendering of the tooth-midpoint and undercut tables
/// plus, when available, the per-flank boundary parameters.
std::string report_to_text(const SynthesisReport& report, const Context& ctx,
                           bool with_boundaries = true);

nlohmann::ordered_json mesh_report_to_json(const MeshReport& mesh);

}  // namespace ncgear
