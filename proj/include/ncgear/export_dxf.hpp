#pragma once

#include <string>
#include <vector>

#include "ncgear/profile.hpp"

namespace ncgear {

/// ASCII DXF with one closed LWPOLYLINE per profile in model space,
/// millimetre units. Layer names follow the given labels.
std::string dxf_document(const std::vector<std::pair<std::string, std::vector<Complex>>>& polylines);

/// Extract the LWPOLYLINE vertex lists from a document produced by
/// dxf_document (round-trip checks).
std::vector<std::vector<Complex>> parse_dxf_polylines(const std::string& text);

}  // namespace ncgear
