#pragma once

#include <string>

#include "bendix/support.hpp"
#include "json.hpp"

namespace bendix {

// Instance format:
// {"vertices":[...], "edges":[["a","b"],...],
//  "paths":[{"id":"p1","vertices":["a","x","b"]},...],
//  "embedding":{"rotation":{"x":[["x","a"],["x","b"],...]},
//               "outer_face_edge":["a","b"]}}
// The embedding is optional; the outer face lies to the left of the
// outer_face_edge traversed from its first to its second endpoint.
PathSupport support_from_json(const nlohmann::json& j);
nlohmann::ordered_json support_to_json(const PathSupport& support);

PathSupport load_support(const std::string& file);
void save_support(const PathSupport& support, const std::string& file);

nlohmann::ordered_json alignment_to_json(const PathSupport& support, const Alignment& alignment);
Alignment alignment_from_json(const PathSupport& support, const nlohmann::json& j);

}  // namespace bendix
