#pragma once

#include <string>

#include "bendix/geometry.hpp"

namespace bendix {

// Metro-style rendering: one polyline per path with parallel offsets where
// paths share an edge; deterministic output for a fixed input.
std::string emit_svg(const PathSupport& support, const Drawing& drawing);

}  // namespace bendix
