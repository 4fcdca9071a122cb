#pragma once

#include <string>
#include <vector>

#include "bgp/region.hpp"
#include "bgp/scenario.hpp"

namespace bgp {

/// SVG 1.1 picture of a region inside the observation window: the window
/// frame, one filled path per component, one small circle per germ marker.
/// Byte-deterministic for identical inputs (fixed number formatting).
std::string render_svg(const Window& window, const Region& region,
                       const std::vector<Vec2>& germ_markers);

}  // namespace bgp
