#pragma once

#include "json.hpp"

#include "bgp/engine.hpp"
#include "bgp/scenario.hpp"

namespace bgp {

/// Version stamped into every emitted document.
inline constexpr int kSchemaVersion = 1;

// polygon: {"vertices": [[x, y], ...]} in canonical (CCW, lowest-leftmost
// first) order. Readers accept any point list and take the canonical hull.
nlohmann::json polygon_to_json(const ConvexBody& body);
ConvexBody polygon_from_json(const nlohmann::json& j);

// region: {"components": [polygon, ...]}; [] is the empty region.
nlohmann::json region_to_json(const Region& region);
Region region_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json trajectory_to_json(const Trajectory& trajectory);
Trajectory trajectory_from_json(const nlohmann::json& j);

nlohmann::json suite_report_to_json(const SuiteReport& report);

// scenario config: window, t0, T, seed, births{...}, growth{...};
// see the README for the full key set and one example per kind.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& scenario);

}  // namespace bgp
