#pragma once

#include <json.hpp>

#include "toric/capacity.hpp"
#include "toric/ma_measure.hpp"
#include "toric/solver.hpp"

namespace toric::io {

using json = nlohmann::ordered_json;

// bodies: {"dim": n, "vertices": [[...], ...]}
json to_json(const ConvexBody& body);
ConvexBody body_from_json(const json& j);

// measures: {"atoms": [{"x": [...], "mass": m}, ...]}
json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);

// functions: {"body": <body>, "nodes": [[...], ...], "values": [...]}
json to_json(const PLConvexFunction& h);
PLConvexFunction pl_from_json(const json& j);

// regions: {"boxes": [{"lo": [...], "hi": [...]}, ...]}
json to_json(const CompactRegion& region);
CompactRegion region_from_json(const json& j);

json to_json(const MAResult& result);
json to_json(const SolveReport& report);

// parse text that is either inline JSON (starts with '{' or '[') or a path
json parse_input(const std::string& text);

}  // namespace toric::io
