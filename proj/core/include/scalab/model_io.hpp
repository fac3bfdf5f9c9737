#pragma once

#include <string>
#include <string_view>

#include "scalab/estimate.hpp"
#include "scalab/model.hpp"
#include "scalab/overhead.hpp"

namespace scalab {

/// {"s": .., "f": {"c": .., "alpha": ..}, "g": {..}, "h": {..}}. "schema" and
/// a free-form "fit" block are tolerated; any other field is rejected.
ScalabilityModel parse_model_json(std::string_view text);

/// Model document with "schema": 1. `extra_json`, when given, must be a JSON
/// object and is stored under "fit".
std::string model_to_json(const ScalabilityModel& model, std::string_view extra_json = {});

/// {"c_z": .., "alpha_z": .., "shifted": bool (default false)}.
OverheadPoly parse_overhead_json(std::string_view text);
std::string overhead_to_json(const OverheadPoly& z);

}  // namespace scalab
