#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "scalab/asymptotics.hpp"
#include "scalab/model.hpp"

namespace scalab::laws {

/// All constructors reject s outside (0, 1).
ScalabilityModel amdahl(double s);
ScalabilityModel gustafson(double s);
ScalabilityModel sun_ni(double s, double alpha_g);
ScalabilityModel generalized_scaled(double s);
/// c_h = alpha_h = 1.
ScalabilityModel scaled_model(double s, double c_f, double alpha_f, double c_g, double alpha_g);

struct LawPreset {
  std::string name;
  std::string description;
  std::function<ScalabilityModel(double s)> model_for;
  ScalabilityCase expected_case;
};

/// Named presets, including the Sun-Ni and scaled-model regimes.
std::span<const LawPreset> presets();
const LawPreset& preset(std::string_view name);

}  // namespace scalab::laws
