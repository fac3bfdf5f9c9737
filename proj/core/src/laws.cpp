#include "scalab/laws.hpp"

#include <cmath>
#include <vector>

#include "scalab/errors.hpp"

namespace scalab::laws {

namespace {

WorkloadSplit open_split(double s) {
  if (!std::isfinite(s) || !(s > 0.0 && s < 1.0)) {
    throw ValidationError("law presets require 0 < s < 1");
  }
  return WorkloadSplit(s);
}

}  // namespace

ScalabilityModel amdahl(double s) {
  return {open_split(s), PowerLaw::unit(), PowerLaw::unit(), PowerLaw::linear()};
}

ScalabilityModel gustafson(double s) {
  return {open_split(s), PowerLaw::unit(), PowerLaw::linear(), PowerLaw::linear()};
}

ScalabilityModel sun_ni(double s, double alpha_g) {
  return {open_split(s), PowerLaw::unit(), PowerLaw(1.0, alpha_g), PowerLaw::linear()};
}

ScalabilityModel generalized_scaled(double s) { return sun_ni(s, 0.5); }

ScalabilityModel scaled_model(double s, double c_f, double alpha_f, double c_g, double alpha_g) {
  return {open_split(s), PowerLaw(c_f, alpha_f), PowerLaw(c_g, alpha_g), PowerLaw::linear()};
}

std::span<const LawPreset> presets() {
  using SC = ScalabilityCase;
  static const std::vector<LawPreset> all = {
      {"amdahl", "fixed workload, h(N) = N", amdahl, SC::B},
      {"gustafson", "linearly scaled parallel workload", gustafson, SC::G},
      {"sun-ni-0", "Sun-Ni with alpha_g = 0", [](double s) { return sun_ni(s, 0.0); }, SC::B},
      {"sun-ni-0.7", "Sun-Ni with 0 < alpha_g < 1", [](double s) { return sun_ni(s, 0.7); }, SC::J},
      {"sun-ni-1", "Sun-Ni with alpha_g = 1", [](double s) { return sun_ni(s, 1.0); }, SC::G},
      {"sun-ni-2", "Sun-Ni with alpha_g > 1", [](double s) { return sun_ni(s, 2.0); }, SC::H},
      {"generalized-scaled", "alpha_g = 1/2", generalized_scaled, SC::J},
      {"scaled-shrinking", "scaled model, alpha_g - alpha_f < 0",
       [](double s) { return scaled_model(s, 1.0, 1.0, 1.0, 0.5); }, SC::A},
      {"scaled-fixed", "scaled model, alpha_g - alpha_f = 0",
       [](double s) { return scaled_model(s, 1.0, 1.0, 1.0, 1.0); }, SC::B},
      {"scaled-sublinear", "scaled model, 0 < alpha_g - alpha_f < 1",
       [](double s) { return scaled_model(s, 1.0, 0.5, 1.0, 1.0); }, SC::J},
      {"scaled-linear", "scaled model, alpha_g - alpha_f = 1",
       [](double s) { return scaled_model(s, 1.0, 1.0, 1.0, 2.0); }, SC::G},
      {"scaled-superlinear", "scaled model, alpha_g - alpha_f > 1",
       [](double s) { return scaled_model(s, 1.0, 0.0, 1.0, 3.0); }, SC::H},
  };
  return all;
}

const LawPreset& preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw ValidationError("unknown law preset: " + std::string(name));
}

}  // namespace scalab::laws
