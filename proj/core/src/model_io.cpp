#include "scalab/model_io.hpp"

#include <algorithm>
#include <initializer_list>

#include "json.hpp"
#include "scalab/errors.hpp"

namespace scalab {

using nlohmann::json;

namespace {

json parse_object(std::string_view text, std::string_view what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(what) + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
  return j;
}

void only_keys(const json& j, std::initializer_list<std::string_view> keys, std::string_view where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
      throw ValidationError("unknown field '" + it.key() + "' in " + std::string(where));
    }
  }
}

double number(const json& j, const char* key, std::string_view where) {
  if (!j.contains(key)) throw ValidationError("missing field '" + std::string(key) + "' in " + std::string(where));
  const auto& v = j.at(key);
  if (!v.is_number()) throw ValidationError("field '" + std::string(key) + "' in " + std::string(where) + " must be a number");
  return v.get<double>();
}

PowerLaw power_law(const json& j, const char* name) {
  if (!j.contains(name)) throw ValidationError(std::string("missing field '") + name + "'");
  const auto& p = j.at(name);
  if (!p.is_object()) throw ValidationError(std::string("field '") + name + "' must be an object");
  only_keys(p, {"c", "alpha"}, name);
  return PowerLaw(number(p, "c", name), number(p, "alpha", name));
}

void check_schema(const json& j) {
  if (j.contains("schema") && j.at("schema") != 1) throw ValidationError("unsupported schema version");
}

}  // namespace

ScalabilityModel parse_model_json(std::string_view text) {
  const auto j = parse_object(text, "model");
  only_keys(j, {"schema", "s", "f", "g", "h", "fit"}, "model");
  check_schema(j);
  return {WorkloadSplit(number(j, "s", "model")), power_law(j, "f"), power_law(j, "g"), power_law(j, "h")};
}

std::string model_to_json(const ScalabilityModel& m, std::string_view extra_json) {
  auto pl = [](const PowerLaw& p) { return json{{"c", p.coeff()}, {"alpha", p.exponent()}}; };
  json j{{"schema", 1}, {"s", m.s()}, {"f", pl(m.f())}, {"g", pl(m.g())}, {"h", pl(m.h())}};
  if (!extra_json.empty()) j["fit"] = parse_object(extra_json, "fit block");
  return j.dump(2);
}

OverheadPoly parse_overhead_json(std::string_view text) {
  const auto j = parse_object(text, "overhead");
  only_keys(j, {"schema", "c_z", "alpha_z", "shifted"}, "overhead");
  check_schema(j);
  bool shifted = false;
  if (j.contains("shifted")) {
    if (!j.at("shifted").is_boolean()) throw ValidationError("'shifted' must be a boolean");
    shifted = j.at("shifted").get<bool>();
  }
  return {number(j, "c_z", "overhead"), number(j, "alpha_z", "overhead"), shifted};
}

std::string overhead_to_json(const OverheadPoly& z) {
  return json{{"schema", 1}, {"c_z", z.c_z()}, {"alpha_z", z.alpha_z()}, {"shifted", z.shifted()}}.dump(2);
}

}  // namespace scalab
