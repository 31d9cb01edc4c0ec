#include "settings_io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace lnr::cli {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

UnitVec3 to_unit(double x, double y, double z, std::ostream& warn) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 1e-12)) {
    throw usage_error("setting vector is not normalizable (norm ~ 0)");
  }
  if (std::abs(n - 1.0) > 1e-6) {
    warn << "warning: setting vector (" << x << ", " << y << ", " << z
         << ") has norm " << n << "; normalizing\n";
  }
  return UnitVec3(x, y, z);
}

std::array<UnitVec3, 3> read_triple(const json& j, const std::string& key,
                                    std::ostream& warn) {
  if (!j.contains(key)) {
    throw usage_error("settings: missing key '" + key + "'");
  }
  const json& arr = j.at(key);
  if (!arr.is_array() || arr.size() != 3) {
    throw usage_error("settings: '" + key + "' must be an array of 3 vectors");
  }
  std::array<UnitVec3, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    const json& v = arr.at(i);
    if (!v.is_array() || v.size() != 3 || !v.at(0).is_number() ||
        !v.at(1).is_number() || !v.at(2).is_number()) {
      throw usage_error("settings: '" + key + "[" + std::to_string(i) +
                        "]' must be [x, y, z]");
    }
    out[i] = to_unit(v.at(0).get<double>(), v.at(1).get<double>(),
                     v.at(2).get<double>(), warn);
  }
  return out;
}

ojson vec_json(const UnitVec3& v) { return ojson::array({v.x(), v.y(), v.z()}); }

ojson triple_json(const std::array<UnitVec3, 3>& t) {
  return ojson::array({vec_json(t[0]), vec_json(t[1]), vec_json(t[2])});
}

}  // namespace

AnySettings load_settings_json(std::istream& in, std::ostream& warn) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("settings: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw usage_error("settings: top level must be an object");
  }
  const std::string category =
      j.contains("category") && j.at("category").is_string()
          ? j.at("category").get<std::string>()
          : "";
  if (category == "I") {
    SettingsCategoryI s;
    s.a = read_triple(j, "a", warn);
    s.b = read_triple(j, "b", warn);
    s.b2 = read_triple(j, "b2", warn);
    return s;
  }
  if (category == "II") {
    if (j.contains("b2")) {
      throw usage_error("settings: category II takes no 'b2'");
    }
    SettingsCategoryII s;
    s.a = read_triple(j, "a", warn);
    s.b = read_triple(j, "b", warn);
    return s;
  }
  throw usage_error("settings: 'category' must be \"I\" or \"II\"");
}

AnySettings load_settings_file(const std::string& path, std::ostream& warn) {
  std::ifstream in(path);
  if (!in) {
    throw usage_error("cannot open settings file: " + path);
  }
  return load_settings_json(in, warn);
}

std::string settings_to_json(const SettingsCategoryI& s) {
  ojson j;
  j["category"] = "I";
  j["a"] = triple_json(s.a);
  j["b"] = triple_json(s.b);
  j["b2"] = triple_json(s.b2);
  return j.dump(2) + "\n";
}

std::string settings_to_json(const SettingsCategoryII& s) {
  ojson j;
  j["category"] = "II";
  j["a"] = triple_json(s.a);
  j["b"] = triple_json(s.b);
  return j.dump(2) + "\n";
}

UnitVec3 parse_vector(const std::string& text, std::ostream& warn) {
  std::array<double, 3> c{};
  std::size_t begin = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end =
        (i < 2) ? text.find(',', begin) : std::string::npos;
    if (i < 2 && end == std::string::npos) {
      throw usage_error("vector '" + text + "' must be x,y,z");
    }
    const std::string field = text.substr(begin, end - begin);
    std::size_t consumed = 0;
    try {
      c[static_cast<std::size_t>(i)] = std::stod(field, &consumed);
    } catch (const std::exception&) {
      consumed = std::string::npos;
    }
    if (consumed != field.size() || field.empty()) {
      throw usage_error("vector '" + text + "': bad component '" + field + "'");
    }
    begin = end + 1;
  }
  return to_unit(c[0], c[1], c[2], warn);
}

}  // namespace lnr::cli
