#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "lnr/bounds.hpp"

namespace lnr::cli {

/// Malformed command-line input, settings file, or table file: exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnySettings = std::variant<SettingsCategoryI, SettingsCategoryII>;

/// Parse {"category":"I"|"II","a":[[x,y,z]x3],"b":[[x,y,z]x3],"b2":...?}.
/// Vectors are normalized on load; a norm off by more than 1e-6 earns a
/// warning on warn.
AnySettings load_settings_json(std::istream& in, std::ostream& warn);
AnySettings load_settings_file(const std::string& path, std::ostream& warn);

std::string settings_to_json(const SettingsCategoryI& s);
std::string settings_to_json(const SettingsCategoryII& s);

/// Parse "x,y,z" into a normalized direction, warning as above.
UnitVec3 parse_vector(const std::string& text, std::ostream& warn);

}  // namespace lnr::cli
