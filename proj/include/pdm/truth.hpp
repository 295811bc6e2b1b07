#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace pdm {

/// Three-valued truth: a variable is either unobserved or known true/false.
/// The enumeration order (unknown, bot, top) is also the order in which
/// table rows cycle through values.
enum class truth3 : std::uint8_t { unknown = 0, bot = 1, top = 2 };

inline const char* to_string(truth3 v) {
  switch (v) {
    case truth3::unknown: return "?";
    case truth3::bot: return "false";
    case truth3::top: return "true";
  }
  return "?";
}

/// Short form used in table renderings.
inline const char* to_symbol(truth3 v) {
  switch (v) {
    case truth3::unknown: return "?";
    case truth3::bot: return "F";
    case truth3::top: return "T";
  }
  return "?";
}

/// Partial assignment of truth values to atoms. Atoms absent from the map
/// are treated as unknown.
using assignment = std::map<std::string, truth3>;

inline truth3 lookup(const assignment& a, const std::string& name) {
  auto it = a.find(name);
  return it == a.end() ? truth3::unknown : it->second;
}

}  // namespace pdm
