#include "sonocasimir/presets.hpp"

#include <numbers>

#include "sonocasimir/errors.hpp"

namespace sono {

const std::vector<Preset>& builtin_presets() {
  static const std::vector<Preset> presets = {
      {"schwinger", Media(1.0, 1.3), 40.0, 360.0},
      {"updated", Media(1.0, 1.3), 45.0, 300.0},
      {"min-radius", Media(1.0, 1.3), 0.5, 200.0},
      {"ambient", Media(1.0, 1.3), 5.0, 200.0},
      // Radius chosen so that R K = 135 at 200 nm, the y_max quoted for the
      // equilibrium bubble.
      {"ambient-paper", Media(1.0, 1.3), 135.0 * 0.2 / (2.0 * std::numbers::pi), 200.0},
  };
  return presets;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : builtin_presets()) {
    if (p.name == name) return p;
  }
  throw DomainError("unknown preset '" + name + "'");
}

}  // namespace sono
