#pragma once

#include <string>
#include <vector>

#include "sonocasimir/bogolubov.hpp"

namespace sono {

struct Preset {
  std::string name;
  Media media;
  double radius_um;
  double cutoff_nm;

  Scenario scenario() const { return Scenario::from_lab_units(radius_um, cutoff_nm); }
};

/// schwinger, updated, min-radius, ambient, ambient-paper.
const std::vector<Preset>& builtin_presets();

/// Throws DomainError for an unknown name.
const Preset& find_preset(const std::string& name);

}  // namespace sono
