#pragma once

#include <string>
#include <vector>

#include "ader/grid.hpp"
#include "ader/systems.hpp"

namespace ader {

/// Named test configuration: system, domain and default run parameters.
struct Preset {
  std::string name;
  SystemDescriptor system;
  double x_lo = 0.0;
  double x_hi = 1.0;
  int cells = 64;
  RunConfig config;
  std::vector<int> meshes;
  int tracked_var = 0;
};

/// leveque-yee, linear-system, noncons, euler-smooth.
Preset make_preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace ader
