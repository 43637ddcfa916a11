#include "ader/presets.hpp"

#include <stdexcept>

namespace ader {

std::vector<std::string> preset_names() { return {"leveque-yee", "linear-system", "noncons", "euler-smooth"}; }

Preset make_preset(const std::string& name) {
  Preset p;
  p.name = name;
  p.config.cfl = 0.1;
  p.config.order = 3;
  p.config.boundary = BoundaryKind::periodic;
  p.meshes = {16, 32, 64, 128};
  if (name == "leveque-yee") {
    p.system = leveque_yee(-1000.0);
    p.cells = 100;
    p.config.alpha = 2.4;
    p.config.t_out = 0.3;
    p.config.boundary = BoundaryKind::transmissive;
  } else if (name == "linear-system") {
    p.system = linear_system(1.0, -1.0);
    p.config.alpha = 1.9;
    p.config.t_out = 1.0;
  } else if (name == "noncons") {
    p.system = noncons_system(1.0, 0.02);
    p.config.alpha = 2.2;
    p.config.t_out = 1.0;
  } else if (name == "euler-smooth") {
    p.system = euler_ideal_gas(1.4);
    p.config.alpha = 2.0;
    p.config.t_out = 1.0;
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return p;
}

}  // namespace ader
