#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "banditlab/config.hpp"

namespace banditlab {

// Named experiment setups matching the four reference figures. Fields the
// source left open (fig1/fig2 horizons, the scaled fig3 window) carry
// artifact defaults and are listed in `defaulted` so `describe` can flag
// them.
struct Preset {
  std::string name;
  ExperimentConfig config;
  std::vector<std::string> defaulted;
};

const std::vector<std::string>& preset_names();

// Total, pure expansion; throws on unknown names.
Preset preset(std::string_view name);

}  // namespace banditlab
