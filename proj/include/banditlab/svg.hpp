#pragma once

#include <filesystem>
#include <vector>

#include "banditlab/simulator.hpp"

namespace banditlab {

// Self-contained static line chart: cumulative pseudo-regret vs round, one
// polyline per policy, legend, axis labels. Deterministic output for fixed
// input. log_x switches the round axis to log10.
void write_regret_svg(const std::vector<AggregateCurve>& curves,
                      const std::filesystem::path& path, bool log_x = false);

}  // namespace banditlab
