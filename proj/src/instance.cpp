#include "banditlab/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace banditlab {

Instance normalize_instance(std::span<const double> theta_raw) {
  if (theta_raw.empty()) {
    throw std::invalid_argument("normalize_instance: need at least one arm");
  }
  for (double v : theta_raw) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("normalize_instance: means must lie in [0,1]");
    }
  }
  const double max = *std::max_element(theta_raw.begin(), theta_raw.end());
  if (max <= 0.0) {
    throw std::invalid_argument(
        "normalize_instance: all means are zero; no arm can ever pay out");
  }
  Instance inst;
  inst.k = static_cast<int>(theta_raw.size());
  inst.scale = max;
  inst.theta.reserve(theta_raw.size());
  for (double v : theta_raw) {
    inst.theta.push_back(v / max);  // max / max == 1.0 exactly
  }
  inst.optimal_arm = static_cast<int>(
      std::max_element(inst.theta.begin(), inst.theta.end()) - inst.theta.begin());
  return inst;
}

int draw_reward(Rng& rng, double quality, double theta_a) {
  return rng.bernoulli(quality * theta_a) ? 1 : 0;
}

double regret_increment(const Instance& instance, double quality, int chosen) {
  return quality * instance.gap(chosen);
}

}  // namespace banditlab
