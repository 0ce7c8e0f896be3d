#pragma once

#include <span>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

// A bandit instance after normalization: intrinsic means theta in [0,1]
// with max_a theta(a) == 1, and the factor that was divided out. Immutable
// once built; safe to share across episode workers.
struct Instance {
  int k = 0;
  std::vector<double> theta;  // max entry is exactly 1.0
  int optimal_arm = 0;        // lowest index attaining the max
  double scale = 1.0;         // max of the raw means, in (0,1]

  double gap(int arm) const { return 1.0 - theta[static_cast<std::size_t>(arm)]; }
};

// Rescales raw means so the best arm has intrinsic mean 1. Callers running
// a raw instance must multiply every schedule quality by `scale` (the
// simulator does this). Rejects empty input, values outside [0,1], and
// all-zero means.
Instance normalize_instance(std::span<const double> theta_raw);

// Bernoulli(quality * theta_a) reward draw. Consumes exactly one uniform.
int draw_reward(Rng& rng, double quality, double theta_a);

// quality * (1 - theta(chosen)); exactly 0 for the optimal arm.
double regret_increment(const Instance& instance, double quality, int chosen);

}  // namespace banditlab
