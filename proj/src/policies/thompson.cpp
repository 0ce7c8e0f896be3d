#include "banditlab/policies/thompson.hpp"

#include <algorithm>
#include <stdexcept>

namespace banditlab {

ThompsonPolicy::ThompsonPolicy(int k) {
  if (k < 1) {
    throw std::invalid_argument("thompson: need at least one arm");
  }
  successes_.assign(static_cast<std::size_t>(k), 1.0);
  failures_.assign(static_cast<std::size_t>(k), 1.0);
  decision_.distribution.assign(static_cast<std::size_t>(k), 0.0);
  decision_.is_point_mass = true;
}

const PolicyDecision& ThompsonPolicy::decide(Rng& rng) {
  int best = 0;
  double best_sample = -1.0;
  for (std::size_t a = 0; a < successes_.size(); ++a) {
    const double sample = rng.beta(successes_[a], failures_[a]);
    if (sample > best_sample) {
      best_sample = sample;
      best = static_cast<int>(a);
    }
  }
  std::fill(decision_.distribution.begin(), decision_.distribution.end(), 0.0);
  decision_.distribution[static_cast<std::size_t>(best)] = 1.0;
  decision_.is_point_mass = true;
  return decision_;
}

void ThompsonPolicy::update(int arm, double reward) {
  if (reward == 1.0) {
    successes_[static_cast<std::size_t>(arm)] += 1.0;
  } else if (reward == 0.0) {
    failures_[static_cast<std::size_t>(arm)] += 1.0;
  } else {
    throw std::invalid_argument("thompson: rewards must be 0 or 1");
  }
}

double ThompsonPolicy::posterior_mean(int arm) const {
  const auto a = static_cast<std::size_t>(arm);
  return successes_[a] / (successes_[a] + failures_[a]);
}

}  // namespace banditlab
