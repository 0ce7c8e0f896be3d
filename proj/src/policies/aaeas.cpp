#include "banditlab/policies/aaeas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banditlab {

double aaeas_confidence_bound(double total_reward, int k, double delta_prime) {
  if (!(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw std::invalid_argument("aaeas_confidence_bound: delta' must lie in (0,1)");
  }
  const double log_term = std::log(2.0 / delta_prime);
  const double first = 4.0 * total_reward * log_term;
  const double second = 16.0 * static_cast<double>(k) * log_term * log_term;
  return 2.0 * std::sqrt(std::max(first, second));
}

AaeasPolicy::AaeasPolicy(int k, long long horizon, double delta) : k_(k) {
  if (k < 1) {
    throw std::invalid_argument("aaeas: need at least one arm");
  }
  if (horizon < 1) {
    throw std::invalid_argument("aaeas: horizon must be positive");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("aaeas: delta must lie in (0,1]");
  }
  delta_prime_ = static_cast<double>(k + 1) * static_cast<double>(horizon) / delta;
  const double log_term = std::log(2.0 / delta_prime_);  // negative for delta' > 2
  // max(4 S log_term, 16 k log_term^2) with log_term < 0 is the second
  // branch for every S >= 0.
  bound_ = 2.0 * std::sqrt(16.0 * static_cast<double>(k_) * log_term * log_term);
  active_.resize(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    active_[static_cast<std::size_t>(a)] = a;
  }
  arm_reward_.assign(static_cast<std::size_t>(k), 0.0);
  decision_.distribution.assign(static_cast<std::size_t>(k), 0.0);
}

const PolicyDecision& AaeasPolicy::decide(Rng&) {
  const double w = 1.0 / static_cast<double>(active_.size());
  std::fill(decision_.distribution.begin(), decision_.distribution.end(), 0.0);
  for (int a : active_) {
    decision_.distribution[static_cast<std::size_t>(a)] = w;
  }
  decision_.is_point_mass = active_.size() == 1;
  return decision_;
}

void AaeasPolicy::update(int arm, double reward) {
  total_reward_ += reward;
  arm_reward_[static_cast<std::size_t>(arm)] += reward;

  double best = 0.0;
  for (int a : active_) {
    best = std::max(best, arm_reward_[static_cast<std::size_t>(a)]);
  }
  std::erase_if(active_, [&](int a) {
    return arm_reward_[static_cast<std::size_t>(a)] + bound_ < best;
  });
}

}  // namespace banditlab
