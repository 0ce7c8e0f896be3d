#include "banditlab/policies/aae.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace banditlab {

AaePolicy::AaePolicy(int k, long long horizon, double delta) {
  if (k < 1) {
    throw std::invalid_argument("aae: need at least one arm");
  }
  if (horizon < 1) {
    throw std::invalid_argument("aae: horizon must be positive");
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("aae: delta must lie in (0,1]");
  }
  delta_prime_ = delta / (static_cast<double>(k + 1) * static_cast<double>(horizon));
  log_term_ = std::log(2.0 / delta_prime_);
  active_.resize(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    active_[static_cast<std::size_t>(a)] = a;
  }
  counts_.assign(static_cast<std::size_t>(k), 0);
  sums_.assign(static_cast<std::size_t>(k), 0.0);
  decision_.distribution.assign(static_cast<std::size_t>(k), 0.0);
}

const PolicyDecision& AaePolicy::decide(Rng&) {
  const double w = 1.0 / static_cast<double>(active_.size());
  std::fill(decision_.distribution.begin(), decision_.distribution.end(), 0.0);
  for (int a : active_) {
    decision_.distribution[static_cast<std::size_t>(a)] = w;
  }
  decision_.is_point_mass = active_.size() == 1;
  return decision_;
}

void AaePolicy::update(int arm, double reward) {
  counts_[static_cast<std::size_t>(arm)] += 1;
  sums_[static_cast<std::size_t>(arm)] += reward;

  // Arms without a sample have an unbounded radius: they neither eliminate
  // nor get eliminated.
  double best_lower = -std::numeric_limits<double>::infinity();
  for (int a : active_) {
    const auto ia = static_cast<std::size_t>(a);
    if (counts_[ia] == 0) {
      continue;
    }
    const double n = static_cast<double>(counts_[ia]);
    const double rad = std::sqrt(2.0 * log_term_ / n);
    best_lower = std::max(best_lower, sums_[ia] / n - rad);
  }
  std::erase_if(active_, [&](int a) {
    const auto ia = static_cast<std::size_t>(a);
    if (counts_[ia] == 0) {
      return false;
    }
    const double n = static_cast<double>(counts_[ia]);
    const double rad = std::sqrt(2.0 * log_term_ / n);
    return sums_[ia] / n + rad < best_lower;
  });
}

}  // namespace banditlab
