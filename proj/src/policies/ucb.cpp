#include "banditlab/policies/ucb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banditlab {

int ucb_select(std::span<const long long> counts, std::span<const double> sums,
               long long round) {
  if (counts.empty() || counts.size() != sums.size()) {
    throw std::invalid_argument("ucb_select: mismatched statistics");
  }
  if (round < 1) {
    throw std::invalid_argument("ucb_select: rounds are 1-based");
  }
  for (std::size_t a = 0; a < counts.size(); ++a) {
    if (counts[a] == 0) {
      return static_cast<int>(a);
    }
  }
  const double log_t = std::log(static_cast<double>(round));
  int best = 0;
  double best_index = -1.0;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    const double n = static_cast<double>(counts[a]);
    const double index = sums[a] / n + std::sqrt(log_t / n);
    if (index > best_index) {
      best_index = index;
      best = static_cast<int>(a);
    }
  }
  return best;
}

UcbPolicy::UcbPolicy(int k) {
  if (k < 1) {
    throw std::invalid_argument("ucb: need at least one arm");
  }
  counts_.assign(static_cast<std::size_t>(k), 0);
  sums_.assign(static_cast<std::size_t>(k), 0.0);
  decision_.distribution.assign(static_cast<std::size_t>(k), 0.0);
  decision_.is_point_mass = true;
}

const PolicyDecision& UcbPolicy::decide(Rng&) {
  const int pick = ucb_select(counts_, sums_, round_);
  std::fill(decision_.distribution.begin(), decision_.distribution.end(), 0.0);
  decision_.distribution[static_cast<std::size_t>(pick)] = 1.0;
  decision_.is_point_mass = true;
  return decision_;
}

void UcbPolicy::update(int arm, double reward) {
  counts_[static_cast<std::size_t>(arm)] += 1;
  sums_[static_cast<std::size_t>(arm)] += reward;
  round_ += 1;
}

}  // namespace banditlab
