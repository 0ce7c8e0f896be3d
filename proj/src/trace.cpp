#include "banditlab/trace.hpp"

#include <stdexcept>

namespace banditlab {

void EpisodeTrace::append(const Checkpoint& c) {
  if (!checkpoints_.empty()) {
    const Checkpoint& prev = checkpoints_.back();
    if (c.round <= prev.round) {
      throw std::logic_error("EpisodeTrace: checkpoint rounds must strictly increase");
    }
    if (c.cum_reward < prev.cum_reward || c.cum_pseudo_regret < prev.cum_pseudo_regret ||
        c.cum_quality < prev.cum_quality) {
      throw std::logic_error("EpisodeTrace: cumulative quantities must be non-decreasing");
    }
  }
  // Gaps are at most 1, so regret can never exceed the accumulated quality.
  if (c.cum_pseudo_regret > c.cum_quality * (1.0 + 1e-12) + 1e-12) {
    throw std::logic_error("EpisodeTrace: pseudo-regret exceeds cumulative quality");
  }
  checkpoints_.push_back(c);
}

}  // namespace banditlab
