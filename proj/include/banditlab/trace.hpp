#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace banditlab {

// Neumaier compensated sum. Inputs here are non-negative, which keeps
// value() non-decreasing as terms are added.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Checkpoint {
  long long round = 0;
  double cum_reward = 0.0;
  double cum_pseudo_regret = 0.0;
  double cum_quality = 0.0;  // Q = sum of effective qualities, diagnostic
};

// Checkpointed record of one seeded episode. append() enforces the
// monotonicity invariants; the simulator guarantees a final checkpoint at
// round T (none when T == 0).
class EpisodeTrace {
 public:
  EpisodeTrace() = default;
  EpisodeTrace(std::uint64_t seed, long long horizon) : seed_(seed), horizon_(horizon) {}

  void append(const Checkpoint& c);

  std::uint64_t seed() const { return seed_; }
  long long horizon() const { return horizon_; }
  const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }
  bool empty() const { return checkpoints_.empty(); }
  const Checkpoint& final() const { return checkpoints_.back(); }

  void reserve(std::size_t n) { checkpoints_.reserve(n); }

 private:
  std::uint64_t seed_ = 0;
  long long horizon_ = 0;
  std::vector<Checkpoint> checkpoints_;
};

}  // namespace banditlab
