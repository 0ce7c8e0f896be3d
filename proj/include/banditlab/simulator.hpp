#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/config.hpp"
#include "banditlab/instance.hpp"
#include "banditlab/policy.hpp"
#include "banditlab/schedule.hpp"
#include "banditlab/trace.hpp"

namespace banditlab {

// Per-checkpoint mean and standard error of cumulative pseudo-regret
// across runs; the unit of CSV/SVG output.
struct AggregateCurve {
  std::string policy;
  std::vector<long long> rounds;
  std::vector<double> mean_regret;
  std::vector<double> stderr_regret;  // sample stddev / sqrt(runs); 0 for runs == 1
  int runs = 0;
};

struct ExperimentResult {
  std::vector<AggregateCurve> curves;  // one per configured policy, in order
  // Per-policy traces in run order; filled only when keep_traces was set.
  std::vector<std::vector<EpisodeTrace>> traces;
};

// One seeded episode under the round protocol: the policy announces p^t,
// the schedule produces q^t from (t, p^t), the arm is realized from p^t,
// one reward is drawn for that arm alone, and the policy learns (a^t, r^t).
// Schedule qualities are multiplied by instance.scale, so raw-mean
// instances behave exactly like their normalized counterparts. The policy
// stream drives policy randomness and arm realization; the reward stream
// is consumed exactly once per round.
EpisodeTrace run_episode(const Instance& instance, const QualitySchedule& schedule,
                         Policy& policy, Rng& policy_rng, Rng& reward_rng,
                         long long horizon, long long checkpoint_stride,
                         std::uint64_t seed_label = 0);

// Convenience overload deriving both streams from one episode seed.
EpisodeTrace run_episode(const Instance& instance, const QualitySchedule& schedule,
                         Policy& policy, std::uint64_t seed, long long horizon,
                         long long checkpoint_stride);

// Runs `config.runs` seeded episodes per policy (episode seeds derived from
// (master_seed, policy id, run index)), concurrently across a worker pool.
// Results are bit-identical for any worker count.
ExperimentResult run_experiment(const ExperimentConfig& config, bool keep_traces = false);

}  // namespace banditlab
