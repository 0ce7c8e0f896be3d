#include "banditlab/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace banditlab {

EpisodeTrace run_episode(const Instance& instance, const QualitySchedule& schedule,
                         Policy& policy, Rng& policy_rng, Rng& reward_rng,
                         long long horizon, long long checkpoint_stride,
                         std::uint64_t seed_label) {
  if (horizon < 0) {
    throw std::invalid_argument("run_episode: horizon must be non-negative");
  }
  if (checkpoint_stride < 1) {
    throw std::invalid_argument("run_episode: checkpoint stride must be positive");
  }

  EpisodeTrace trace(seed_label, horizon);
  trace.reserve(static_cast<std::size_t>(horizon / checkpoint_stride + 1));

  double cum_reward = 0.0;
  CompensatedSum cum_regret;
  CompensatedSum cum_quality;

  for (long long t = 1; t <= horizon; ++t) {
    const PolicyDecision& decision = policy.decide(policy_rng);
    const double quality =
        schedule.next_quality(t, decision.distribution, instance.optimal_arm) *
        instance.scale;
    const int arm = policy_rng.categorical(decision.distribution);
    const int reward =
        draw_reward(reward_rng, quality, instance.theta[static_cast<std::size_t>(arm)]);
    policy.update(arm, reward);

    cum_reward += reward;
    cum_regret.add(regret_increment(instance, quality, arm));
    cum_quality.add(quality);

    if (t % checkpoint_stride == 0 || t == horizon) {
      trace.append({t, cum_reward, cum_regret.value(), cum_quality.value()});
    }
  }
  return trace;
}

EpisodeTrace run_episode(const Instance& instance, const QualitySchedule& schedule,
                         Policy& policy, std::uint64_t seed, long long horizon,
                         long long checkpoint_stride) {
  Rng policy_rng(mix64(seed ^ kPolicyStreamSalt));
  Rng reward_rng(mix64(seed ^ kRewardStreamSalt));
  return run_episode(instance, schedule, policy, policy_rng, reward_rng, horizon,
                     checkpoint_stride, seed);
}

namespace {

AggregateCurve aggregate(const std::string& policy_id,
                         const std::vector<EpisodeTrace>& traces) {
  AggregateCurve curve;
  curve.policy = policy_id;
  curve.runs = static_cast<int>(traces.size());
  if (traces.empty() || traces.front().empty()) {
    return curve;
  }
  const std::size_t n_checkpoints = traces.front().checkpoints().size();
  for (const EpisodeTrace& t : traces) {
    if (t.checkpoints().size() != n_checkpoints) {
      throw std::logic_error("aggregate: traces have mismatched checkpoints");
    }
  }
  curve.rounds.reserve(n_checkpoints);
  curve.mean_regret.reserve(n_checkpoints);
  curve.stderr_regret.reserve(n_checkpoints);
  const double n = static_cast<double>(traces.size());
  for (std::size_t c = 0; c < n_checkpoints; ++c) {
    double mean = 0.0;
    for (const EpisodeTrace& t : traces) {
      mean += t.checkpoints()[c].cum_pseudo_regret;
    }
    mean /= n;
    double var = 0.0;
    if (traces.size() > 1) {
      for (const EpisodeTrace& t : traces) {
        const double d = t.checkpoints()[c].cum_pseudo_regret - mean;
        var += d * d;
      }
      var /= (n - 1.0);
    }
    curve.rounds.push_back(traces.front().checkpoints()[c].round);
    curve.mean_regret.push_back(mean);
    curve.stderr_regret.push_back(traces.size() > 1 ? std::sqrt(var / n) : 0.0);
  }
  return curve;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, bool keep_traces) {
  config.validate();
  const Instance instance = normalize_instance(config.raw_means);

  const std::size_t n_policies = config.policies.size();
  const std::size_t n_jobs = n_policies * static_cast<std::size_t>(config.runs);
  std::vector<std::vector<EpisodeTrace>> traces(n_policies);
  for (auto& per_policy : traces) {
    per_policy.resize(static_cast<std::size_t>(config.runs));
  }

  unsigned int workers = config.workers > 0
                             ? static_cast<unsigned int>(config.workers)
                             : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned int>(workers, static_cast<unsigned int>(std::max<std::size_t>(n_jobs, 1)));

  std::atomic<std::size_t> next_job{0};
  std::mutex error_mutex;
  std::string first_error;

  const auto worker = [&]() {
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= n_jobs) {
        return;
      }
      const std::size_t policy_idx = job / static_cast<std::size_t>(config.runs);
      const std::size_t run = job % static_cast<std::size_t>(config.runs);
      const PolicyRunSpec& spec = config.policies[policy_idx];
      try {
        const std::uint64_t seed =
            derive_episode_seed(config.master_seed, spec.id, run);
        auto policy = make_policy(spec.id, instance.k, config.horizon, spec.params);
        traces[policy_idx][run] = run_episode(instance, config.schedule, *policy, seed,
                                              config.horizon, config.checkpoint_stride);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (first_error.empty()) {
          first_error = "policy '" + spec.id + "' run " + std::to_string(run) +
                        " failed: " + e.what();
        }
        next_job.store(n_jobs);  // stop handing out work
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned int w = 0; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  for (std::thread& th : pool) {
    th.join();
  }
  if (!first_error.empty()) {
    throw std::runtime_error(first_error);
  }

  ExperimentResult result;
  result.curves.reserve(n_policies);
  for (std::size_t i = 0; i < n_policies; ++i) {
    result.curves.push_back(aggregate(config.policies[i].id, traces[i]));
  }
  if (keep_traces) {
    result.traces = std::move(traces);
  }
  return result;
}

}  // namespace banditlab
