#pragma once

#include <span>
#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// One step of online mirror descent with the log-barrier regularizer:
//   p'(chosen) = p(chosen) / (1 - eta*r + gamma*p(chosen))
//   p'(a)      = p(a) / (1 + gamma*p(a))        for a != chosen
// where gamma >= 0 is the unique value making p' sum to 1. The sum is 1 at
// gamma = 0 when r = 0 and strictly decreasing in gamma, so the root is
// found by a safeguarded Newton solve on [0, eta*r / min_a p(a)]. Requires
// eta*r < 1 and strictly positive p.
std::vector<double> broad_update(std::span<const double> p, int chosen, double reward,
                                 double eta);

// Per-round term of the restart statistic,
//   sum_a p(a)^2 (rhat(a) - r)^2
// with rhat the importance-sampling estimate r/p(chosen) on the chosen arm
// and 0 elsewhere.
double broad_accumulator_increment(std::span<const double> p, int chosen, double reward);

// True once the accumulated statistic reaches k ln(T) / (3 eta^2).
bool broad_restart_check(double accumulator, int k, long long horizon, double eta);

// Log-barrier OMD with the restart doubling trick: when the statistic
// crosses its threshold the learning rate halves, the distribution resets
// to uniform and the accumulator to zero.
class BroadPolicy final : public Policy {
 public:
  BroadPolicy(int k, long long horizon, double eta0 = 0.5);

  std::string_view id() const override { return "broad"; }
  const PolicyDecision& decide(Rng& rng) override;
  void update(int arm, double reward) override;

  double eta() const { return eta_; }
  int epoch() const { return epoch_; }
  double accumulator() const { return accumulator_; }
  const std::vector<double>& probabilities() const { return p_; }

 private:
  int k_;
  long long horizon_;
  double eta_;
  int epoch_ = 0;
  double accumulator_ = 0.0;
  std::vector<double> p_;
  PolicyDecision decision_;
};

}  // namespace banditlab
