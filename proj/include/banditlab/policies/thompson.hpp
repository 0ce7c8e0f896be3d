#pragma once

#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// Bernoulli Thompson sampling: Beta(successes, failures) per arm, both
// initialized to 1. Each round samples every posterior and plays the
// argmax; the announced decision is the point mass on that argmax. Rewards
// must be 0 or 1.
class ThompsonPolicy final : public Policy {
 public:
  explicit ThompsonPolicy(int k);

  std::string_view id() const override { return "thompson"; }
  const PolicyDecision& decide(Rng& rng) override;
  void update(int arm, double reward) override;

  const std::vector<double>& successes() const { return successes_; }
  const std::vector<double>& failures() const { return failures_; }
  double posterior_mean(int arm) const;

 private:
  std::vector<double> successes_;
  std::vector<double> failures_;
  PolicyDecision decision_;
};

}  // namespace banditlab
