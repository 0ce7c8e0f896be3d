#pragma once

#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// Classical active arm elimination with per-arm confidence radii
// rad(a) = sqrt(2 ln(2/delta') / n(a)), randomized over the active set.
// Arm a is dropped once mean(a) + rad(a) < max_{a'} (mean(a') - rad(a')).
// Counts n are the effective-sample proxy here, which is what the scaling
// attacks poison; the CB(S)-driven variant replaces exactly that.
class AaePolicy final : public Policy {
 public:
  AaePolicy(int k, long long horizon, double delta);

  std::string_view id() const override { return "aae"; }
  const PolicyDecision& decide(Rng& rng) override;
  void update(int arm, double reward) override;

  const std::vector<int>& active_arms() const { return active_; }
  const std::vector<long long>& counts() const { return counts_; }
  const std::vector<double>& sums() const { return sums_; }
  double delta_prime() const { return delta_prime_; }

 private:
  double delta_prime_;
  double log_term_;  // ln(2/delta')
  std::vector<int> active_;
  std::vector<long long> counts_;
  std::vector<double> sums_;
  PolicyDecision decision_;
};

}  // namespace banditlab
