#pragma once

#include <span>
#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// Maximizer over the simplex of
//   sum_a rtilde(a) p(a) + eta [ sum_a sqrt(p(a)) - p(a)/2 ],   eta = eta_coef/sqrt(t).
// Stationarity gives p(a) = (eta / (2(x - rtilde(a)) + eta))^2 with x the
// unique normalizing scalar; x is found by a safeguarded Newton solve to a
// residual |sum p - 1| <= 1e-12. Default eta_coef = 4.
std::vector<double> tsallis_distribution(std::span<const double> reward_estimates,
                                         long long round, double eta_coef = 4.0);

// Mirror descent with the Tsallis-entropy regularizer and the 1/sqrt(t)
// rate schedule. The estimate rtilde(a) fed to the solve is the per-round
// average of the unbiased reward estimates 1 - (1-r)/p(a) * 1[a chosen]
// (the common +1 cancels in the solve and is not stored). Averages keep the
// estimate scale bounded, so the shrinking eta concentrates at the 1/t rate
// rather than collapsing on cumulative sums; anchoring on losses keeps a
// rarely played arm from receiving unbounded boosts.
class TsallisPolicy final : public Policy {
 public:
  TsallisPolicy(int k, double eta_coef = 4.0);

  std::string_view id() const override { return "tsallis"; }
  const PolicyDecision& decide(Rng& rng) override;
  void update(int arm, double reward) override;

  // The averaged estimates as passed to the solve at the current round.
  std::vector<double> reward_estimates() const;
  long long round() const { return round_; }

 private:
  double eta_coef_;
  std::vector<double> cumulative_losses_;
  std::vector<double> scratch_;
  long long round_ = 1;
  bool decided_ = false;
  PolicyDecision decision_;
};

}  // namespace banditlab
