#pragma once

#include <span>
#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// EXP3 over cumulative importance-weighted losses with a per-arm exploration
// floor tuned to the empirical gap:
//   eta_t   = eta_coef * sqrt(ln k / (t k))
//   eps_t(a) = min(1/(2k), eta_t, xi * ln(t) / (t * gap_t(a)^2))
//   gap_t(a) = min(1, (Lhat(a) - min Lhat) / t)      (gap 0 drops the term)
//   p = (1 - sum eps) * softmax(-eta_t * Lhat) + eps
// Defaults eta_coef = 0.5, xi = 18.
std::vector<double> exp3pp_distribution(std::span<const double> cumulative_losses,
                                        long long round, double eta_coef = 0.5,
                                        double xi = 18.0);

class Exp3ppPolicy final : public Policy {
 public:
  Exp3ppPolicy(int k, double eta_coef = 0.5, double xi = 18.0);

  std::string_view id() const override { return "exp3pp"; }
  const PolicyDecision& decide(Rng& rng) override;
  void update(int arm, double reward) override;

  const std::vector<double>& cumulative_losses() const { return losses_; }
  long long round() const { return round_; }

 private:
  double eta_coef_;
  double xi_;
  std::vector<double> losses_;  // Lhat
  long long round_ = 1;
  bool decided_ = false;
  PolicyDecision decision_;
};

}  // namespace banditlab
