#pragma once

#include <span>
#include <vector>

#include "banditlab/policy.hpp"

namespace banditlab {

// Argmax of r(a)/n(a) + sqrt(ln(t)/n(a)). Unpulled arms are bootstrapped
// first in index order; ties break to the lowest index.
int ucb_select(std::span<const long long> counts, std::span<const double> sums,
               long long round);

// Deterministic UCB; every announced decision is a point mass, which is
// exactly what the targeted-zero adversary exploits.
class UcbPolicy final : public Policy {
 public:
  explicit UcbPolicy(int k);

  std::string_view id() const override { return "ucb"; }
  const PolicyDecision& decide(Rng& rng) override;
  void update(int arm, double reward) override;

  const std::vector<long long>& counts() const { return counts_; }
  const std::vector<double>& sums() const { return sums_; }
  long long round() const { return round_; }

 private:
  std::vector<long long> counts_;
  std::vector<double> sums_;
  long long round_ = 1;  // number of updates received plus 1
  PolicyDecision decision_;
};

}  // namespace banditlab
