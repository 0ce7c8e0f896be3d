#include "banditlab/policies/exp3pp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banditlab {

std::vector<double> exp3pp_distribution(std::span<const double> cumulative_losses,
                                        long long round, double eta_coef, double xi) {
  const std::size_t k = cumulative_losses.size();
  if (k == 0) {
    throw std::invalid_argument("exp3pp_distribution: need at least one arm");
  }
  if (round < 1) {
    throw std::invalid_argument("exp3pp_distribution: rounds are 1-based");
  }
  const double t = static_cast<double>(round);
  const double kd = static_cast<double>(k);
  const double log_k = std::log(kd);
  const double eta = eta_coef * std::sqrt(log_k / (t * kd));
  const double min_loss =
      *std::min_element(cumulative_losses.begin(), cumulative_losses.end());

  std::vector<double> eps(k);
  double eps_sum = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    double e = std::min(1.0 / (2.0 * kd), eta);
    const double gap = std::min(1.0, (cumulative_losses[a] - min_loss) / t);
    if (gap > 0.0) {
      e = std::min(e, xi * std::log(t) / (t * gap * gap));
    }
    eps[a] = e;
    eps_sum += e;
  }

  // Softmax over -eta * Lhat, shifted by the minimum for stability.
  std::vector<double> p(k);
  double wsum = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    p[a] = std::exp(-eta * (cumulative_losses[a] - min_loss));
    wsum += p[a];
  }
  for (std::size_t a = 0; a < k; ++a) {
    p[a] = (1.0 - eps_sum) * (p[a] / wsum) + eps[a];
  }
  return p;
}

Exp3ppPolicy::Exp3ppPolicy(int k, double eta_coef, double xi)
    : eta_coef_(eta_coef), xi_(xi) {
  if (k < 1) {
    throw std::invalid_argument("exp3pp: need at least one arm");
  }
  if (!(eta_coef > 0.0) || !(xi > 0.0)) {
    throw std::invalid_argument("exp3pp: constants must be positive");
  }
  losses_.assign(static_cast<std::size_t>(k), 0.0);
}

const PolicyDecision& Exp3ppPolicy::decide(Rng&) {
  decision_.distribution = exp3pp_distribution(losses_, round_, eta_coef_, xi_);
  finalize_decision(decision_);
  decided_ = true;
  return decision_;
}

void Exp3ppPolicy::update(int arm, double reward) {
  if (!decided_) {
    throw std::logic_error("exp3pp: update before any decision");
  }
  const double p = decision_.distribution[static_cast<std::size_t>(arm)];
  if (!(p > 0.0)) {
    throw std::logic_error("exp3pp: updated arm had zero announced probability");
  }
  losses_[static_cast<std::size_t>(arm)] += (1.0 - reward) / p;
  round_ += 1;
}

}  // namespace banditlab
