#include "banditlab/policies/tsallis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banditlab {

namespace {

// Solves sum_a (eta/(2(x - r(a)) + eta))^2 = 1 for x. Worked in the shifted
// coordinate y = x - max r with per-arm gaps g(a) = max r - r(a) >= 0: when
// one arm dominates, the root lies within an ulp of max r on the absolute
// axis, while y keeps full precision near 0. The sum is convex and strictly
// decreasing on y in [0, eta(sqrt(k)-1)/2]: it is >= 1 at the left end (the
// best arm's term alone is 1) and <= 1 at the right end. Newton with a
// bisection fallback.
double solve_normalizer(std::span<const double> gaps, double eta) {
  const double kd = static_cast<double>(gaps.size());
  double lo = 0.0;
  double hi = eta * (std::sqrt(kd) - 1.0) / 2.0;

  const auto residual = [&](double y, double* deriv) {
    double s = -1.0;
    double d = 0.0;
    for (double g : gaps) {
      const double den = 2.0 * (y + g) + eta;
      const double root = eta / den;
      s += root * root;
      d -= 4.0 * eta * eta / (den * den * den);
    }
    if (deriv != nullptr) {
      *deriv = d;
    }
    return s;
  };

  double y = 0.0;
  double f = 1.0;
  for (int it = 0; it < 300; ++it) {
    double d;
    f = residual(y, &d);
    if (std::abs(f) <= 1e-12) {
      return y;
    }
    if (f > 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    double next = y - f / d;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next == y) {
      break;
    }
    y = next;
  }
  if (std::abs(f) > 1e-10) {
    throw std::runtime_error("tsallis_distribution: normalizer solve did not converge");
  }
  return y;
}

}  // namespace

std::vector<double> tsallis_distribution(std::span<const double> reward_estimates,
                                         long long round, double eta_coef) {
  if (reward_estimates.empty()) {
    throw std::invalid_argument("tsallis_distribution: need at least one arm");
  }
  if (round < 1) {
    throw std::invalid_argument("tsallis_distribution: rounds are 1-based");
  }
  const double eta = eta_coef / std::sqrt(static_cast<double>(round));
  const double max_r =
      *std::max_element(reward_estimates.begin(), reward_estimates.end());
  std::vector<double> gaps(reward_estimates.size());
  for (std::size_t a = 0; a < gaps.size(); ++a) {
    gaps[a] = max_r - reward_estimates[a];
  }
  const double y = solve_normalizer(gaps, eta);
  std::vector<double> p(gaps.size());
  for (std::size_t a = 0; a < gaps.size(); ++a) {
    const double root = eta / (2.0 * (y + gaps[a]) + eta);
    p[a] = root * root;
  }
  return p;
}

TsallisPolicy::TsallisPolicy(int k, double eta_coef) : eta_coef_(eta_coef) {
  if (k < 1) {
    throw std::invalid_argument("tsallis: need at least one arm");
  }
  if (!(eta_coef > 0.0)) {
    throw std::invalid_argument("tsallis: eta_coef must be positive");
  }
  cumulative_losses_.assign(static_cast<std::size_t>(k), 0.0);
  scratch_.assign(static_cast<std::size_t>(k), 0.0);
}

std::vector<double> TsallisPolicy::reward_estimates() const {
  const double n = std::max(1.0, static_cast<double>(round_ - 1));
  std::vector<double> avg(cumulative_losses_.size());
  for (std::size_t a = 0; a < avg.size(); ++a) {
    avg[a] = -cumulative_losses_[a] / n;
  }
  return avg;
}

const PolicyDecision& TsallisPolicy::decide(Rng&) {
  const double n = std::max(1.0, static_cast<double>(round_ - 1));
  for (std::size_t a = 0; a < cumulative_losses_.size(); ++a) {
    scratch_[a] = -cumulative_losses_[a] / n;
  }
  decision_.distribution = tsallis_distribution(scratch_, round_, eta_coef_);
  finalize_decision(decision_);
  decided_ = true;
  return decision_;
}

void TsallisPolicy::update(int arm, double reward) {
  if (!decided_) {
    throw std::logic_error("tsallis: update before any decision");
  }
  const double p = decision_.distribution[static_cast<std::size_t>(arm)];
  if (!(p > 0.0)) {
    throw std::logic_error("tsallis: updated arm had zero announced probability");
  }
  cumulative_losses_[static_cast<std::size_t>(arm)] += (1.0 - reward) / p;
  round_ += 1;
}

}  // namespace banditlab
