#include "banditlab/policies/broad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace banditlab {

namespace {

// Closed-form vector at a given gamma.
std::vector<double> apply_gamma(std::span<const double> p, int chosen, double eta_r,
                                double gamma) {
  std::vector<double> out(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double shift = static_cast<int>(a) == chosen ? -eta_r : 0.0;
    out[a] = p[a] / (1.0 + shift + gamma * p[a]);
  }
  return out;
}

}  // namespace

std::vector<double> broad_update(std::span<const double> p, int chosen, double reward,
                                 double eta) {
  if (chosen < 0 || static_cast<std::size_t>(chosen) >= p.size()) {
    throw std::invalid_argument("broad_update: chosen arm out of range");
  }
  double min_p = 1.0;
  for (double v : p) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("broad_update: probabilities must be strictly positive");
    }
    min_p = std::min(min_p, v);
  }
  const double eta_r = eta * reward;
  if (!(eta_r < 1.0)) {
    throw std::invalid_argument("broad_update: eta * reward must stay below 1");
  }
  if (eta_r == 0.0) {
    return std::vector<double>(p.begin(), p.end());  // gamma = 0, identity
  }

  // sum(gamma) - 1 and its derivative; decreasing, so the root is bracketed
  // by [0, eta*r/min_p].
  const auto residual = [&](double gamma, double* deriv) {
    double s = -1.0;
    double d = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) {
      const double shift = static_cast<int>(a) == chosen ? -eta_r : 0.0;
      const double den = 1.0 + shift + gamma * p[a];
      s += p[a] / den;
      d -= p[a] * p[a] / (den * den);
    }
    if (deriv != nullptr) {
      *deriv = d;
    }
    return s;
  };

  double lo = 0.0;
  double hi = eta_r / min_p;
  double gamma = 0.0;
  double f = residual(gamma, nullptr);
  for (int it = 0; it < 200 && std::abs(f) > 1e-14; ++it) {
    double d;
    f = residual(gamma, &d);
    if (std::abs(f) <= 1e-14) {
      break;
    }
    if (f > 0.0) {
      lo = gamma;
    } else {
      hi = gamma;
    }
    double next = gamma - f / d;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (next == gamma) {
      break;
    }
    gamma = next;
  }

  return apply_gamma(p, chosen, eta_r, gamma);
}

double broad_accumulator_increment(std::span<const double> p, int chosen, double reward) {
  if (chosen < 0 || static_cast<std::size_t>(chosen) >= p.size()) {
    throw std::invalid_argument("broad_accumulator_increment: chosen arm out of range");
  }
  const double pc = p[static_cast<std::size_t>(chosen)];
  if (!(pc > 0.0)) {
    throw std::invalid_argument("broad_accumulator_increment: p(chosen) must be positive");
  }
  double total = 0.0;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const double rhat = static_cast<int>(a) == chosen ? reward / pc : 0.0;
    const double diff = rhat - reward;
    total += p[a] * p[a] * diff * diff;
  }
  return total;
}

bool broad_restart_check(double accumulator, int k, long long horizon, double eta) {
  const double threshold =
      static_cast<double>(k) * std::log(static_cast<double>(horizon)) / (3.0 * eta * eta);
  return accumulator >= threshold;
}

BroadPolicy::BroadPolicy(int k, long long horizon, double eta0)
    : k_(k), horizon_(horizon), eta_(eta0) {
  if (k < 1) {
    throw std::invalid_argument("broad: need at least one arm");
  }
  if (horizon < 1) {
    throw std::invalid_argument("broad: horizon must be positive");
  }
  if (!(eta0 > 0.0 && eta0 <= 0.5)) {
    throw std::invalid_argument("broad: eta0 must lie in (0, 0.5]");
  }
  p_.assign(static_cast<std::size_t>(k), 1.0 / static_cast<double>(k));
}

const PolicyDecision& BroadPolicy::decide(Rng&) {
  decision_.distribution = p_;
  finalize_decision(decision_);
  return decision_;
}

void BroadPolicy::update(int arm, double reward) {
  accumulator_ += broad_accumulator_increment(p_, arm, reward);
  if (reward != 0.0) {
    p_ = broad_update(p_, arm, reward, eta_);
  }
  if (broad_restart_check(accumulator_, k_, horizon_, eta_)) {
    eta_ *= 0.5;
    ++epoch_;
    std::fill(p_.begin(), p_.end(), 1.0 / static_cast<double>(k_));
    accumulator_ = 0.0;
  }
}

}  // namespace banditlab
