#include "banditlab/policy.hpp"

#include <stdexcept>

#include "banditlab/policies/aae.hpp"
#include "banditlab/policies/aaeas.hpp"
#include "banditlab/policies/broad.hpp"
#include "banditlab/policies/exp3pp.hpp"
#include "banditlab/policies/thompson.hpp"
#include "banditlab/policies/tsallis.hpp"
#include "banditlab/policies/ucb.hpp"

namespace banditlab {

namespace {

double take(const PolicyParams& params, PolicyParams& rest, const std::string& key,
            double fallback) {
  const auto it = params.find(key);
  if (it == params.end()) {
    return fallback;
  }
  rest.erase(key);
  return it->second;
}

void reject_leftovers(std::string_view policy_id, const PolicyParams& rest) {
  if (!rest.empty()) {
    throw std::invalid_argument("unknown parameter '" + rest.begin()->first +
                                "' for policy '" + std::string(policy_id) + "'");
  }
}

}  // namespace

void finalize_decision(PolicyDecision& d) {
  d.is_point_mass = false;
  for (double v : d.distribution) {
    if (v >= 1.0 - 1e-12) {
      d.is_point_mass = true;
      break;
    }
  }
}

const std::vector<std::string>& known_policy_ids() {
  static const std::vector<std::string> ids = {"aaeas", "broad",  "ucb",    "aae",
                                               "thompson", "exp3pp", "tsallis"};
  return ids;
}

std::unique_ptr<Policy> make_policy(std::string_view policy_id, int k, long long horizon,
                                    const PolicyParams& params) {
  if (horizon < 1) {
    throw std::invalid_argument("make_policy: horizon must be positive");
  }
  PolicyParams rest = params;
  const double horizon_d = static_cast<double>(horizon);

  std::unique_ptr<Policy> policy;
  if (policy_id == "aaeas") {
    const double delta = take(params, rest, "delta", 1.0 / horizon_d);
    policy = std::make_unique<AaeasPolicy>(k, horizon, delta);
  } else if (policy_id == "broad") {
    const double eta0 = take(params, rest, "eta0", 0.5);
    policy = std::make_unique<BroadPolicy>(k, horizon, eta0);
  } else if (policy_id == "ucb") {
    policy = std::make_unique<UcbPolicy>(k);
  } else if (policy_id == "aae") {
    const double delta = take(params, rest, "delta", 1.0 / horizon_d);
    policy = std::make_unique<AaePolicy>(k, horizon, delta);
  } else if (policy_id == "thompson") {
    policy = std::make_unique<ThompsonPolicy>(k);
  } else if (policy_id == "exp3pp") {
    const double eta_coef = take(params, rest, "eta_coef", 0.5);
    const double xi = take(params, rest, "xi", 18.0);
    policy = std::make_unique<Exp3ppPolicy>(k, eta_coef, xi);
  } else if (policy_id == "tsallis") {
    const double eta_coef = take(params, rest, "eta_coef", 4.0);
    policy = std::make_unique<TsallisPolicy>(k, eta_coef);
  } else {
    throw std::invalid_argument("unknown policy '" + std::string(policy_id) + "'");
  }
  reject_leftovers(policy_id, rest);
  return policy;
}

}  // namespace banditlab
