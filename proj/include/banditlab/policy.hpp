#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "banditlab/rng.hpp"

namespace banditlab {

// The distribution a policy announces before the adversary moves. Point
// masses (an entry equal to 1 within 1e-12) are flagged because they are
// what a reactive adversary exploits.
struct PolicyDecision {
  std::vector<double> distribution;
  bool is_point_mass = false;
};

// Recomputes the point-mass flag from the entries.
void finalize_decision(PolicyDecision& d);

// Uniform contract for all seven algorithms: announce a distribution, then
// learn the realized (arm, reward). States are single-owner mutable objects;
// distinct episodes use distinct policy objects and random streams.
class Policy {
 public:
  virtual ~Policy() = default;

  virtual std::string_view id() const = 0;

  // Announces p^t. The returned reference stays valid until the next call.
  virtual const PolicyDecision& decide(Rng& rng) = 0;

  // Bandit feedback for the realized arm.
  virtual void update(int arm, double reward) = 0;
};

using PolicyParams = std::map<std::string, double>;

// Known identifiers: aaeas, broad, ucb, aae, thompson, exp3pp, tsallis.
const std::vector<std::string>& known_policy_ids();

// Builds a fresh policy for a k-arm problem with the given horizon.
// Unknown identifiers and unknown parameter keys are rejected.
std::unique_ptr<Policy> make_policy(std::string_view policy_id, int k, long long horizon,
                                    const PolicyParams& params = {});

}  // namespace banditlab
