#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "banditlab/policies/aae.hpp"
#include "banditlab/policies/aaeas.hpp"
#include "banditlab/policies/broad.hpp"
#include "banditlab/policies/thompson.hpp"
#include "banditlab/policies/ucb.hpp"
#include "banditlab/policy.hpp"
#include "banditlab/rng.hpp"

using namespace banditlab;

TEST_CASE("every policy announces a valid distribution after every update") {
  for (const std::string& id : known_policy_ids()) {
    CAPTURE(id);
    const int k = 3;
    auto policy = make_policy(id, k, 2000, {});
    Rng rng(400 + static_cast<std::uint64_t>(id.size()));
    for (int t = 0; t < 2000; ++t) {
      const PolicyDecision& d = policy->decide(rng);
      REQUIRE(d.distribution.size() == static_cast<std::size_t>(k));
      double sum = 0.0;
      bool has_near_one = false;
      for (double v : d.distribution) {
        REQUIRE(v >= 0.0);
        REQUIRE(v <= 1.0 + 1e-9);
        if (v >= 1.0 - 1e-12) has_near_one = true;
        sum += v;
      }
      REQUIRE(std::abs(sum - 1.0) <= 1e-9);
      REQUIRE(d.is_point_mass == has_near_one);
      const int arm = rng.categorical(d.distribution);
      policy->update(arm, rng.uniform01() < 0.5 ? 1.0 : 0.0);
    }
  }
}

TEST_CASE("broad probabilities stay strictly inside the simplex") {
  BroadPolicy policy(2, 10000, 0.5);
  Rng rng(41);
  for (int t = 0; t < 5000; ++t) {
    const PolicyDecision& d = policy.decide(rng);
    const int arm = rng.categorical(d.distribution);
    // heavily biased rewards push p toward the boundary without reaching it
    policy.update(arm, arm == 0 ? (rng.uniform01() < 0.9 ? 1.0 : 0.0) : 0.0);
    for (double v : policy.probabilities()) {
      REQUIRE(v > 0.0);
      REQUIRE(v < 1.0);
    }
  }
}

namespace {

// swap of arms 0 and 2 in a 3-arm problem
int permute(int arm) { return arm == 0 ? 2 : arm == 2 ? 0 : arm; }

std::vector<std::pair<int, double>> random_history(int k, int length, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, double>> h;
  h.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    h.emplace_back(static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(k)),
                   rng.uniform01() < 0.5 ? 1.0 : 0.0);
  }
  return h;
}

}  // namespace

TEST_CASE("elimination policies are equivariant under arm relabeling") {
  for (const std::string& id : {std::string("aaeas"), std::string("aae")}) {
    CAPTURE(id);
    auto original = make_policy(id, 3, 1000, {});
    auto relabeled = make_policy(id, 3, 1000, {});
    Rng rng(7);
    for (const auto& [arm, reward] : random_history(3, 800, 99)) {
      const PolicyDecision& da = original->decide(rng);
      const PolicyDecision& db = relabeled->decide(rng);
      for (int a = 0; a < 3; ++a) {
        REQUIRE(db.distribution[static_cast<std::size_t>(permute(a))] ==
                da.distribution[static_cast<std::size_t>(a)]);
      }
      original->update(arm, reward);
      relabeled->update(permute(arm), reward);
    }
  }
}

TEST_CASE("ucb is equivariant under arm relabeling once statistics differ") {
  UcbPolicy original(3);
  UcbPolicy relabeled(3);
  Rng rng(8);
  // pull every arm once so the index-order bootstrap is out of the way,
  // then continuous rewards keep the indices tie-free
  Rng reward_rng(55);
  for (int a = 0; a < 3; ++a) {
    const double reward = 0.2 + 0.6 * reward_rng.uniform01();
    original.update(a, reward);
    relabeled.update(permute(a), reward);
  }
  for (int i = 0; i < 300; ++i) {
    const PolicyDecision& da = original.decide(rng);
    const PolicyDecision& db = relabeled.decide(rng);
    for (int a = 0; a < 3; ++a) {
      REQUIRE(db.distribution[static_cast<std::size_t>(permute(a))] ==
              da.distribution[static_cast<std::size_t>(a)]);
    }
    const int arm = static_cast<int>(reward_rng.next_u64() % 3);
    const double reward = reward_rng.uniform01();
    original.update(arm, reward);
    relabeled.update(permute(arm), reward);
  }
}

TEST_CASE("thompson state permutes with the labels; selection follows it") {
  ThompsonPolicy original(3);
  ThompsonPolicy relabeled(3);
  for (const auto& [arm, reward] : random_history(3, 500, 123)) {
    original.update(arm, reward);
    relabeled.update(permute(arm), reward);
  }
  for (int a = 0; a < 3; ++a) {
    REQUIRE(relabeled.successes()[static_cast<std::size_t>(permute(a))] ==
            original.successes()[static_cast<std::size_t>(a)]);
    REQUIRE(relabeled.failures()[static_cast<std::size_t>(permute(a))] ==
            original.failures()[static_cast<std::size_t>(a)]);
  }
  // selection frequencies must permute in distribution (sampling noise only)
  const int n = 20000;
  std::vector<int> freq_a(3, 0);
  std::vector<int> freq_b(3, 0);
  Rng rng_a(1001);
  Rng rng_b(2002);
  for (int i = 0; i < n; ++i) {
    const PolicyDecision& da = original.decide(rng_a);
    const PolicyDecision& db = relabeled.decide(rng_b);
    for (int a = 0; a < 3; ++a) {
      if (da.distribution[static_cast<std::size_t>(a)] == 1.0) freq_a[static_cast<std::size_t>(a)]++;
      if (db.distribution[static_cast<std::size_t>(a)] == 1.0) freq_b[static_cast<std::size_t>(a)]++;
    }
  }
  for (int a = 0; a < 3; ++a) {
    const double fa = static_cast<double>(freq_a[static_cast<std::size_t>(a)]) / n;
    const double fb = static_cast<double>(freq_b[static_cast<std::size_t>(permute(a))]) / n;
    const double pooled = 0.5 * (fa + fb);
    const double se = std::sqrt(2.0 * std::max(pooled * (1 - pooled), 1e-3) / n);
    REQUIRE(std::abs(fa - fb) < 4.0 * se);
  }
}

TEST_CASE("factory rejects unknown policies and parameters") {
  CHECK_THROWS_AS(make_policy("bogus", 2, 100, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_policy("ucb", 2, 100, {{"delta", 0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_policy("aaeas", 2, 100, {{"eta0", 0.1}}), std::invalid_argument);
  CHECK(make_policy("aaeas", 2, 100, {{"delta", 0.05}}) != nullptr);
  CHECK(make_policy("broad", 2, 100, {{"eta0", 0.25}}) != nullptr);
  CHECK(make_policy("exp3pp", 2, 100, {{"xi", 10.0}, {"eta_coef", 0.3}}) != nullptr);
  CHECK(make_policy("tsallis", 2, 100, {{"eta_coef", 2.0}}) != nullptr);
}
