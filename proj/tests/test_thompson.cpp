#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "banditlab/policies/thompson.hpp"
#include "banditlab/rng.hpp"

using namespace banditlab;

TEST_CASE("fresh two-arm state picks both arms equally often") {
  ThompsonPolicy policy(2);
  Rng rng(314);
  const int n = 100000;
  int arm0 = 0;
  for (int i = 0; i < n; ++i) {
    const PolicyDecision& d = policy.decide(rng);
    CHECK(d.is_point_mass);
    if (d.distribution[0] == 1.0) {
      ++arm0;
    }
  }
  const double freq = static_cast<double>(arm0) / n;
  const double se = std::sqrt(0.25 / n);
  CHECK(std::abs(freq - 0.5) < 3.0 * se);
}

TEST_CASE("updates bump exactly one posterior parameter") {
  ThompsonPolicy policy(3);
  policy.update(1, 1.0);
  CHECK(policy.successes() == std::vector<double>{1.0, 2.0, 1.0});
  CHECK(policy.failures() == std::vector<double>{1.0, 1.0, 1.0});
  policy.update(1, 0.0);
  policy.update(2, 0.0);
  CHECK(policy.successes() == std::vector<double>{1.0, 2.0, 1.0});
  CHECK(policy.failures() == std::vector<double>{1.0, 2.0, 2.0});
}

TEST_CASE("non-binary rewards are rejected") {
  ThompsonPolicy policy(2);
  CHECK_THROWS_AS(policy.update(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(policy.update(0, -1.0), std::invalid_argument);
}

TEST_CASE("a zero-reward window leaves Beta(1, 1+m) per arm") {
  // 25 zero-quality rounds split 13/12 across two arms: posterior means
  // 1/15 and 1/14, far below the fresh-prior mean 1/2. This is the state a
  // cold start leaves behind.
  ThompsonPolicy policy(2);
  for (int t = 0; t < 25; ++t) {
    policy.update(t % 2, 0.0);
  }
  CHECK(policy.successes() == std::vector<double>{1.0, 1.0});
  CHECK(policy.failures() == std::vector<double>{14.0, 13.0});
  CHECK(policy.posterior_mean(0) == 1.0 / 15.0);
  CHECK(policy.posterior_mean(1) == 1.0 / 14.0);
  CHECK(policy.posterior_mean(0) < 0.08);
}

TEST_CASE("a skewed posterior rarely wins against an established arm") {
  // One arm pinned near 0.5 by data, the other stuck at the cold-start
  // prior Beta(1, 14): the poisoned arm should win only a tiny fraction of
  // sampling rounds, which is exactly why recovery is slow.
  ThompsonPolicy policy(2);
  for (int i = 0; i < 400; ++i) {
    policy.update(0, i % 2 == 0 ? 1.0 : 0.0);
  }
  for (int i = 0; i < 13; ++i) {
    policy.update(1, 0.0);
  }
  Rng rng(2718);
  int poisoned_wins = 0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const PolicyDecision& d = policy.decide(rng);
    if (d.distribution[1] == 1.0) {
      ++poisoned_wins;
    }
  }
  CHECK(static_cast<double>(poisoned_wins) / n < 0.01);
}
