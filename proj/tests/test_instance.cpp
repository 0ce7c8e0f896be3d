#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "banditlab/instance.hpp"

using namespace banditlab;

TEST_CASE("normalization divides by the best raw mean") {
  const Instance a = normalize_instance(std::vector<double>{0.5, 0.8});
  CHECK(a.k == 2);
  CHECK(a.theta[0] == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(a.theta[1] == 1.0);  // exact
  CHECK(a.optimal_arm == 1);
  CHECK(a.scale == 0.8);

  const Instance b = normalize_instance(std::vector<double>{0.005, 0.001});
  CHECK(b.theta[0] == 1.0);
  CHECK(b.theta[1] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(b.optimal_arm == 0);
  CHECK(b.scale == 0.005);
  CHECK(b.gap(1) == doctest::Approx(0.8).epsilon(1e-15));

  const Instance c = normalize_instance(std::vector<double>{1.0});
  CHECK(c.theta == std::vector<double>{1.0});
  CHECK(c.scale == 1.0);
}

TEST_CASE("degenerate means are rejected") {
  CHECK_THROWS_AS(normalize_instance(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_instance(std::vector<double>{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_instance(std::vector<double>{0.5, 1.2}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_instance(std::vector<double>{-0.1}), std::invalid_argument);
}

TEST_CASE("normalization preserves the argmax set") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_u64() % 6);
    std::vector<double> raw(static_cast<std::size_t>(k));
    for (double& v : raw) {
      v = 0.05 + 0.95 * rng.uniform01();
    }
    const Instance inst = normalize_instance(raw);
    double raw_max = 0.0;
    for (double v : raw) raw_max = std::max(raw_max, v);
    for (int a = 0; a < k; ++a) {
      if (raw[static_cast<std::size_t>(a)] == raw_max) {
        CHECK(inst.theta[static_cast<std::size_t>(a)] == 1.0);
      }
    }
    CHECK(raw[static_cast<std::size_t>(inst.optimal_arm)] == raw_max);
  }
}

TEST_CASE("reward draws at the degenerate qualities") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    CHECK(draw_reward(rng, 0.0, 0.7) == 0);
    CHECK(draw_reward(rng, 1.0, 1.0) == 1);
  }
}

TEST_CASE("reward draw empirical mean matches q*theta") {
  Rng rng(2024);
  const int n = 100000;
  long long hits = 0;
  for (int i = 0; i < n; ++i) {
    hits += draw_reward(rng, 0.5, 0.8);
  }
  const double mean = static_cast<double>(hits) / n;
  // binomial standard error sqrt(p(1-p)/n) = 0.00155
  CHECK(std::abs(mean - 0.4) <= 0.0047);
}

TEST_CASE("one uniform consumed per reward draw") {
  Rng rng(3);
  for (int i = 1; i <= 500; ++i) {
    draw_reward(rng, 0.3, 0.9);
    CHECK(rng.draws() == static_cast<std::uint64_t>(i));
  }
}

TEST_CASE("scaling a raw instance equals scaling the quality, bit for bit") {
  // draw_reward(rng, 1, c*theta) and draw_reward(rng, c, theta) must agree
  // on identical stream states: the Bernoulli parameter is one multiply.
  Rng rng_a(99);
  Rng rng_b(99);
  const double c = 0.005;
  for (int i = 0; i < 5000; ++i) {
    const double theta = (i % 100) / 99.0;
    CHECK(draw_reward(rng_a, 1.0, c * theta) == draw_reward(rng_b, c, theta));
  }
  CHECK(rng_a == rng_b);
}

TEST_CASE("regret increments") {
  const Instance inst = normalize_instance(std::vector<double>{0.5, 0.8});
  CHECK(regret_increment(inst, 1.0, 0) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(regret_increment(inst, 0.0, 0) == 0.0);
  CHECK(regret_increment(inst, 0.73, inst.optimal_arm) == 0.0);  // exact
}
