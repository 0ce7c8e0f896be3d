#include "banditlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace banditlab {

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

std::uint64_t hash_string(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_episode_seed(std::uint64_t master_seed,
                                  std::string_view policy_id,
                                  std::uint64_t run_index) {
  return mix64(mix64(mix64(master_seed) ^ hash_string(policy_id)) ^ run_index);
}

double Rng::normal() {
  for (;;) {
    const double u = 2.0 * uniform01() - 1.0;
    const double v = 2.0 * uniform01() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }
}

double Rng::gamma(double shape) {
  if (shape < 1.0) {
    throw std::invalid_argument("Rng::gamma requires shape >= 1");
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) {
      return d * v;
    }
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

double Rng::beta(double a, double b) {
  const double x = gamma(a);
  const double y = gamma(b);
  const double s = x + y;
  if (s <= 0.0) {
    return 0.5;
  }
  return x / s;
}

int Rng::categorical(std::span<const double> p) {
  if (p.empty()) {
    throw std::invalid_argument("categorical: empty probability vector");
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (p[a] >= 1.0 - 1e-12) {
      return static_cast<int>(a);
    }
  }
  const double u = uniform01();
  double acc = 0.0;
  for (std::size_t a = 0; a + 1 < p.size(); ++a) {
    acc += p[a];
    if (u < acc) {
      return static_cast<int>(a);
    }
  }
  return static_cast<int>(p.size()) - 1;
}

}  // namespace banditlab
