#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace banditlab {

// splitmix64 finalizer. Used for seed derivation only, never as a stream.
std::uint64_t mix64(std::uint64_t z);

// FNV-1a, used to fold policy identifiers into seeds.
std::uint64_t hash_string(std::string_view s);

// Episode seed for (master_seed, policy id, run index). Fixed function:
//   mix64(mix64(mix64(master) ^ fnv1a(policy_id)) ^ run)
std::uint64_t derive_episode_seed(std::uint64_t master_seed,
                                  std::string_view policy_id,
                                  std::uint64_t run_index);

// Salts separating the per-episode streams (policy randomness vs reward
// draws). A stream seed is mix64(episode_seed ^ salt).
inline constexpr std::uint64_t kPolicyStreamSalt = 0x706f6c696379ULL;
inline constexpr std::uint64_t kRewardStreamSalt = 0x726577617264ULL;

// Seedable random stream over a pinned mt19937_64 engine. The engine output
// is fully specified by the standard; all distributions are implemented
// here (not via std::*_distribution) so streams are stable across standard
// libraries. Counts every engine draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    return engine_();
  }

  // Uniform on [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // One uniform per call.
  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal, polar method (rejection; pairs drawn, second discarded).
  double normal();

  // Gamma(shape, 1) for shape >= 1, Marsaglia-Tsang.
  double gamma(double shape);

  // Beta(a, b) via two gamma draws; requires a, b >= 1.
  double beta(double a, double b);

  // Samples an index from a probability vector with one uniform. A point
  // mass (entry >= 1 - 1e-12) is returned directly without consuming a draw.
  int categorical(std::span<const double> p);

  std::uint64_t draws() const { return draws_; }

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

}  // namespace banditlab
