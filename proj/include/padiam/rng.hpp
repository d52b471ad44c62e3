#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace padiam {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives a stream seed from a base seed and a path of keys, e.g.
/// derive_seed(plan_seed, {n, seed_index, purpose}).
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> keys);

/// Random source used everywhere in the project: std::mt19937_64 with
/// portable integer/real reductions, so output is bit-identical across
/// standard libraries (std::uniform_*_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace padiam
