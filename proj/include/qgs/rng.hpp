#pragma once

#include <cstdint>
#include <random>

namespace qgs {

/// splitmix64 finalizer. Used to derive decorrelated seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for run `index` of an experiment whose master seed is `base`
/// (the index-th output of a splitmix64 stream started at `base`).
/// Runs can therefore be executed in any order, or concurrently, and
/// still reproduce the same outcomes.
std::uint64_t run_seed(std::uint64_t base, std::uint64_t index);

/// mt19937_64 plus an unbiased bounded draw. The engine's output
/// sequence is pinned by the standard, so seeded results reproduce
/// across platforms (std::uniform_int_distribution does not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform on [0, bound), bound >= 1. Rejection sampling keeps the
    /// draw exactly uniform.
    std::uint64_t below(std::uint64_t bound);

    int bit() { return static_cast<int>(eng_() >> 63); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace qgs
