#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace stablefp {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Derivation rule for independent substreams: stream k of a run seeded with
/// `seed` uses derive_seed(seed, k).  The rule is fixed so that partitioning
/// work across any number of workers reproduces the sequential sample set.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return detail::splitmix64(detail::splitmix64(seed) + index);
}

/// Seedable random stream with explicitly specified variate constructions,
/// so that output is bit-identical across standard library implementations
/// (std::uniform_real_distribution makes no such guarantee).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// uniform on the open interval (0,1)
    double uniform01() {
        const std::uint64_t bits = engine_() >> 11;  // 53 random bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// uniform on the open interval (-pi/2, pi/2)
    double uniform_angle() { return 3.141592653589793238462643383279502884 * (uniform01() - 0.5); }

    /// standard exponential
    double exponential() { return -std::log(uniform01()); }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace stablefp
