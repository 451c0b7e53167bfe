#ifndef NOMA_RNG_HPP
#define NOMA_RNG_HPP

#include <cstdint>
#include <utility>

#include <cmath>
#include <numbers>

namespace noma {

// SplitMix64 (Steele, Lea, Flood; Vigna's fixed-increment variant).
// Platform-independent output; substreams derive from (seed, stream_index)
// so Monte Carlo batches stay reproducible regardless of scheduling.
class SplitMix64 {
  public:
    SplitMix64(std::uint64_t seed, std::uint64_t stream_index)
        : state_(mix(seed) ^ mix(stream_index + 0x9E3779B97F4A7C15ULL)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform double in (0, 1].
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Pair of independent standard normals (Box-Muller).
    std::pair<double, double> next_normal_pair() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace noma

#endif
