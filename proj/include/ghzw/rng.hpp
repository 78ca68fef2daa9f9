#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace ghzw {

// Identifier written into every metadata sidecar. Bump the suffix whenever
// any step below changes the drawn numbers.
inline constexpr const char* kRngAlgorithm = "mt19937_64+splitmix64-substreams+box-muller/v1";

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Seed of the independent sub-stream for one realization (and retry attempt).
// Depends only on its arguments, so realizations can be drawn in any order.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t realization,
                                       std::uint64_t attempt = 0) noexcept {
    std::uint64_t z = splitmix64_mix(splitmix64_mix(seed) ^ realization);
    if (attempt != 0) {
        z = splitmix64_mix(z ^ (attempt * 0xD1B54A32D192ED03ULL));
    }
    return z;
}

// Standard normal draws from a 64-bit Mersenne Twister using the basic
// Box-Muller transform. std::normal_distribution is avoided on purpose: its
// algorithm is implementation defined and would break golden files.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t stream_seed) : engine_(stream_seed) {}

    double next();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

}  // namespace ghzw
