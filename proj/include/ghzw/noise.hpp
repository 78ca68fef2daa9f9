#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ghzw/states.hpp"

namespace ghzw {

enum class PerturbationMode {
    complex_amplitude,  // real and imaginary parts each get Normal(mu, sigma^2)
    real_only,          // only the real part is perturbed
};

std::string_view to_string(PerturbationMode mode);

inline constexpr std::size_t kDefaultEnsembleSize = 500;
inline constexpr std::uint64_t kDefaultSeed = 42;
// Extra attempts per realization when a draw cancels the state vector.
inline constexpr int kPerturbationRetries = 3;

struct GaussianNoiseSpec {
    double mean = 0.0;
    double stddev = 0.0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t ensemble_size = kDefaultEnsembleSize;
    PerturbationMode mode = PerturbationMode::complex_amplitude;
};

struct WhiteNoiseSpec {
    double p = 0.0;
};

// Adds an independent Gaussian offset to every amplitude and renormalizes.
// The draws come from substream_seed(spec.seed, realization_index, attempt),
// so a given (seed, index, attempt) always yields the same ket. With
// mean = stddev = 0 the input is returned unchanged.
Ket gaussian_perturb(const Ket& psi, const GaussianNoiseSpec& spec,
                     std::size_t realization_index, int attempt = 0);

// rho -> (1 - p) rho + p I/d.
DensityMatrix white_noise(const DensityMatrix& rho, const WhiteNoiseSpec& spec);

// (1/M) sum_k |psi'_k><psi'_k| over realizations k = 0..M-1. Realizations
// are drawn in parallel; each matrix entry is summed in ascending k, so the
// result does not depend on thread count.
DensityMatrix ensemble_average(const Ket& psi, const GaussianNoiseSpec& spec);

// Shared by ensemble_average and its serial reference: realization k with
// the retry policy applied (attempts 0..kPerturbationRetries).
Ket perturb_with_retries(const Ket& psi, const GaussianNoiseSpec& spec,
                         std::size_t realization_index);

void validate(const GaussianNoiseSpec& spec);
void validate(const WhiteNoiseSpec& spec);

}  // namespace ghzw
