#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ghzw/csv.hpp"
#include "ghzw/noise.hpp"
#include "ghzw/states.hpp"
#include "ghzw/wigner.hpp"

namespace ghzw::cli {

enum class StateKind { ghz, w };
enum class NoiseKind { none, gaussian, white };

struct RunConfig {
    StateKind state = StateKind::ghz;
    std::size_t n_qubits = 3;
    NoiseKind noise = NoiseKind::none;
    // Single noise strength (sigma or p) for probs and wigner.
    double strength = 0.0;
    // Sweep range for fidelity-sweep; closed interval.
    double start = 0.0;
    double stop = 1.0;
    std::size_t steps = 50;
    double mean = 0.0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t ensemble_size = kDefaultEnsembleSize;
    std::size_t realization_index = 0;
    PerturbationMode mode = PerturbationMode::complex_amplitude;
    std::size_t theta_steps = kDefaultThetaSteps;
    std::size_t phi_steps = kDefaultPhiSteps;
    std::filesystem::path output_path;
};

std::string to_string(StateKind kind);
std::string to_string(NoiseKind kind);

// ArgumentError when the config is outside the domain of its noise kind.
void validate_for_single(const RunConfig& config);
void validate_for_sweep(const RunConfig& config);

Ket build_state(const RunConfig& config);
GaussianNoiseSpec gaussian_spec(const RunConfig& config, double sigma);

// start + i (stop - start)/(steps - 1), last point pinned to stop.
std::vector<double> sweep_strengths(double start, double stop, std::size_t steps);

struct SweepRow {
    double strength;
    double fidelity;
    double purity;
    // Pure-pure fidelity of one realization; gaussian sweeps only.
    std::optional<double> fidelity_single;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

// One data set of a command. Gaussian noise produces two (single
// realization and ensemble average); the other kinds produce one.
template <typename Payload>
struct Variant {
    std::string name;  // ideal | white | gaussian_single | gaussian_ensemble
    Payload payload;
};

std::vector<Variant<ProbabilityDistribution>> compute_probs(const RunConfig& config);
SweepResult compute_fidelity_sweep(const RunConfig& config);
std::vector<Variant<WignerGrid>> compute_wigner(const RunConfig& config);

csv::Table sweep_table(const SweepResult& result);
SweepResult parse_sweep_table(const csv::Table& table);

// Writes CSV files plus .json sidecars and returns the CSV paths. For
// gaussian noise probs/wigner write <stem>_single.csv and <stem>_ensemble.csv
// next to the requested path.
std::vector<std::filesystem::path> cmd_probs(const RunConfig& config);
std::vector<std::filesystem::path> cmd_fidelity_sweep(const RunConfig& config);
std::vector<std::filesystem::path> cmd_wigner(const RunConfig& config);

}  // namespace ghzw::cli
