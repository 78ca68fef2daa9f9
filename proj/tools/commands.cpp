#include "commands.hpp"

#include <cmath>
#include <ctime>

#include <json.hpp>

#include "ghzw/errors.hpp"
#include "ghzw/metrics.hpp"
#include "ghzw/rng.hpp"
#include "ghzw/version.hpp"

namespace ghzw::cli {

namespace {

using nlohmann::ordered_json;

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string number(double x) { return csv::format_double(x); }

void require_strength(NoiseKind noise, double value, const char* what) {
    if (!std::isfinite(value)) {
        throw ArgumentError(std::string(what) + " must be finite");
    }
    if (noise == NoiseKind::white && (value < 0.0 || value > 1.0)) {
        throw ArgumentError(std::string(what) + " = " + number(value) +
                            " outside [0, 1] for white noise");
    }
    if (noise == NoiseKind::gaussian && value < 0.0) {
        throw ArgumentError(std::string(what) + " = " + number(value) +
                            " must be >= 0 for gaussian noise");
    }
}

void validate_common(const RunConfig& config) {
    if (config.n_qubits < kMinStateQubits || config.n_qubits > kMaxStateQubits) {
        throw ArgumentError("--n must lie in [2, 12]");
    }
    if (config.ensemble_size < 1) {
        throw ArgumentError("--ensemble must be at least 1");
    }
    if (!std::isfinite(config.mean)) {
        throw ArgumentError("--mean must be finite");
    }
    if (config.theta_steps < 2 || config.phi_steps < 2) {
        throw ArgumentError("--theta-steps and --phi-steps must be at least 2");
    }
    if (config.output_path.empty()) {
        throw ArgumentError("--out is required");
    }
}

std::string state_descriptor(const RunConfig& config) {
    return to_string(config.state) + "(" + std::to_string(config.n_qubits) + ")";
}

std::string gaussian_descriptor(const RunConfig& config, const std::string& variant) {
    std::string out = variant + "(sigma=" + number(config.strength) + ", mean=" +
                      number(config.mean) + ", seed=" + std::to_string(config.seed) +
                      ", mode=" + std::string(to_string(config.mode));
    if (variant == "gaussian_single") {
        out += ", realization=" + std::to_string(config.realization_index);
    } else {
        out += ", ensemble=" + std::to_string(config.ensemble_size);
    }
    return out + ")";
}

ordered_json config_json(const RunConfig& config, bool sweep) {
    ordered_json j;
    j["state"] = to_string(config.state);
    j["n_qubits"] = config.n_qubits;
    j["noise"] = to_string(config.noise);
    if (sweep) {
        j["start"] = config.start;
        j["stop"] = config.stop;
        j["steps"] = config.steps;
    } else if (config.noise == NoiseKind::gaussian) {
        j["sigma"] = config.strength;
    } else if (config.noise == NoiseKind::white) {
        j["p"] = config.strength;
    }
    if (config.noise == NoiseKind::gaussian) {
        j["mean"] = config.mean;
        j["seed"] = config.seed;
        j["ensemble_size"] = config.ensemble_size;
        j["realization_index"] = config.realization_index;
        j["perturbation_mode"] = std::string(to_string(config.mode));
    }
    j["theta_steps"] = config.theta_steps;
    j["phi_steps"] = config.phi_steps;
    j["output_path"] = config.output_path.string();
    return j;
}

ordered_json base_metadata(const std::string& artifact, const std::string& variant,
                           const RunConfig& config, bool sweep, const csv::Table& table) {
    ordered_json meta;
    meta["artifact"] = artifact;
    meta["variant"] = variant;
    meta["config"] = config_json(config, sweep);
    meta["columns"] = table.header;
    meta["rng_algorithm"] = kRngAlgorithm;
    meta["library_version"] = kLibraryVersion;
    meta["conventions"] = {
        {"basis_order", "big-endian; qubit 0 is the leftmost label character"},
        {"csv", "comma separated, '.' decimal, shortest round-trip doubles, LF line endings"},
        {"substream_seed", "splitmix64(splitmix64(seed) ^ realization), re-mixed per retry"},
    };
    meta["created_utc"] = utc_timestamp();
    return meta;
}

std::filesystem::path variant_path(const std::filesystem::path& base, const std::string& variant,
                                   bool split) {
    if (!split) {
        return base;
    }
    const std::string suffix = variant == "gaussian_single" ? "_single" : "_ensemble";
    std::filesystem::path out = base;
    out.replace_filename(base.stem().string() + suffix + base.extension().string());
    return out;
}

std::filesystem::path sidecar_path(std::filesystem::path csv_path) {
    return csv_path.replace_extension(".json");
}

void write_artifact(const std::filesystem::path& path, const csv::Table& table,
                    const ordered_json& meta) {
    csv::write_file(path, csv::to_string(table));
    csv::write_file(sidecar_path(path), meta.dump(2) + "\n");
}

template <typename Payload, typename ToTable, typename Decorate>
std::vector<std::filesystem::path> write_variants(const std::string& artifact,
                                                  const RunConfig& config,
                                                  const std::vector<Variant<Payload>>& variants,
                                                  ToTable to_table, Decorate decorate) {
    std::vector<std::filesystem::path> written;
    const bool split = variants.size() > 1;
    for (const auto& v : variants) {
        const std::filesystem::path path = variant_path(config.output_path, v.name, split);
        const csv::Table table = to_table(v.payload);
        ordered_json meta = base_metadata(artifact, v.name, config, false, table);
        decorate(meta, v);
        write_artifact(path, table, meta);
        written.push_back(path);
    }
    return written;
}

}  // namespace

std::string to_string(StateKind kind) { return kind == StateKind::ghz ? "ghz" : "w"; }

std::string to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::none:
            return "none";
        case NoiseKind::gaussian:
            return "gaussian";
        case NoiseKind::white:
            return "white";
    }
    return "unknown";
}

void validate_for_single(const RunConfig& config) {
    validate_common(config);
    require_strength(config.noise, config.strength, "noise strength");
}

void validate_for_sweep(const RunConfig& config) {
    validate_common(config);
    require_strength(config.noise, config.start, "--start");
    require_strength(config.noise, config.stop, "--stop");
    if (config.steps < 1) {
        throw ArgumentError("--steps must be at least 1");
    }
    if (config.start > config.stop) {
        throw ArgumentError("--start must not exceed --stop");
    }
    if (config.steps == 1 && config.start != config.stop) {
        throw ArgumentError("a single-step sweep needs --start equal to --stop");
    }
}

Ket build_state(const RunConfig& config) {
    return config.state == StateKind::ghz ? ghz_state(config.n_qubits) : w_state(config.n_qubits);
}

GaussianNoiseSpec gaussian_spec(const RunConfig& config, double sigma) {
    return {config.mean, sigma, config.seed, config.ensemble_size, config.mode};
}

std::vector<double> sweep_strengths(double start, double stop, std::size_t steps) {
    if (steps < 1) {
        throw ArgumentError("sweep needs at least one step");
    }
    if (steps == 1) {
        return {start};
    }
    std::vector<double> out(steps);
    const double delta = (stop - start) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = start + static_cast<double>(i) * delta;
    }
    out.back() = stop;
    return out;
}

std::vector<Variant<ProbabilityDistribution>> compute_probs(const RunConfig& config) {
    validate_for_single(config);
    const Ket psi = build_state(config);
    switch (config.noise) {
        case NoiseKind::none:
            return {{"ideal", probabilities(ket_to_dm(psi))}};
        case NoiseKind::white:
            return {{"white", probabilities(white_noise(ket_to_dm(psi), {config.strength}))}};
        case NoiseKind::gaussian: {
            const GaussianNoiseSpec spec = gaussian_spec(config, config.strength);
            const Ket single = perturb_with_retries(psi, spec, config.realization_index);
            return {{"gaussian_single", probabilities(ket_to_dm(single))},
                    {"gaussian_ensemble", probabilities(ensemble_average(psi, spec))}};
        }
    }
    throw ArgumentError("unknown noise kind");
}

SweepResult compute_fidelity_sweep(const RunConfig& config) {
    validate_for_sweep(config);
    const Ket psi = build_state(config);
    const DensityMatrix ideal = ket_to_dm(psi);
    SweepResult result;
    for (double s : sweep_strengths(config.start, config.stop, config.steps)) {
        switch (config.noise) {
            case NoiseKind::none:
                result.rows.push_back({s, fidelity_pure_mixed(psi, ideal).value, purity(ideal), {}});
                break;
            case NoiseKind::white: {
                const DensityMatrix noisy = white_noise(ideal, {s});
                result.rows.push_back({s, fidelity_pure_mixed(psi, noisy).value, purity(noisy), {}});
                break;
            }
            case NoiseKind::gaussian: {
                const GaussianNoiseSpec spec = gaussian_spec(config, s);
                const DensityMatrix averaged = ensemble_average(psi, spec);
                const Ket single = perturb_with_retries(psi, spec, config.realization_index);
                result.rows.push_back({s, fidelity_pure_mixed(psi, averaged).value,
                                       purity(averaged), fidelity_pure_pure(psi, single).value});
                break;
            }
        }
    }
    return result;
}

std::vector<Variant<WignerGrid>> compute_wigner(const RunConfig& config) {
    validate_for_single(config);
    const Ket psi = build_state(config);
    const std::size_t n = config.n_qubits;
    const auto grid_of = [&](const DensityMatrix& rho, std::string noise) {
        WignerGrid g = wigner_grid(rho, n, config.theta_steps, config.phi_steps);
        g.state_descriptor = state_descriptor(config);
        g.noise_descriptor = std::move(noise);
        return g;
    };
    switch (config.noise) {
        case NoiseKind::none:
            return {{"ideal", grid_of(ket_to_dm(psi), "none")}};
        case NoiseKind::white:
            return {{"white", grid_of(white_noise(ket_to_dm(psi), {config.strength}),
                                      "white(p=" + number(config.strength) + ")")}};
        case NoiseKind::gaussian: {
            const GaussianNoiseSpec spec = gaussian_spec(config, config.strength);
            const Ket single = perturb_with_retries(psi, spec, config.realization_index);
            return {{"gaussian_single",
                     grid_of(ket_to_dm(single), gaussian_descriptor(config, "gaussian_single"))},
                    {"gaussian_ensemble", grid_of(ensemble_average(psi, spec),
                                                  gaussian_descriptor(config, "gaussian_ensemble"))}};
        }
    }
    throw ArgumentError("unknown noise kind");
}

csv::Table sweep_table(const SweepResult& result) {
    const bool with_single = !result.rows.empty() && result.rows.front().fidelity_single;
    csv::Table table{{"strength", "fidelity", "purity"}, {}};
    if (with_single) {
        table.header.push_back("fidelity_single");
    }
    for (const SweepRow& row : result.rows) {
        std::vector<std::string> fields{number(row.strength), number(row.fidelity),
                                        number(row.purity)};
        if (with_single) {
            fields.push_back(number(row.fidelity_single.value_or(NAN)));
        }
        table.rows.push_back(std::move(fields));
    }
    return table;
}

SweepResult parse_sweep_table(const csv::Table& table) {
    const std::size_t sc = csv::column(table, "strength");
    const std::size_t fc = csv::column(table, "fidelity");
    const std::size_t pc = csv::column(table, "purity");
    std::optional<std::size_t> single_col;
    if (table.header.size() > 3) {
        single_col = csv::column(table, "fidelity_single");
    }
    SweepResult result;
    for (const auto& row : table.rows) {
        SweepRow r{csv::parse_double(row[sc]), csv::parse_double(row[fc]),
                   csv::parse_double(row[pc]), {}};
        if (single_col) {
            r.fidelity_single = csv::parse_double(row[*single_col]);
        }
        result.rows.push_back(r);
    }
    return result;
}

std::vector<std::filesystem::path> cmd_probs(const RunConfig& config) {
    const auto variants = compute_probs(config);
    return write_variants("probabilities", config, variants, csv::probability_table,
                          [](ordered_json&, const auto&) {});
}

std::vector<std::filesystem::path> cmd_fidelity_sweep(const RunConfig& config) {
    const SweepResult result = compute_fidelity_sweep(config);
    const csv::Table table = sweep_table(result);
    ordered_json meta = base_metadata("fidelity_sweep", to_string(config.noise), config, true, table);
    meta["fidelity_case"] = config.noise == NoiseKind::gaussian
                                ? "pure_mixed vs ensemble average; fidelity_single is pure_pure"
                                : "pure_mixed";
    write_artifact(config.output_path, table, meta);
    return {config.output_path};
}

std::vector<std::filesystem::path> cmd_wigner(const RunConfig& config) {
    const auto variants = compute_wigner(config);
    return write_variants(
        "wigner_grid", config, variants, csv::wigner_table,
        [](ordered_json& meta, const Variant<WignerGrid>& v) {
            meta["state_descriptor"] = v.payload.state_descriptor;
            meta["noise_descriptor"] = v.payload.noise_descriptor;
            meta["grid"] = {
                {"theta_steps", v.payload.theta_values.size()},
                {"phi_steps", v.payload.phi_values.size()},
                {"theta_rule", "theta_i = i*pi/(theta_steps-1)"},
                {"phi_rule", "phi_j = j*2*pi/(phi_steps-1)"},
                {"order", "theta-major"},
                {"kernel", "pi(theta,phi) = (I + sqrt(3) n.sigma)/2, W = Tr[rho pi^(x)N]"},
            };
        });
}

}  // namespace ghzw::cli
