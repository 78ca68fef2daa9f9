// ghzw: GHZ/W state noise experiments.
//
//   ghzw probs          --state ghz --noise white --p 0.4 --out probs.csv
//   ghzw fidelity-sweep --state w --noise gaussian --start 0 --stop 1 --steps 50 --out sweep.csv
//   ghzw wigner         --state ghz --noise gaussian --sigma 0.4 --out wigner.csv
//
// Exit codes: 0 success, 2 argument error, 3 numeric validation error, 4 I/O error.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "ghzw/errors.hpp"
#include "ghzw/version.hpp"

namespace {

using ghzw::cli::NoiseKind;
using ghzw::cli::RunConfig;
using ghzw::cli::StateKind;

enum ExitCode { kOk = 0, kArgument = 2, kNumeric = 3, kIo = 4 };

struct Flags {
    RunConfig config;
    std::optional<double> sigma;
    std::optional<double> p;
    std::string state = "ghz";
    std::string noise = "none";
    std::string mode = "complex";
};

void add_common_flags(CLI::App& cmd, Flags& flags, bool sweep) {
    RunConfig& c = flags.config;
    cmd.add_option("--state", flags.state, "State family")
        ->check(CLI::IsMember({"ghz", "w"}))
        ->capture_default_str();
    cmd.add_option("--n", c.n_qubits, "Number of qubits")->capture_default_str();
    cmd.add_option("--noise", flags.noise, "Noise model")
        ->check(CLI::IsMember({"none", "gaussian", "white"}))
        ->capture_default_str();
    if (sweep) {
        cmd.add_option("--start", c.start, "First sweep strength")->capture_default_str();
        cmd.add_option("--stop", c.stop, "Last sweep strength")->capture_default_str();
        cmd.add_option("--steps", c.steps, "Number of sweep points")->capture_default_str();
    } else {
        cmd.add_option("--sigma", flags.sigma, "Gaussian standard deviation");
        cmd.add_option("--p", flags.p, "White-noise mixing probability");
    }
    cmd.add_option("--mean", c.mean, "Gaussian mean")->capture_default_str();
    cmd.add_option("--seed", c.seed, "Base RNG seed")->capture_default_str();
    cmd.add_option("--ensemble", c.ensemble_size, "Ensemble size M")->capture_default_str();
    cmd.add_option("--realization", c.realization_index, "Single-realization index")
        ->capture_default_str();
    cmd.add_option("--theta-steps", c.theta_steps, "Polar grid points")->capture_default_str();
    cmd.add_option("--phi-steps", c.phi_steps, "Azimuthal grid points")->capture_default_str();
    cmd.add_option("--perturbation-mode", flags.mode, "Gaussian perturbation of complex or real parts")
        ->check(CLI::IsMember({"complex", "real"}))
        ->capture_default_str();
    cmd.add_option("--out", c.output_path, "Output CSV path")->required();
}

// Maps the string choices onto the config enums.
void apply_choices(Flags& flags) {
    flags.config.state = flags.state == "w" ? StateKind::w : StateKind::ghz;
    flags.config.noise = flags.noise == "gaussian" ? NoiseKind::gaussian
                         : flags.noise == "white"  ? NoiseKind::white
                                                   : NoiseKind::none;
    flags.config.mode = flags.mode == "real" ? ghzw::PerturbationMode::real_only
                                             : ghzw::PerturbationMode::complex_amplitude;
}

// Resolves --sigma/--p against --noise.
void resolve_strength(Flags& flags) {
    RunConfig& c = flags.config;
    apply_choices(flags);
    if (flags.sigma && c.noise != NoiseKind::gaussian) {
        throw ghzw::ArgumentError("--sigma only applies to --noise gaussian");
    }
    if (flags.p && c.noise != NoiseKind::white) {
        throw ghzw::ArgumentError("--p only applies to --noise white");
    }
    if (c.noise == NoiseKind::gaussian) {
        if (!flags.sigma) {
            throw ghzw::ArgumentError("--noise gaussian needs --sigma");
        }
        c.strength = *flags.sigma;
    } else if (c.noise == NoiseKind::white) {
        if (!flags.p) {
            throw ghzw::ArgumentError("--noise white needs --p");
        }
        c.strength = *flags.p;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GHZ/W state noise, fidelity and equal-angle Wigner experiments"};
    app.set_version_flag("--version", ghzw::kLibraryVersion);
    app.require_subcommand(1);

    Flags probs_flags;
    Flags sweep_flags;
    Flags wigner_flags;
    sweep_flags.noise = "white";

    CLI::App* probs = app.add_subcommand("probs", "Computational-basis probability distribution");
    add_common_flags(*probs, probs_flags, false);
    CLI::App* sweep = app.add_subcommand("fidelity-sweep", "Fidelity and purity versus noise strength");
    add_common_flags(*sweep, sweep_flags, true);
    CLI::App* wigner = app.add_subcommand("wigner", "Equal-angle spin Wigner function on a grid");
    add_common_flags(*wigner, wigner_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kArgument;
    }

    try {
        std::vector<std::filesystem::path> written;
        if (probs->parsed()) {
            resolve_strength(probs_flags);
            written = ghzw::cli::cmd_probs(probs_flags.config);
        } else if (sweep->parsed()) {
            apply_choices(sweep_flags);
            written = ghzw::cli::cmd_fidelity_sweep(sweep_flags.config);
        } else {
            resolve_strength(wigner_flags);
            written = ghzw::cli::cmd_wigner(wigner_flags.config);
        }
        for (const auto& path : written) {
            std::cout << path.string() << '\n';
        }
        return kOk;
    } catch (const ghzw::ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return kArgument;
    } catch (const ghzw::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNumeric;
    } catch (const ghzw::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIo;
    }
}
