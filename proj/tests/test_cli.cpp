#include <sys/wait.h>

#include <bit>

#include <cmath>
#include <cstdlib>
#include <filesystem>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"
#include "ghzw/errors.hpp"
#include "ghzw/rng.hpp"
#include "oracles.hpp"

using namespace ghzw;
using namespace ghzw::cli;
namespace fs = std::filesystem;

namespace {

RunConfig make(StateKind state, NoiseKind noise, double strength = 0.0) {
    RunConfig c;
    c.state = state;
    c.noise = noise;
    c.strength = strength;
    c.output_path = "unused.csv";
    return c;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "ghzw_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(GHZW_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ComputeProbs, IdealGhz) {
    const auto v = compute_probs(make(StateKind::ghz, NoiseKind::none));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].name, "ideal");
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(v[0].payload.probabilities[i], (i == 0 || i == 7) ? 0.5 : 0.0, 1e-12);
    }
}

TEST(ComputeProbs, WhiteNoise) {
    for (StateKind s : {StateKind::ghz, StateKind::w}) {
        const auto full = compute_probs(make(s, NoiseKind::white, 1.0));
        for (double p : full[0].payload.probabilities) EXPECT_NEAR(p, 0.125, 1e-15);
    }
    const auto w = compute_probs(make(StateKind::w, NoiseKind::white, 0.4));
    for (std::size_t i = 0; i < 8; ++i) {
        const bool single = std::popcount(i) == 1;
        EXPECT_NEAR(w[0].payload.probabilities[i], single ? 0.25 : 0.05, 1e-15);
    }
}

TEST(ComputeProbs, GaussianGivesSingleAndEnsemble) {
    RunConfig c = make(StateKind::ghz, NoiseKind::gaussian, 0.3);
    c.ensemble_size = 50;
    const auto v = compute_probs(c);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].name, "gaussian_single");
    EXPECT_EQ(v[1].name, "gaussian_ensemble");
    for (const auto& var : v) {
        double total = 0.0;
        for (double p : var.payload.probabilities) total += p;
        EXPECT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(Validation, RejectsBadConfigs) {
    EXPECT_THROW(compute_probs(make(StateKind::ghz, NoiseKind::white, 1.5)), ArgumentError);
    EXPECT_THROW(compute_probs(make(StateKind::ghz, NoiseKind::gaussian, -1.0)), ArgumentError);
    RunConfig c = make(StateKind::ghz, NoiseKind::none);
    c.n_qubits = 1;
    EXPECT_THROW(compute_probs(c), ArgumentError);
    RunConfig s = make(StateKind::ghz, NoiseKind::white);
    s.start = 0.8;
    s.stop = 0.2;
    EXPECT_THROW(compute_fidelity_sweep(s), ArgumentError);
    s.start = 0.0;
    s.stop = 1.0;
    s.steps = 1;
    EXPECT_THROW(compute_fidelity_sweep(s), ArgumentError);
    s.stop = 1.2;
    s.steps = 5;
    EXPECT_THROW(compute_fidelity_sweep(s), ArgumentError);
}

TEST(SweepStrengths, ClosedRange) {
    const auto s = sweep_strengths(0.0, 1.0, 50);
    ASSERT_EQ(s.size(), 50u);
    EXPECT_EQ(s.front(), 0.0);
    EXPECT_EQ(s.back(), 1.0);
    EXPECT_EQ(sweep_strengths(0.3, 0.3, 1), std::vector<double>{0.3});
}

TEST(FidelitySweep, WhiteFollowsLaw) {
    for (StateKind st : {StateKind::ghz, StateKind::w}) {
        const SweepResult r = compute_fidelity_sweep(make(st, NoiseKind::white));
        ASSERT_EQ(r.rows.size(), 50u);
        for (const SweepRow& row : r.rows) {
            EXPECT_NEAR(row.fidelity, oracle::white_fidelity_law(row.strength, 8), 1e-10);
            EXPECT_NEAR(row.purity, oracle::white_purity_law(row.strength, 8), 1e-10);
            EXPECT_FALSE(row.fidelity_single.has_value());
        }
        EXPECT_NEAR(r.rows.front().fidelity, 1.0, 1e-12);
        EXPECT_NEAR(r.rows.back().fidelity, 0.125, 1e-12);
    }
}

TEST(FidelitySweep, GaussianStartsAtOneAndDecays) {
    RunConfig c = make(StateKind::ghz, NoiseKind::gaussian);
    c.start = 0.0;
    c.stop = 2.0;
    c.steps = 5;
    c.ensemble_size = 200;
    const SweepResult r = compute_fidelity_sweep(c);
    ASSERT_EQ(r.rows.size(), 5u);
    EXPECT_NEAR(r.rows[0].fidelity, 1.0, 1e-15);
    EXPECT_NEAR(r.rows[0].purity, 1.0, 1e-15);
    ASSERT_TRUE(r.rows[0].fidelity_single.has_value());
    EXPECT_NEAR(*r.rows[0].fidelity_single, 1.0, 1e-15);
    EXPECT_LT(r.rows.back().fidelity, 0.5);
    EXPECT_LT(r.rows.back().purity, 0.9);
}

TEST(SweepTable, RoundTrip) {
    RunConfig c = make(StateKind::w, NoiseKind::gaussian);
    c.steps = 4;
    c.ensemble_size = 20;
    const SweepResult r = compute_fidelity_sweep(c);
    const csv::Table t = sweep_table(r);
    EXPECT_EQ(t.header, (std::vector<std::string>{"strength", "fidelity", "purity", "fidelity_single"}));
    const SweepResult back = parse_sweep_table(csv::parse(csv::to_string(t)));
    ASSERT_EQ(back.rows.size(), r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        EXPECT_EQ(back.rows[i].strength, r.rows[i].strength);
        EXPECT_EQ(back.rows[i].fidelity, r.rows[i].fidelity);
        EXPECT_EQ(back.rows[i].purity, r.rows[i].purity);
        EXPECT_EQ(back.rows[i].fidelity_single, r.rows[i].fidelity_single);
    }
}

TEST(ComputeWigner, IdealAndFullyMixed) {
    RunConfig c = make(StateKind::ghz, NoiseKind::none);
    c.theta_steps = 21;
    c.phi_steps = 41;
    const auto ideal = compute_wigner(c);
    ASSERT_EQ(ideal.size(), 1u);
    for (std::size_t j = 0; j < 41; ++j) EXPECT_NEAR(ideal[0].payload.at(0, j), 1.25, 1e-10);
    c.noise = NoiseKind::white;
    c.strength = 1.0;
    for (double w : compute_wigner(c)[0].payload.values) EXPECT_NEAR(w, 0.125, 1e-12);
}

TEST(ComputeWigner, EnsembleDeviationGrowsWithSigma) {
    RunConfig c = make(StateKind::ghz, NoiseKind::none);
    c.theta_steps = 19;
    c.phi_steps = 37;
    c.ensemble_size = 200;
    const std::vector<double> ideal = compute_wigner(c)[0].payload.values;
    const auto deviation = [&](double sigma) {
        RunConfig g = c;
        g.noise = NoiseKind::gaussian;
        g.strength = sigma;
        const auto v = compute_wigner(g);
        double worst = 0.0;
        for (std::size_t k = 0; k < ideal.size(); ++k) {
            worst = std::max(worst, std::abs(v[1].payload.values[k] - ideal[k]));
        }
        return worst;
    };
    const double small = deviation(0.1);
    const double large = deviation(1.0);
    EXPECT_GT(small, 0.0);
    EXPECT_LT(small, large);
}

TEST(Artifacts, SidecarSchema) {
    const fs::path dir = scratch("sidecar");
    RunConfig c = make(StateKind::w, NoiseKind::gaussian, 0.2);
    c.theta_steps = 5;
    c.phi_steps = 9;
    c.ensemble_size = 10;
    c.output_path = dir / "wig.csv";
    const auto written = cmd_wigner(c);
    ASSERT_EQ(written.size(), 2u);
    EXPECT_EQ(written[0].filename(), "wig_single.csv");
    EXPECT_EQ(written[1].filename(), "wig_ensemble.csv");
    for (const fs::path& p : written) {
        ASSERT_TRUE(fs::exists(p));
        fs::path side = p;
        side.replace_extension(".json");
        const auto meta = nlohmann::json::parse(csv::read_file(side));
        for (const char* key : {"artifact", "variant", "config", "columns", "rng_algorithm",
                                "library_version", "conventions", "created_utc",
                                "state_descriptor", "noise_descriptor", "grid"}) {
            EXPECT_TRUE(meta.contains(key)) << key;
        }
        EXPECT_EQ(meta["artifact"], "wigner_grid");
        EXPECT_EQ(meta["rng_algorithm"], kRngAlgorithm);
        EXPECT_EQ(meta["config"]["seed"], 42);
        EXPECT_EQ(meta["config"]["perturbation_mode"], "complex");
        EXPECT_EQ(meta["grid"]["theta_steps"], 5);
        EXPECT_EQ(meta["columns"], (std::vector<std::string>{"theta", "phi", "w_value"}));
        const WignerGrid g = csv::parse_wigner_table(csv::parse(csv::read_file(p)));
        EXPECT_EQ(g.values.size(), 45u);
    }
    c.noise = NoiseKind::white;
    c.output_path = dir / "sweep.csv";
    const auto sweep = cmd_fidelity_sweep(c);
    const auto meta = nlohmann::json::parse(csv::read_file(dir / "sweep.json"));
    EXPECT_EQ(meta["artifact"], "fidelity_sweep");
    EXPECT_EQ(meta["config"]["steps"], 50);
    EXPECT_EQ(meta["fidelity_case"], "pure_mixed");
}

TEST(Binary, ExitCodes) {
    const fs::path dir = scratch("exit");
    const std::string out = (dir / "p.csv").string();
    EXPECT_EQ(run_cli("probs --state ghz --out " + out), 0);
    EXPECT_TRUE(fs::exists(dir / "p.csv"));
    EXPECT_TRUE(fs::exists(dir / "p.json"));
    EXPECT_EQ(run_cli("probs --state xyz --out " + out), 2);
    EXPECT_EQ(run_cli("probs --state ghz"), 2);
    EXPECT_EQ(run_cli("probs --noise white --p 1.5 --out " + out), 2);
    EXPECT_EQ(run_cli("probs --noise white --sigma 0.1 --out " + out), 2);
    EXPECT_EQ(run_cli("probs --noise gaussian --out " + out), 2);
    EXPECT_EQ(run_cli("fidelity-sweep --start 0.5 --stop 0.1 --out " + out), 2);
    EXPECT_EQ(run_cli("probs --out /proc/ghzw/nope/p.csv"), 4);
    EXPECT_EQ(run_cli("--version"), 0);
}

TEST(Binary, RepeatedRunsAreByteIdentical) {
    const fs::path dir = scratch("repeat");
    for (const std::string sub : {"probs --sigma 0.3", "wigner --sigma 0.3 --theta-steps 13 --phi-steps 25",
                                  "fidelity-sweep --steps 6"}) {
        const std::string args = sub + " --noise gaussian --state w --ensemble 64 --seed 7";
        ASSERT_EQ(run_cli(args + " --out " + (dir / "a.csv").string()), 0) << args;
        ASSERT_EQ(run_cli(args + " --out " + (dir / "b.csv").string()), 0) << args;
        for (const std::string suffix : {"", "_single", "_ensemble"}) {
            const fs::path a = dir / ("a" + suffix + ".csv");
            const fs::path b = dir / ("b" + suffix + ".csv");
            if (!fs::exists(a)) continue;
            EXPECT_EQ(csv::read_file(a), csv::read_file(b)) << args << suffix;
        }
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
}
