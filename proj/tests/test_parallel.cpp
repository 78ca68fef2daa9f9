#include <omp.h>

#include <gtest/gtest.h>

#include "ghzw/noise.hpp"
#include "ghzw/reference.hpp"
#include "ghzw/wigner.hpp"
#include "oracles.hpp"

using namespace ghzw;

namespace {

class ThreadCount : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

private:
    int saved_ = 1;
};

}  // namespace

TEST_P(ThreadCount, EnsembleMatchesSerialBitForBit) {
    for (double sigma : {0.0, 0.1, 1.0}) {
        for (std::size_t m : {1u, 7u, 250u}) {
            GaussianNoiseSpec spec;
            spec.stddev = sigma;
            spec.ensemble_size = m;
            spec.seed = 1234;
            for (const Ket& psi : {ghz_state(3), w_state(4)}) {
                EXPECT_EQ(ensemble_average(psi, spec), reference::ensemble_average(psi, spec))
                    << sigma << " " << m;
            }
        }
    }
}

TEST_P(ThreadCount, WignerGridMatchesSerialBitForBit) {
    oracle::Generator gen(41);
    for (std::size_t n : {2u, 3u}) {
        const DensityMatrix rho = gen.random_density(n);
        const WignerGrid par = wigner_grid(rho, n, 23, 31);
        const WignerGrid ser = reference::wigner_grid(rho, n, 23, 31);
        EXPECT_EQ(par.values, ser.values);
        EXPECT_EQ(par.theta_values, ser.theta_values);
        EXPECT_EQ(par.phi_values, ser.phi_values);
    }
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));
