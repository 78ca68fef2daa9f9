#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ghzw/errors.hpp"
#include "ghzw/linalg.hpp"
#include "ghzw/noise.hpp"
#include "ghzw/wigner.hpp"
#include "oracles.hpp"

using namespace ghzw;
using oracle::kA;
using oracle::kB;
using oracle::kSqrt3;

namespace {

constexpr double kPi = std::numbers::pi;

double ghz_equator(double phi) { return 0.125 + std::pow(kSqrt3 / 2.0, 3) * std::cos(3.0 * phi); }

// Product of single-qubit z rotations by angle a on every qubit.
ComplexMatrix z_rotation(std::size_t n, double a) {
    std::vector<Complex> diag(std::size_t{1} << n);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const int ones = std::popcount(i);
        const int zeros = static_cast<int>(n) - ones;
        diag[i] = std::polar(1.0, a / 2.0 * (ones - zeros));
    }
    ComplexMatrix u(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) u(i, i) = diag[i];
    return u;
}

}  // namespace

TEST(Kernel, NorthPoleAndEquator) {
    const ComplexMatrix k0 = kernel(0.0, 0.0).matrix;
    EXPECT_NEAR(k0(0, 0).real(), kA, 1e-15);
    EXPECT_NEAR(k0(1, 1).real(), kB, 1e-15);
    EXPECT_EQ(k0(0, 1), Complex(0.0));
    const ComplexMatrix kx = kernel(kPi / 2.0, 0.0).matrix;
    EXPECT_NEAR(kx(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(kx(0, 1).real(), kSqrt3 / 2.0, 1e-15);
    EXPECT_NEAR(kx(1, 0).real(), kSqrt3 / 2.0, 1e-15);
}

TEST(Kernel, MatchesHandWrittenEntriesAndSpectrum) {
    oracle::Generator gen(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const double t = gen.uniform(0.0, kPi);
        const double p = gen.uniform(0.0, 2.0 * kPi);
        const ComplexMatrix k = kernel(t, p).matrix;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                EXPECT_LE(std::abs(k(r, c) - oracle::kernel_entry(t, p, r, c)), 1e-15);
        EXPECT_NEAR(k.trace().real(), 1.0, 1e-15);
        EXPECT_LE(hermiticity_error(k), 1e-15);
        const HermitianEig e = herm_eig(k);
        EXPECT_NEAR(e.eigenvalues[0], kB, 1e-12);
        EXPECT_NEAR(e.eigenvalues[1], kA, 1e-12);
    }
}

TEST(Kernel, RejectsNonFiniteAngles) {
    EXPECT_THROW(kernel(NAN, 0.0), ArgumentError);
    EXPECT_THROW(kernel(0.0, INFINITY), ArgumentError);
}

TEST(WignerEa, PoleValues) {
    const DensityMatrix ghz = ket_to_dm(ghz_state(3));
    const DensityMatrix w = ket_to_dm(w_state(3));
    EXPECT_NEAR(wigner_ea(ghz, 3, 0.0, 0.0), 1.25, 1e-10);
    EXPECT_NEAR(wigner_ea(ghz, 3, 0.0, 0.0), (std::pow(kA, 3) + std::pow(kB, 3)) / 2.0, 1e-12);
    EXPECT_NEAR(wigner_ea(w, 3, 0.0, 0.0), kA * kA * kB, 1e-10);
    EXPECT_NEAR(wigner_ea(w, 3, 0.0, 0.0), -(1.0 + kSqrt3) / 4.0, 1e-12);
}

TEST(WignerEa, MaximallyMixedIsFlat) {
    const DensityMatrix mm = DensityMatrix::maximally_mixed(3);
    oracle::Generator gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        EXPECT_NEAR(wigner_ea(mm, 3, gen.uniform(0, kPi), gen.uniform(0, 2 * kPi)), 0.125, 1e-12);
    }
}

TEST(WignerEa, MatchesBruteForce) {
    oracle::Generator gen(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const DensityMatrix rho = gen.random_density(n);
        const double t = gen.uniform(0, kPi);
        const double p = gen.uniform(0, 2 * kPi);
        const Complex expected = oracle::wigner_bruteforce(rho.matrix(), n, t, p);
        EXPECT_NEAR(expected.imag(), 0.0, 1e-12);
        EXPECT_NEAR(wigner_ea(rho, n, t, p), expected.real(), 1e-12);
    }
}

TEST(WignerEa, GhzEquatorClosedForm) {
    const DensityMatrix ghz = ket_to_dm(ghz_state(3));
    EXPECT_NEAR(wigner_ea(ghz, 3, kPi / 2, 0.0), 0.125 + 0.6495190528383290, 1e-10);
    EXPECT_NEAR(wigner_ea(ghz, 3, kPi / 2, kPi / 3), 0.125 - 0.6495190528383290, 1e-10);
    for (int j = 0; j < 360; ++j) {
        const double phi = 2 * kPi * j / 360.0;
        EXPECT_NEAR(wigner_ea(ghz, 3, kPi / 2, phi), ghz_equator(phi), 1e-10);
        EXPECT_NEAR(wigner_ea(ghz, 3, kPi / 2, phi), wigner_ea(ghz, 3, kPi / 2, phi + 2 * kPi / 3),
                    1e-10);
    }
}

TEST(WignerEa, WIsAzimuthallySymmetric) {
    const WignerGrid grid = wigner_grid(ket_to_dm(w_state(3)), 3, 91, 121);
    for (std::size_t i = 0; i < grid.theta_values.size(); ++i) {
        double lo = grid.at(i, 0);
        double hi = lo;
        for (std::size_t j = 0; j < grid.phi_values.size(); ++j) {
            lo = std::min(lo, grid.at(i, j));
            hi = std::max(hi, grid.at(i, j));
        }
        EXPECT_LE(hi - lo, 1e-10) << grid.theta_values[i];
    }
}

TEST(WignerEa, ZRotationShiftsAzimuth) {
    // W_{U rho U^dag}(theta, phi) = W_rho(theta, phi - a) for U = product of Rz(a).
    oracle::Generator gen(14);
    const std::size_t steps = 73;  // 72 intervals of 5 degrees
    const std::size_t shift = 8;
    const double a = 2 * kPi * shift / (steps - 1);
    const DensityMatrix rho = gen.random_density(3);
    const ComplexMatrix u = z_rotation(3, a);
    const DensityMatrix rotated = DensityMatrix::unchecked(u * rho.matrix() * u.adjoint());
    const WignerGrid g0 = wigner_grid(rho, 3, 19, steps);
    const WignerGrid g1 = wigner_grid(rotated, 3, 19, steps);
    for (std::size_t i = 0; i < 19; ++i) {
        for (std::size_t j = 0; j < steps; ++j) {
            const std::size_t src = (j + (steps - 1) - shift) % (steps - 1);
            EXPECT_NEAR(g1.at(i, j), g0.at(i, src), 1e-12);
        }
    }
}

TEST(WignerEa, LinearUnderWhiteNoise) {
    for (const Ket& psi : {ghz_state(3), w_state(3)}) {
        const DensityMatrix rho = ket_to_dm(psi);
        const WignerGrid ideal = wigner_grid(rho, 3, 31, 61);
        for (double p : {0.1, 0.4, 1.0}) {
            const WignerGrid noisy = wigner_grid(white_noise(rho, {p}), 3, 31, 61);
            for (std::size_t k = 0; k < noisy.values.size(); ++k) {
                EXPECT_NEAR(noisy.values[k], (1 - p) * ideal.values[k] + p * 0.125, 1e-12);
            }
        }
    }
}

TEST(WignerEa, NegativityShrinksWithWhiteNoise) {
    const DensityMatrix rho = ket_to_dm(ghz_state(3));
    double previous = -1e300;
    for (double p : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
        const WignerGrid g = wigner_grid(white_noise(rho, {p}), 3, 37, 73);
        const double min = *std::min_element(g.values.begin(), g.values.end());
        EXPECT_GE(min, previous - 1e-12);
        previous = min;
    }
    EXPECT_NEAR(previous, 0.125, 1e-12);
}

TEST(WignerEa, ShapeErrors) {
    const DensityMatrix rho = ket_to_dm(ghz_state(3));
    EXPECT_THROW(wigner_ea(rho, 2, 0.0, 0.0), ShapeError);
    EXPECT_THROW(wigner_grid(rho, 3, 1, 10), ArgumentError);
    EXPECT_THROW(wigner_grid(rho, 3, 10, 1), ArgumentError);
}

TEST(Axes, ClosedAndPinned) {
    const auto t = theta_axis(181);
    const auto p = phi_axis(361);
    EXPECT_EQ(t.front(), 0.0);
    EXPECT_EQ(t.back(), kPi);
    EXPECT_EQ(p.front(), 0.0);
    EXPECT_EQ(p.back(), 2 * kPi);
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    EXPECT_NEAR(t[90], kPi / 2, 1e-15);
}

TEST(Grid, ShapeAndOrder) {
    const DensityMatrix rho = ket_to_dm(ghz_state(3));
    const WignerGrid g = wigner_grid(rho, 3, 5, 7);
    ASSERT_EQ(g.values.size(), 35u);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            EXPECT_EQ(g.at(i, j), wigner_ea(rho, 3, g.theta_values[i], g.phi_values[j]));
}

TEST(EnsembleGrid, ZeroNoiseAndSingleRealization) {
    const Ket psi = ghz_state(3);
    GaussianNoiseSpec spec;
    spec.stddev = 0.0;
    EXPECT_EQ(wigner_grid_ensemble(psi, spec, 11, 13).values,
              wigner_grid(ket_to_dm(psi), 3, 11, 13).values);
    spec.stddev = 0.6;
    spec.ensemble_size = 1;
    EXPECT_EQ(wigner_grid_ensemble(psi, spec, 11, 13).values,
              wigner_grid(ket_to_dm(gaussian_perturb(psi, spec, 0)), 3, 11, 13).values);
}

TEST(EnsembleGrid, AverageOfRealizations) {
    const Ket psi = w_state(3);
    GaussianNoiseSpec spec;
    spec.stddev = 0.5;
    spec.ensemble_size = 2;
    const WignerGrid avg = wigner_grid_ensemble(psi, spec, 11, 13);
    const WignerGrid g0 = wigner_grid(ket_to_dm(gaussian_perturb(psi, spec, 0)), 3, 11, 13);
    const WignerGrid g1 = wigner_grid(ket_to_dm(gaussian_perturb(psi, spec, 1)), 3, 11, 13);
    for (std::size_t k = 0; k < avg.values.size(); ++k) {
        EXPECT_NEAR(avg.values[k], 0.5 * (g0.values[k] + g1.values[k]), 1e-12);
    }
}
