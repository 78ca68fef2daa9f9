#pragma once

#include <string_view>
#include <variant>

#include "ghzw/states.hpp"

namespace ghzw {

enum class FidelityCase { pure_pure, pure_mixed, mixed_mixed };

std::string_view to_string(FidelityCase c);

struct FidelityValue {
    double value;  // clamped to [0, 1]
    FidelityCase case_used;
};

// Values may overshoot [0, 1] by this much from roundoff before clamping;
// anything further out is reported as a ConsistencyError.
inline constexpr double kFidelityOvershootTol = 1e-10;

// Eigenvalues of trace-one operators at or below this are roundoff in the
// mixed-mixed path and are treated as exact zeros before taking roots.
inline constexpr double kSpectralFloor = 1e-14;

// |<psi|phi>|^2
FidelityValue fidelity_pure_pure(const Ket& psi, const Ket& phi);

// <psi|sigma|psi>
FidelityValue fidelity_pure_mixed(const Ket& psi, const DensityMatrix& sigma);

// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, always rooting the first argument.
FidelityValue fidelity_mixed_mixed(const DensityMatrix& rho, const DensityMatrix& sigma);

using State = std::variant<Ket, DensityMatrix>;

// Picks the cheapest formula for the argument kinds (fidelity is symmetric,
// so a (DensityMatrix, Ket) pair uses the pure-mixed form).
FidelityValue fidelity(const State& a, const State& b);

// Tr(rho^2)
double purity(const DensityMatrix& rho);

}  // namespace ghzw
