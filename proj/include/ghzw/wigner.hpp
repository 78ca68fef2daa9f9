#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ghzw/matrix.hpp"
#include "ghzw/noise.hpp"
#include "ghzw/states.hpp"

namespace ghzw {

inline constexpr std::size_t kDefaultThetaSteps = 181;
inline constexpr std::size_t kDefaultPhiSteps = 361;
inline constexpr double kImagResidueTol = 1e-10;

// Single-qubit phase-point operator 1/2 (I + sqrt(3) n.sigma) along
// n = (sin t cos p, sin t sin p, cos t). Eigenvalues (1 +- sqrt(3))/2.
struct KernelOperator {
    double theta;
    double phi;
    ComplexMatrix matrix;
};

// Throws ArgumentError for non-finite angles; other angles are used as is.
KernelOperator kernel(double theta, double phi);

// Equal-angle spin Wigner value Tr[rho pi(theta, phi)^{(x)n}].
// ShapeError if rho is not an n-qubit operator; ConsistencyError if the trace
// has an imaginary part above kImagResidueTol.
double wigner_ea(const DensityMatrix& rho, std::size_t n_qubits, double theta, double phi);

struct WignerGrid {
    std::vector<double> theta_values;  // ascending over [0, pi]
    std::vector<double> phi_values;    // ascending over [0, 2 pi]
    std::vector<double> values;        // theta-major
    std::string state_descriptor;
    std::string noise_descriptor;

    double at(std::size_t theta_index, std::size_t phi_index) const {
        return values[theta_index * phi_values.size() + phi_index];
    }
};

// Closed uniform axes: theta_i = i pi/(steps-1), phi_j = j 2pi/(steps-1).
std::vector<double> theta_axis(std::size_t steps);
std::vector<double> phi_axis(std::size_t steps);

// Evaluates wigner_ea on every grid point, rows split across OpenMP threads.
// Both step counts must be >= 2.
WignerGrid wigner_grid(const DensityMatrix& rho, std::size_t n_qubits,
                       std::size_t theta_steps = kDefaultThetaSteps,
                       std::size_t phi_steps = kDefaultPhiSteps);

// Grid of the ensemble-averaged state. The Wigner map is linear, so averaging
// rho first gives the same field as averaging per-realization grids.
WignerGrid wigner_grid_ensemble(const Ket& psi, const GaussianNoiseSpec& spec,
                                std::size_t theta_steps = kDefaultThetaSteps,
                                std::size_t phi_steps = kDefaultPhiSteps);

// Argument checks shared with the serial reference.
void validate_grid_request(const DensityMatrix& rho, std::size_t n_qubits,
                           std::size_t theta_steps, std::size_t phi_steps);

}  // namespace ghzw
