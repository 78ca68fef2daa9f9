#pragma once

#include <cstddef>

#include "ghzw/noise.hpp"
#include "ghzw/states.hpp"
#include "ghzw/wigner.hpp"

// Plain single-threaded versions of the parallel kernels. The parallel
// implementations must reproduce these bit for bit.
namespace ghzw::reference {

// Accumulates |psi'_k><psi'_k| one realization at a time, k ascending.
DensityMatrix ensemble_average(const Ket& psi, const GaussianNoiseSpec& spec);

// Row by row, point by point.
WignerGrid wigner_grid(const DensityMatrix& rho, std::size_t n_qubits, std::size_t theta_steps,
                       std::size_t phi_steps);

}  // namespace ghzw::reference
