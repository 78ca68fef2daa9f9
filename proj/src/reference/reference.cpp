#include "ghzw/reference.hpp"

namespace ghzw::reference {

DensityMatrix ensemble_average(const Ket& psi, const GaussianNoiseSpec& spec) {
    validate(spec);
    if (spec.stddev == 0.0 && spec.mean == 0.0) {
        return ket_to_dm(psi);
    }
    const std::size_t dim = psi.dim();
    ComplexMatrix sum(dim, dim);
    for (std::size_t k = 0; k < spec.ensemble_size; ++k) {
        const Ket draw = perturb_with_retries(psi, spec, k);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                sum(i, j) += draw[i] * std::conj(draw[j]);
            }
        }
    }
    const double weight = static_cast<double>(spec.ensemble_size);
    for (Complex& z : sum.entries()) {
        z = z / weight;
    }
    return DensityMatrix::unchecked(std::move(sum));
}

WignerGrid wigner_grid(const DensityMatrix& rho, std::size_t n_qubits, std::size_t theta_steps,
                       std::size_t phi_steps) {
    validate_grid_request(rho, n_qubits, theta_steps, phi_steps);
    WignerGrid grid;
    grid.theta_values = theta_axis(theta_steps);
    grid.phi_values = phi_axis(phi_steps);
    for (double theta : grid.theta_values) {
        for (double phi : grid.phi_values) {
            grid.values.push_back(wigner_ea(rho, n_qubits, theta, phi));
        }
    }
    return grid;
}

}  // namespace ghzw::reference
