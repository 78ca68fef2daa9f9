#include "ghzw/wigner.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "ghzw/errors.hpp"
#include "ghzw/linalg.hpp"

namespace ghzw {

namespace {

void require_n_qubit(const DensityMatrix& rho, std::size_t n_qubits) {
    if (rho.n_qubits() != n_qubits) {
        throw ShapeError("density matrix of dimension " + std::to_string(rho.dim()) +
                         " is not a " + std::to_string(n_qubits) + "-qubit state");
    }
}

std::vector<double> uniform_axis(std::size_t steps, double span, const char* name) {
    if (steps < 2) {
        throw ArgumentError(std::string(name) + " steps must be at least 2");
    }
    std::vector<double> axis(steps);
    const double spacing = span / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        axis[i] = static_cast<double>(i) * spacing;
    }
    axis.back() = span;
    return axis;
}

}  // namespace

KernelOperator kernel(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw ArgumentError("kernel angles must be finite");
    }
    const double r = std::sqrt(3.0);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const Complex down = std::polar(st, phi);  // sin t e^{i p}
    ComplexMatrix m{
        {0.5 * (1.0 + r * ct), 0.5 * r * std::conj(down)},
        {0.5 * r * down, 0.5 * (1.0 - r * ct)},
    };
    return {theta, phi, std::move(m)};
}

double wigner_ea(const DensityMatrix& rho, std::size_t n_qubits, double theta, double phi) {
    require_n_qubit(rho, n_qubits);
    const ComplexMatrix probe = tensor_power(kernel(theta, phi).matrix, n_qubits);
    const std::size_t dim = rho.dim();
    Complex sum{};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            sum += rho(i, j) * probe(j, i);
        }
    }
    if (std::abs(sum.imag()) > kImagResidueTol) {
        throw ConsistencyError("Wigner trace has imaginary residue " + std::to_string(sum.imag()));
    }
    return sum.real();
}

std::vector<double> theta_axis(std::size_t steps) {
    return uniform_axis(steps, std::numbers::pi, "theta");
}

std::vector<double> phi_axis(std::size_t steps) {
    return uniform_axis(steps, 2.0 * std::numbers::pi, "phi");
}

void validate_grid_request(const DensityMatrix& rho, std::size_t n_qubits,
                           std::size_t theta_steps, std::size_t phi_steps) {
    require_n_qubit(rho, n_qubits);
    if (theta_steps < 2 || phi_steps < 2) {
        throw ArgumentError("grid needs at least 2 steps along each axis");
    }
}

WignerGrid wigner_grid(const DensityMatrix& rho, std::size_t n_qubits,
                       std::size_t theta_steps, std::size_t phi_steps) {
    validate_grid_request(rho, n_qubits, theta_steps, phi_steps);
    WignerGrid grid;
    grid.theta_values = theta_axis(theta_steps);
    grid.phi_values = phi_axis(phi_steps);
    grid.values.assign(theta_steps * phi_steps, 0.0);

    std::vector<std::exception_ptr> failures(theta_steps);
    const auto rows = static_cast<std::ptrdiff_t>(theta_steps);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        const auto row = static_cast<std::size_t>(i);
        try {
            for (std::size_t j = 0; j < phi_steps; ++j) {
                grid.values[row * phi_steps + j] =
                    wigner_ea(rho, n_qubits, grid.theta_values[row], grid.phi_values[j]);
            }
        } catch (...) {
            failures[row] = std::current_exception();
        }
    }
    for (const std::exception_ptr& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return grid;
}

WignerGrid wigner_grid_ensemble(const Ket& psi, const GaussianNoiseSpec& spec,
                                std::size_t theta_steps, std::size_t phi_steps) {
    return wigner_grid(ensemble_average(psi, spec), psi.n_qubits(), theta_steps, phi_steps);
}

}  // namespace ghzw
