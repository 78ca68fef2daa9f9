#include "ghzw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ghzw/errors.hpp"
#include "ghzw/linalg.hpp"

namespace ghzw {

namespace {

FidelityValue finish(double raw, FidelityCase c) {
    if (!std::isfinite(raw) || raw < -kFidelityOvershootTol || raw > 1.0 + kFidelityOvershootTol) {
        throw ConsistencyError("fidelity " + std::to_string(raw) + " outside [0, 1]");
    }
    return {std::clamp(raw, 0.0, 1.0), c};
}

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ShapeError("fidelity between states of dimension " + std::to_string(a) + " and " +
                         std::to_string(b));
    }
}

// Non-negative spectrum with roundoff removed, or NotPsdError.
double floored(double lambda) {
    if (lambda < -kPsdTol) {
        throw NotPsdError("eigenvalue " + std::to_string(lambda) + " below -1e-10");
    }
    return lambda <= kSpectralFloor ? 0.0 : lambda;
}

ComplexMatrix floored_sqrt(const ComplexMatrix& m) {
    const HermitianEig eig = herm_eig(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(floored(eig.eigenvalues[k]));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vi = eig.eigenvectors(i, k) * root;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vi * std::conj(eig.eigenvectors(j, k));
            }
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(FidelityCase c) {
    switch (c) {
        case FidelityCase::pure_pure:
            return "pure_pure";
        case FidelityCase::pure_mixed:
            return "pure_mixed";
        case FidelityCase::mixed_mixed:
            return "mixed_mixed";
    }
    return "unknown";
}

FidelityValue fidelity_pure_pure(const Ket& psi, const Ket& phi) {
    return finish(std::norm(inner(psi, phi)), FidelityCase::pure_pure);
}

FidelityValue fidelity_pure_mixed(const Ket& psi, const DensityMatrix& sigma) {
    require_same_dim(psi.dim(), sigma.dim());
    Complex sum{};
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        Complex row{};
        for (std::size_t j = 0; j < psi.dim(); ++j) {
            row += sigma(i, j) * psi[j];
        }
        sum += std::conj(psi[i]) * row;
    }
    if (std::abs(sum.imag()) > kFidelityOvershootTol) {
        throw ConsistencyError("<psi|sigma|psi> has imaginary part " + std::to_string(sum.imag()));
    }
    return finish(sum.real(), FidelityCase::pure_mixed);
}

FidelityValue fidelity_mixed_mixed(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho.dim(), sigma.dim());
    const ComplexMatrix root = floored_sqrt(rho.matrix());
    ComplexMatrix inner_op = root * sigma.matrix() * root;
    inner_op = (inner_op + inner_op.adjoint()) * Complex{0.5};
    const HermitianEig eig = herm_eig(inner_op);
    double trace_root = 0.0;
    for (double lambda : eig.eigenvalues) {
        trace_root += std::sqrt(floored(lambda));
    }
    return finish(trace_root * trace_root, FidelityCase::mixed_mixed);
}

FidelityValue fidelity(const State& a, const State& b) {
    if (const Ket* ka = std::get_if<Ket>(&a)) {
        if (const Ket* kb = std::get_if<Ket>(&b)) {
            return fidelity_pure_pure(*ka, *kb);
        }
        return fidelity_pure_mixed(*ka, std::get<DensityMatrix>(b));
    }
    const DensityMatrix& ra = std::get<DensityMatrix>(a);
    if (const Ket* kb = std::get_if<Ket>(&b)) {
        return fidelity_pure_mixed(*kb, ra);
    }
    return fidelity_mixed_mixed(ra, std::get<DensityMatrix>(b));
}

double purity(const DensityMatrix& rho) {
    double sum = 0.0;
    for (const Complex& z : rho.matrix().entries()) {
        sum += std::norm(z);
    }
    return sum;
}

}  // namespace ghzw
