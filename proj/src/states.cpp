#include "ghzw/states.hpp"

#include <cmath>
#include <string>

#include "ghzw/errors.hpp"
#include "ghzw/linalg.hpp"

namespace ghzw {

namespace {

double norm2(std::span<const Complex> v) {
    double sum = 0.0;
    for (const Complex& z : v) {
        sum += std::norm(z);
    }
    return sum;
}

std::size_t ket_qubits(std::size_t length) {
    if (length < 2) {
        throw ShapeError("a ket needs at least one qubit");
    }
    return qubit_count_for_dim(length);
}

void require_state_size(std::size_t n) {
    if (n < kMinStateQubits || n > kMaxStateQubits) {
        throw ArgumentError("qubit count " + std::to_string(n) + " outside [" +
                            std::to_string(kMinStateQubits) + ", " +
                            std::to_string(kMaxStateQubits) + "]");
    }
}

}  // namespace

Ket::Ket(std::vector<Complex> amplitudes)
    : n_qubits_(ket_qubits(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
    for (const Complex& z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("ket amplitudes must be finite");
        }
    }
    const double norm = std::sqrt(norm2(amplitudes_));
    if (std::abs(norm - 1.0) > kKetNormTol) {
        throw ValidationError("ket norm " + std::to_string(norm) + " differs from 1");
    }
}

Ket::Ket(Trusted, std::vector<Complex> amplitudes)
    : n_qubits_(ket_qubits(amplitudes.size())), amplitudes_(std::move(amplitudes)) {}

Ket Ket::normalized(std::vector<Complex> amplitudes) {
    const double norm = std::sqrt(norm2(amplitudes));
    if (!(norm >= 1e-12) || !std::isfinite(norm)) {
        throw DegeneratePerturbationError("state vector norm " + std::to_string(norm) +
                                          " too small to renormalize");
    }
    for (Complex& z : amplitudes) {
        z /= norm;
    }
    return Ket(Trusted{}, std::move(amplitudes));
}

Complex inner(const Ket& a, const Ket& b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("inner product of kets with dimensions " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()));
    }
    Complex sum{};
    for (std::size_t k = 0; k < a.dim(); ++k) {
        sum += std::conj(a[k]) * b[k];
    }
    return sum;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : DensityMatrix(Trusted{}, std::move(m)) {
    const double herm = hermiticity_error(m_);
    if (herm > kHermitianTol) {
        throw ValidationError("density matrix not Hermitian (error " + std::to_string(herm) + ")");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex{1.0}) > kTraceTol) {
        throw ValidationError("density matrix trace " + std::to_string(tr.real()) +
                              " differs from 1");
    }
    const HermitianEig eig = herm_eig(m_);
    if (eig.eigenvalues.front() < -kPsdTol) {
        throw NotPsdError("density matrix has eigenvalue " +
                          std::to_string(eig.eigenvalues.front()));
    }
}

DensityMatrix::DensityMatrix(Trusted, ComplexMatrix m) : n_qubits_(0), m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() < 2) {
        throw ShapeError("density matrix must be square with dimension >= 2");
    }
    n_qubits_ = qubit_count_for_dim(m_.rows());
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
    return DensityMatrix(Trusted{}, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= Complex{1.0 / static_cast<double>(dim)};
    return unchecked(std::move(m));
}

Ket ghz_state(std::size_t n) {
    require_state_size(n);
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return Ket(std::move(amps));
}

Ket w_state(std::size_t n) {
    require_state_size(n);
    std::vector<Complex> amps(std::size_t{1} << n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t q = 0; q < n; ++q) {
        amps[std::size_t{1} << q] = a;
    }
    return Ket(std::move(amps));
}

DensityMatrix ket_to_dm(const Ket& psi) {
    return DensityMatrix::unchecked(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

std::string basis_label(std::size_t index, std::size_t n_qubits) {
    std::string label(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((index >> (n_qubits - 1 - q)) & 1U) {
            label[q] = '1';
        }
    }
    return label;
}

ProbabilityDistribution probabilities(const DensityMatrix& rho) {
    ProbabilityDistribution dist;
    dist.labels.reserve(rho.dim());
    dist.probabilities.reserve(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        dist.labels.push_back(basis_label(i, rho.n_qubits()));
        dist.probabilities.push_back(rho(i, i).real());
    }
    return dist;
}

}  // namespace ghzw
