#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ghzw/matrix.hpp"

namespace ghzw {

inline constexpr std::size_t kMinStateQubits = 2;
inline constexpr std::size_t kMaxStateQubits = 12;
inline constexpr double kKetNormTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;

// Unit-norm state vector over the 2^n computational basis, big-endian
// labels (amplitude k belongs to the bit string of k with qubit 0 leftmost).
class Ket {
public:
    // Throws ShapeError unless the length is a power of two (>= 2) and
    // ValidationError unless the norm is 1 within kKetNormTol.
    explicit Ket(std::vector<Complex> amplitudes);

    // Rescales to unit norm. Throws DegeneratePerturbationError when the
    // norm is below 1e-12.
    static Ket normalized(std::vector<Complex> amplitudes);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex& operator[](std::size_t k) const noexcept { return amplitudes_[k]; }

    friend bool operator==(const Ket&, const Ket&) = default;

private:
    struct Trusted {};
    Ket(Trusted, std::vector<Complex> amplitudes);

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

// <a|b>; throws ShapeError on dimension mismatch.
Complex inner(const Ket& a, const Ket& b);

// ComplexMatrix known to be Hermitian, unit trace and PSD. The public
// constructor checks all three (PSD through a full eigendecomposition).
// Library operations that preserve the invariants by construction go
// through the unchecked factory instead, so checks happen once.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    // For results that are valid by construction (projectors, convex
    // mixtures of valid states). Only the cheap shape check is done.
    static DensityMatrix unchecked(ComplexMatrix m);

    static DensityMatrix maximally_mixed(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t dim() const noexcept { return m_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return m_(r, c); }

    friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

private:
    struct Trusted {};
    DensityMatrix(Trusted, ComplexMatrix m);

    std::size_t n_qubits_;
    ComplexMatrix m_;
};

struct ProbabilityDistribution {
    std::vector<std::string> labels;  // "00...0" .. "11...1", n characters each
    std::vector<double> probabilities;
};

// (|0...0> + |1...1>)/sqrt(2); 2 <= n <= 12.
Ket ghz_state(std::size_t n);

// Equal superposition of all single-excitation strings; 2 <= n <= 12.
Ket w_state(std::size_t n);

DensityMatrix ket_to_dm(const Ket& psi);

// Real parts of the diagonal, labelled with zero-padded bit strings.
ProbabilityDistribution probabilities(const DensityMatrix& rho);

// Bit string of `index` over n_qubits characters, qubit 0 first.
std::string basis_label(std::size_t index, std::size_t n_qubits);

}  // namespace ghzw
