#pragma once

#include <cstddef>
#include <vector>

#include "ghzw/matrix.hpp"

namespace ghzw {

inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

// Kronecker product a (x) b. Block (i, j) of the result is a(i, j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     std::size_t max_dim = kDefaultMaxDim);

// power-fold tensor product m (x) m (x) ... ; power >= 1.
ComplexMatrix tensor_power(const ComplexMatrix& m, std::size_t power,
                           std::size_t max_dim = kDefaultMaxDim);

// Traces out one qubit of an n-qubit operator. Qubit 0 is the most
// significant bit of the basis index, i.e. the leftmost label character.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t n_qubits,
                            std::size_t traced_qubit);

// Cyclic complex Jacobi diagonalization. Throws ValidationError when m is not
// square or not Hermitian within kHermitianTol.
HermitianEig herm_eig(const ComplexMatrix& m);

// Principal square root of a PSD Hermitian matrix. Eigenvalues in
// [-kPsdTol, 0) are clamped to zero; anything lower throws NotPsdError.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

// Returns log2(dim) when dim is a power of two, otherwise throws ShapeError.
std::size_t qubit_count_for_dim(std::size_t dim);

}  // namespace ghzw
