#include "ghzw/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "ghzw/errors.hpp"

namespace ghzw {

namespace {

constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_norm2(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                sum += std::norm(a(i, j));
            }
        }
    }
    return sum;
}

double frobenius_norm2(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const Complex& z : a.entries()) {
        sum += std::norm(z);
    }
    return sum;
}

// One complex Jacobi rotation annihilating a(p, q), p < q. The rotation is
// U = D R with D = diag(1, e^{-i arg a_pq}) making the pivot real and R the
// classic real symmetric rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    if (g == 0.0) {
        return;
    }
    const Complex phase = std::conj(apq) / g;  // e^{-i alpha}
    const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex u_pp = c;
    const Complex u_pq = s;
    const Complex u_qp = -s * phase;
    const Complex u_qq = c * phase;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
        a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * u_pp + vkq * u_qp;
        v(k, q) = vkp * u_pq + vkq * u_qq;
    }
}

}  // namespace

std::size_t qubit_count_for_dim(std::size_t dim) {
    if (!std::has_single_bit(dim)) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dim) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > max_dim || cols > max_dim || rows / a.rows() != b.rows() ||
        cols / a.cols() != b.cols()) {
        throw SizeError("tensor product " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds maximum dimension " + std::to_string(max_dim));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix tensor_power(const ComplexMatrix& m, std::size_t power, std::size_t max_dim) {
    if (power == 0) {
        throw ArgumentError("tensor power must be at least 1");
    }
    ComplexMatrix out = m;
    for (std::size_t k = 1; k < power; ++k) {
        out = tensor(out, m, max_dim);
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t n_qubits,
                            std::size_t traced_qubit) {
    if (!rho.is_square()) {
        throw ShapeError("partial trace needs a square matrix");
    }
    if (qubit_count_for_dim(rho.rows()) != n_qubits || n_qubits == 0) {
        throw ShapeError("matrix of dimension " + std::to_string(rho.rows()) +
                         " is not a " + std::to_string(n_qubits) + "-qubit operator");
    }
    if (traced_qubit >= n_qubits) {
        throw ArgumentError("traced qubit " + std::to_string(traced_qubit) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    const std::size_t shift = n_qubits - 1 - traced_qubit;
    const std::size_t low_mask = (std::size_t{1} << shift) - 1;
    const std::size_t reduced = rho.rows() / 2;
    const auto expand = [&](std::size_t index, std::size_t bit) {
        return ((index & ~low_mask) << 1) | (bit << shift) | (index & low_mask);
    };

    ComplexMatrix out(reduced, reduced);
    for (std::size_t i = 0; i < reduced; ++i) {
        for (std::size_t j = 0; j < reduced; ++j) {
            out(i, j) = rho(expand(i, 0), expand(j, 0)) + rho(expand(i, 1), expand(j, 1));
        }
    }
    return out;
}

HermitianEig herm_eig(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw ValidationError("eigendecomposition needs a square matrix");
    }
    const double herm = hermiticity_error(m);
    if (herm > kHermitianTol) {
        throw ValidationError("matrix is not Hermitian (max |m - m^dagger| = " +
                              std::to_string(herm) + ")");
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * Complex{0.5};
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale2 = frobenius_norm2(a);
    const double stop = scale2 * 1e-32;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && off_diagonal_norm2(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });

    HermitianEig result{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        result.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            result.eigenvectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
    const HermitianEig eig = herm_eig(m);
    const std::size_t n = m.rows();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -kPsdTol) {
            throw NotPsdError("matrix has eigenvalue " + std::to_string(lambda) +
                              " below -1e-10");
        }
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    const ComplexMatrix& vecs = eig.eigenvectors;
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex sum{};
            for (std::size_t k = 0; k < n; ++k) {
                sum += vecs(i, k) * roots[k] * std::conj(vecs(j, k));
            }
            out(i, j) = sum;
            out(j, i) = std::conj(sum);
        }
        out(i, i) = out(i, i).real();
    }
    return out;
}

}  // namespace ghzw
