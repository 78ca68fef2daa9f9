#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ghzw {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Always at least 1x1 with finite entries.
class ComplexMatrix {
public:
    // rows x cols of zeros.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    // Takes ownership of row-major data; throws ValidationError on NaN/Inf.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    // Nested-list literal, handy for small fixed operators.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    // |a><b| for column vectors a, b of equal length.
    static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |a_ij - b_ij|; throws ShapeError on mismatched dimensions.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |m - m^dagger| entry; requires a square matrix.
double hermiticity_error(const ComplexMatrix& m);

}  // namespace ghzw
