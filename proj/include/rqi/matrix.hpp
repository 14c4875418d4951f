// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace rqi {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}
    ComplexMatrix(std::size_t n, std::vector<Complex> data);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scale) const;

    Complex trace() const;
    double frobenius_norm() const;
    /// Frobenius norm of the strictly off-diagonal part.
    double off_diagonal_norm() const;
    /// max_ij |M_ij - conj(M_ji)|
    double hermiticity_deviation() const;
    /// max_ij |M_ij - other_ij|
    double max_abs_diff(const ComplexMatrix& other) const;

    /// Kronecker product (this x rhs).
    ComplexMatrix kron(const ComplexMatrix& rhs) const;

    bool operator==(const ComplexMatrix&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

/// Plain-text dump: one row per line, entries "re+imi" (17 significant
/// digits) separated by single spaces.
void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& is);

}  // namespace rqi
