// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rqi {

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> data)
    : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw std::invalid_argument("matrix data size mismatch");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    return *this + rhs * Complex{-1.0};
}

ComplexMatrix ComplexMatrix::operator*(Complex scale) const {
    ComplexMatrix out = *this;
    for (auto& x : out.data_) x *= scale;
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& x : data_) sum += std::norm(x);
    return std::sqrt(sum);
}

double ComplexMatrix::off_diagonal_norm() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (i != j) sum += std::norm((*this)(i, j));
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_deviation() const {
    double dev = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    double dev = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        dev = std::max(dev, std::abs(data_[i] - other.data_[i]));
    return dev;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& rhs) const {
    const std::size_t m = rhs.n_;
    ComplexMatrix out(n_ * m);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    out(i * m + k, j * m + l) = (*this)(i, j) * rhs(k, l);
    return out;
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
    char buf[96];
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g%+.17gi", m(i, j).real(), m(i, j).imag());
            if (j != 0) os << ' ';
            os << buf;
        }
        os << '\n';
    }
}

namespace {

Complex parse_entry(const std::string& tok) {
    // Split at the sign that starts the imaginary part (not an exponent sign).
    if (tok.size() < 2 || tok.back() != 'i') throw std::invalid_argument("bad entry: " + tok);
    std::size_t split = std::string::npos;
    for (std::size_t k = tok.size() - 2; k > 0; --k) {
        if ((tok[k] == '+' || tok[k] == '-') && tok[k - 1] != 'e' && tok[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) throw std::invalid_argument("bad entry: " + tok);
    try {
        return {std::stod(tok.substr(0, split)),
                std::stod(tok.substr(split, tok.size() - split - 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad entry: " + tok);
    }
}

}  // namespace

ComplexMatrix read_matrix(std::istream& is) {
    std::vector<Complex> data;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        std::size_t count = 0;
        while (ls >> tok) {
            data.push_back(parse_entry(tok));
            ++count;
        }
        if (rows == 0) cols = count;
        if (count != cols) throw std::invalid_argument("ragged matrix dump");
        ++rows;
    }
    if (rows != cols) throw std::invalid_argument("matrix dump is not square");
    return ComplexMatrix(rows, std::move(data));
}

}  // namespace rqi
