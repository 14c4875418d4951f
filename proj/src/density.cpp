// Copyright 2026 The rindler-qi Authors
// SPDX-License-Identifier: Apache-2.0

#include "rqi/density.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rqi/errors.hpp"

namespace rqi {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// Mixed-radix digits of `index` for `dims`, slowest first.
std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> out(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    return out;
}

std::vector<std::optional<SectorLabel>*> present_fields(BasisKet& ket) {
    std::vector<std::optional<SectorLabel>*> out;
    for (auto* f : {&ket.alice, &ket.region_i, &ket.region_ii})
        if (f->has_value()) out.push_back(f);
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix entries,
                             std::vector<BasisKet> basis)
    : dims_(std::move(dims)), entries_(std::move(entries)), basis_(std::move(basis)) {
    if (dims_.empty() || std::find(dims_.begin(), dims_.end(), 0) != dims_.end()) {
        throw std::invalid_argument("layout must list positive subsystem dimensions");
    }
    if (product(dims_) != entries_.size()) {
        throw std::invalid_argument("matrix dimension does not match layout");
    }
    if (!basis_.empty() && basis_.size() != entries_.size()) {
        throw std::invalid_argument("basis label count does not match dimension");
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix entries)
    : DensityMatrix({entries.size()}, std::move(entries)) {}

DensityMatrix density_from_pure(const StateVector& s) {
    if (std::abs(s.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("density_from_pure needs a normalized state");
    }
    const Layout layout = s.layout();
    const std::size_t dim = layout_dimension(layout);
    std::vector<Complex> column(dim);
    for (const auto& [ket, amp] : s) column[ket_index(ket)] = amp;

    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = column[i] * std::conj(column[j]);

    std::vector<std::size_t> dims = layout == Layout::Full
                                        ? std::vector<std::size_t>{kAliceDim, kRegionDim, kRegionDim}
                                        : std::vector<std::size_t>{kRegionDim, kRegionDim};
    return {std::move(dims), std::move(m), all_basis_kets(layout)};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep) {
    const auto& dims = rho.dims();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
        throw std::invalid_argument("partial_trace: duplicate subsystem index");
    }
    if (keep.back() >= dims.size()) {
        throw std::invalid_argument("partial_trace: subsystem index out of range");
    }

    std::vector<bool> kept(dims.size(), false);
    for (auto k : keep) kept[k] = true;
    std::vector<std::size_t> out_dims;
    for (auto k : keep) out_dims.push_back(dims[k]);
    const std::size_t out_dim = product(out_dims);

    auto reduced_index = [&](const std::vector<std::size_t>& d) {
        std::size_t idx = 0;
        for (auto k : keep) idx = idx * dims[k] + d[k];
        return idx;
    };

    ComplexMatrix out(out_dim);
    const std::size_t n = rho.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto di = digits(i, dims);
        for (std::size_t j = 0; j < n; ++j) {
            const auto dj = digits(j, dims);
            bool diagonal_in_traced = true;
            for (std::size_t k = 0; k < dims.size() && diagonal_in_traced; ++k)
                if (!kept[k] && di[k] != dj[k]) diagonal_in_traced = false;
            if (diagonal_in_traced) out(reduced_index(di), reduced_index(dj)) += rho(i, j);
        }
    }

    std::vector<BasisKet> basis;
    if (!rho.basis().empty()) {
        basis.resize(out_dim);
        for (std::size_t i = 0; i < n; ++i) {
            const auto di = digits(i, dims);
            bool traced_zero = true;
            for (std::size_t k = 0; k < dims.size(); ++k)
                if (!kept[k] && di[k] != 0) traced_zero = false;
            if (!traced_zero) continue;
            BasisKet label = rho.basis()[i];
            auto fields = present_fields(label);
            for (std::size_t k = 0; k < fields.size(); ++k)
                if (!kept[k]) fields[k]->reset();
            basis[reduced_index(di)] = label;
        }
    }
    return {std::move(out_dims), std::move(out), std::move(basis)};
}

DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
    const auto& dims = rho.dims();
    if (subsystem >= dims.size()) {
        throw std::invalid_argument("partial_transpose: subsystem index out of range");
    }
    std::size_t stride = 1;
    for (std::size_t k = subsystem + 1; k < dims.size(); ++k) stride *= dims[k];

    const std::size_t n = rho.size();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ai = (i / stride) % dims[subsystem];
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t aj = (j / stride) % dims[subsystem];
            // |a b><c d|  ->  |c b><a d|
            const std::size_t ti = i + (aj - ai) * stride;
            const std::size_t tj = j + (ai - aj) * stride;
            out(ti, tj) = rho(i, j);
        }
    }
    return {dims, std::move(out), rho.basis()};
}

Eigensystem eigensystem_hermitian(const ComplexMatrix& m, double tol) {
    const double herm = m.hermiticity_deviation();
    if (herm > 1e-12) {
        throw std::invalid_argument("eigensystem_hermitian: matrix is not Hermitian (deviation " +
                                    std::to_string(herm) + ")");
    }
    const std::size_t n = m.size();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

    const double threshold = tol * std::max(1.0, m.frobenius_norm());
    int sweeps = 0;
    while (a.off_diagonal_norm() >= threshold) {
        if (sweeps == kJacobiMaxSweeps) {
            throw ConvergenceError("Jacobi eigensolver did not converge", a.off_diagonal_norm());
        }
        ++sweeps;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const Complex e = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex se = s * e;
                const Complex sec = s * std::conj(e);
                const Complex cec = c * std::conj(e);
                const Complex ce = c * e;

                // a <- a U, v <- v U with U = [[c, s], [-s e*, c e*]] on (p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - sec * akq;
                    a(k, q) = s * akp + cec * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - sec * vkq;
                    v(k, q) = s * vkp + cec * vkq;
                }
                // a <- U^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - se * aqk;
                    a(q, k) = s * apk + ce * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    Eigensystem out;
    out.spectrum.sweeps_used = sweeps;
    out.vectors = ComplexMatrix(n);
    out.spectrum.eigenvalues.reserve(n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        const double lambda = a(src, src).real();
        out.spectrum.eigenvalues.push_back(lambda);
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, src);

        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Complex mv{};
            for (std::size_t k = 0; k < n; ++k) mv += m(i, k) * v(k, src);
            res += std::norm(mv - lambda * v(i, src));
        }
        out.spectrum.max_residual = std::max(out.spectrum.max_residual, std::sqrt(res));
    }
    return out;
}

Spectrum eigenvalues_hermitian(const ComplexMatrix& m, double tol) {
    return eigensystem_hermitian(m, tol).spectrum;
}

Spectrum eigenvalues_hermitian(const DensityMatrix& rho, double tol) {
    return eigenvalues_hermitian(rho.matrix(), tol);
}

DensityDiagnostics validate_density(const DensityMatrix& rho) {
    DensityDiagnostics d;
    const ComplexMatrix& m = rho.matrix();
    d.trace_deviation = std::abs(m.trace() - Complex{1.0});
    d.hermiticity_deviation = m.hermiticity_deviation();
    const ComplexMatrix hermitian_part = (m + m.adjoint()) * Complex{0.5};
    try {
        const auto spectrum = eigenvalues_hermitian(hermitian_part);
        d.min_eigenvalue = spectrum.eigenvalues.empty() ? 0.0 : spectrum.eigenvalues.back();
    } catch (const ConvergenceError&) {
        d.min_eigenvalue = std::nan("");
    }
    d.psd_ok = d.min_eigenvalue >= -kPsdTolerance;
    return d;
}

}  // namespace rqi
