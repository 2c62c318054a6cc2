// Copyright 2026 The qsci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsci/linalg.hpp"

#include <limits>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qsci/error.hpp"

namespace qsci {

std::size_t next_power_of_two(std::size_t v) {
    std::size_t p = 1;
    while (p < v) {
        p <<= 1U;
    }
    return p;
}

std::size_t exact_log2(std::size_t v) {
    require(is_power_of_two(v),
            "dimension " + std::to_string(v) + " is not a power of two");
    std::size_t n = 0;
    while ((std::size_t{1} << n) < v) {
        ++n;
    }
    return n;
}

std::size_t qubits_for(std::size_t v) { return exact_log2(next_power_of_two(v)); }

Matrix kron(const Matrix &a, const Matrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

Vector kron(const Vector &a, const Vector &b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

double unitarity_defect(const Matrix &u) {
    if (u.rows() != u.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    const Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix &h) {
    if (h.rows() != h.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (h.size() == 0) {
        return 0.0;
    }
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix &h, double tol) { return hermiticity_defect(h) <= tol; }

RealVector singular_values(const Matrix &m) {
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues();
}

double spectral_norm(const Matrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    return singular_values(m)(0);
}

Matrix hermitian_function(const Matrix &h, const std::function<Complex(double)> &f) {
    require(is_hermitian(h, 1e-9), "matrix function requires a Hermitian matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    const Matrix &v = eig.eigenvectors();
    Vector fd(v.cols());
    for (Eigen::Index i = 0; i < fd.size(); ++i) {
        fd(i) = f(eig.eigenvalues()(i));
    }
    return v * fd.asDiagonal() * v.adjoint();
}

double chebyshev_t(std::size_t k, double x) {
    if (k == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = x;
    for (std::size_t j = 1; j < k; ++j) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Matrix chebyshev_t(std::size_t k, const Matrix &x) {
    require(x.rows() == x.cols(), "chebyshev_t: square matrix required");
    Matrix prev = Matrix::Identity(x.rows(), x.cols());
    if (k == 0) {
        return prev;
    }
    Matrix cur = x;
    for (std::size_t j = 1; j < k; ++j) {
        Matrix next = 2.0 * x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace qsci
