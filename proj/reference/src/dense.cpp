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

#include <cmath>

#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include "qsci_ref/oracles.hpp"

namespace qsci::ref {

Vector dense_solve(const Matrix &a, const Vector &b) { return a.fullPivLu().solve(b); }

Matrix expm(const Matrix &m) { return m.exp(); }

Matrix dft(std::size_t n) {
    Matrix f(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2.0 * kPi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = std::polar(scale, angle);
        }
    }
    return f;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
        for (Eigen::Index j = 0; j < out.cols(); ++j) {
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
        }
    }
    return out;
}

Matrix kron_sum(const Matrix &l, std::size_t d) {
    const Eigen::Index n = l.rows();
    const Matrix eye = Matrix::Identity(n, n);
    Matrix total;
    for (std::size_t pos = 0; pos < d; ++pos) {
        Matrix term = pos == 0 ? l : eye;
        for (std::size_t q = 1; q < d; ++q) {
            term = kron(term, q == pos ? l : eye);
        }
        total = pos == 0 ? term : Matrix(total + term);
    }
    return total;
}

Matrix laplacian(std::size_t n) {
    Matrix l = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < l.rows(); ++i) {
        l(i, i) = 2.0;
        if (i > 0) l(i, i - 1) = -1.0;
        if (i + 1 < l.rows()) l(i, i + 1) = -1.0;
    }
    return l;
}

} // namespace qsci::ref
