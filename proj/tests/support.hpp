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

#pragma once

#include <cmath>
#include <random>

#include "qsci/linalg.hpp"
#include "qsci/statevector.hpp"

namespace qsci::test {

inline Matrix random_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols = -1) {
    std::normal_distribution<double> g;
    Matrix m(rows, cols < 0 ? rows : cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

inline Matrix random_hermitian(std::mt19937_64 &rng, Eigen::Index n) {
    const Matrix a = random_matrix(rng, n);
    return (a + a.adjoint()) / 2.0;
}

/// Random unitary from the QR factor of a Gaussian matrix.
inline Matrix random_unitary(std::mt19937_64 &rng, Eigen::Index n) {
    return Eigen::HouseholderQR<Matrix>(random_matrix(rng, n)).householderQ();
}

inline StateVector random_state(std::mt19937_64 &rng, std::size_t num_qubits) {
    return StateVector::normalize(random_matrix(rng, Eigen::Index{1} << num_qubits, 1).col(0));
}

template <class A, class B>
double max_diff(const Eigen::MatrixBase<A> &a, const Eigen::MatrixBase<B> &b) {
    return (a.derived().eval() - b.derived().eval()).cwiseAbs().maxCoeff();
}

/// Largest entrywise distance after removing a global phase from `a`.
inline double phase_aligned_diff(const Vector &a, const Vector &b) {
    const Complex overlap = a.dot(b);
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
    return (a * phase - b).cwiseAbs().maxCoeff();
}

} // namespace qsci::test
