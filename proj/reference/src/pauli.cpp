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

#include <stdexcept>

#include "qsci_ref/oracles.hpp"

namespace qsci::ref {

namespace {

Matrix single(char c) {
    Matrix p(2, 2);
    switch (c) {
    case 'I': p << 1, 0, 0, 1; break;
    case 'X': p << 0, 1, 1, 0; break;
    case 'Y': p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': p << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad Pauli letter");
    }
    return p;
}

} // namespace

Matrix pauli_string(const std::string &label) {
    Matrix out = Matrix::Identity(1, 1);
    for (char c : label) {
        out = kron(out, single(c));
    }
    return out;
}

std::vector<PauliCoeff> pauli_brute_force(const Matrix &m, double drop_tol) {
    std::size_t n = 0;
    while ((Eigen::Index{1} << n) < m.rows()) ++n;
    const double norm = static_cast<double>(m.rows());
    std::vector<PauliCoeff> out;
    std::string label(n, 'I');
    const char letters[] = {'I', 'X', 'Y', 'Z'};
    const std::size_t total = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < total; ++code) {
        for (std::size_t q = 0; q < n; ++q) {
            label[q] = letters[(code >> (2 * (n - 1 - q))) & 3U];
        }
        const Matrix p = pauli_string(label);
        Complex trace = 0.0;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                trace += p(i, j) * m(j, i);
            }
        }
        const Complex c = trace / norm;
        if (std::abs(c) > drop_tol) {
            out.push_back({label, c});
        }
    }
    return out;
}

} // namespace qsci::ref
