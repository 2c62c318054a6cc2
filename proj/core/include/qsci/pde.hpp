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

#include <cstddef>

#include "qsci/solvers.hpp"

namespace qsci {

/// Dirichlet second-difference matrix tridiag(-1, 2, -1) of size n.
[[nodiscard]] Matrix laplacian_1d(std::size_t n);

/// sum_i I x .. x L x .. x I over d factors.
[[nodiscard]] Matrix kron_sum(const Matrix &l, std::size_t d);

/// exp(i t (L + ... + L)) as the tensor product of d copies of exp(i t L).
[[nodiscard]] GateMatrix kron_sum_exp(const Matrix &l, std::size_t d, double t);

/// n x (n+1) difference matrix with B[i][i] = 1, B[i][i+1] = -1, so B B^T = laplacian_1d(n).
[[nodiscard]] Matrix difference_matrix(std::size_t n);

/// First-order form of u_tt = -L u / h^2 with L = B B^dagger.
struct WaveGenerator {
    Matrix H;      ///< (1/h) [[0, B], [B^dagger, 0]]
    Matrix B;
    double h;
    std::size_t vertex_dim; ///< size of the phi_V block (first)
};

[[nodiscard]] WaveGenerator wave_generator(std::size_t n, double h);

/// Lifting of u'' = -(A + c I) u + b to the first-order system z' = G z + f.
struct WaveLift {
    Matrix G;      ///< [[0, I], [A + c I, 0]]
    Vector f;      ///< (0, b)
};

[[nodiscard]] WaveLift wave_lift(const Matrix &a, double c, const Vector &b);

/// Evolves (phi_V, phi_E) for time t under exp(-i H t).
[[nodiscard]] Vector wave_evolve(const WaveGenerator &gen, const Vector &initial, double t);

/// L u = f for the d-dimensional Dirichlet Laplacian on n points per axis.
[[nodiscard]] LinearSystemProblem poisson_problem(std::size_t n, std::size_t d, const Vector &f, double eps);

} // namespace qsci
