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
#include <functional>
#include <string>
#include <vector>

#include "qsci/linalg.hpp"

/// Independent classical computations. Nothing here calls into the quantum
/// pipeline beyond the shared matrix typedefs.
namespace qsci::ref {

/// x = A^{-1} b by full-pivot LU.
[[nodiscard]] Vector dense_solve(const Matrix &a, const Vector &b);

/// exp(M) by Pade scaling and squaring.
[[nodiscard]] Matrix expm(const Matrix &m);

/// Naive F[j][k] = exp(2 pi i j k / N) / sqrt(N).
[[nodiscard]] Matrix dft(std::size_t n);

/// Kronecker product by explicit index arithmetic.
[[nodiscard]] Matrix kron(const Matrix &a, const Matrix &b);

/// I (x) ... (x) L (x) ... (x) I summed over the d positions.
[[nodiscard]] Matrix kron_sum(const Matrix &l, std::size_t d);

/// Dense Pauli string built by repeated kron of 2x2 factors.
[[nodiscard]] Matrix pauli_string(const std::string &label);

struct PauliCoeff {
    std::string label;
    Complex coeff;
};

/// tr(P M) / N over all 4^n strings, forming each P explicitly.
[[nodiscard]] std::vector<PauliCoeff> pauli_brute_force(const Matrix &m, double drop_tol = 1e-12);

using OdeRhs = std::function<Vector(double, const Vector &)>;

struct Rk45Options {
    double rtol = 1e-12;
    double atol = 1e-14;
    double h0 = 1e-3;
    std::size_t max_steps = 1000000;
};

/// Adaptive Dormand-Prince 5(4) integration of x' = f(t, x) from 0 to T.
[[nodiscard]] Vector rk45(const OdeRhs &f, const Vector &x0, double T, Rk45Options options = {});

/// x' = A x + b.
[[nodiscard]] Vector rk45_linear(const Matrix &a, const Vector &b, const Vector &x0, double T,
                                 Rk45Options options = {});

/// Leapfrog for u'' = -K u, started with a Taylor half step. Returns u at
/// every step 0..steps.
[[nodiscard]] std::vector<Vector> leapfrog(const Matrix &k, const Vector &u0, const Vector &v0,
                                           double dt, std::size_t steps);

/// Dirichlet tridiag(-1, 2, -1).
[[nodiscard]] Matrix laplacian(std::size_t n);

/// Re <0| e^{i phi_0 Z} prod_j W(x) e^{i phi_j Z} |0>, W(x) = [[x, i s], [i s, x]].
[[nodiscard]] double qsp_real_response(const std::vector<double> &phases, double x);

struct PhaseFit {
    std::vector<double> phases;
    double residual = 0.0;   ///< max node error after the last iteration
    std::size_t iterations = 0;
};

/**
 * Symmetric phases whose real response matches the definite-parity
 * Chebyshev series `coefficients` at the positive Chebyshev nodes, by
 * damped Newton steps on a finite-difference Jacobian.
 */
[[nodiscard]] PhaseFit fit_qsp_phases(const std::vector<double> &coefficients, double tol = 1e-13,
                                      std::size_t max_iterations = 200);

} // namespace qsci::ref
