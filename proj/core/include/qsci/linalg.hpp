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

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Dense>

namespace qsci {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Tolerances shared across modules.
inline constexpr double kNormTol = 1e-10;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kMinPostselectionProb = 1e-14;

[[nodiscard]] constexpr bool is_power_of_two(std::size_t v) noexcept {
    return v != 0 && (v & (v - 1)) == 0;
}

[[nodiscard]] std::size_t next_power_of_two(std::size_t v);

/// log2 of an exact power of two; throws otherwise.
[[nodiscard]] std::size_t exact_log2(std::size_t v);

/// Number of qubits needed to index `v` entries (0 for v <= 1).
[[nodiscard]] std::size_t qubits_for(std::size_t v);

[[nodiscard]] Matrix kron(const Matrix &a, const Matrix &b);
[[nodiscard]] Vector kron(const Vector &a, const Vector &b);

/// max |U^dagger U - I|
[[nodiscard]] double unitarity_defect(const Matrix &u);
/// max |H - H^dagger|
[[nodiscard]] double hermiticity_defect(const Matrix &h);
[[nodiscard]] bool is_hermitian(const Matrix &h, double tol = 1e-10);

[[nodiscard]] double spectral_norm(const Matrix &m);
[[nodiscard]] RealVector singular_values(const Matrix &m);

/// f(H) for Hermitian H through its eigendecomposition.
[[nodiscard]] Matrix hermitian_function(const Matrix &h,
                                        const std::function<Complex(double)> &f);

/// Chebyshev polynomial of the first kind by three-term recursion.
[[nodiscard]] double chebyshev_t(std::size_t k, double x);

/// T_k of a square matrix by three-term recursion.
[[nodiscard]] Matrix chebyshev_t(std::size_t k, const Matrix &x);

} // namespace qsci
