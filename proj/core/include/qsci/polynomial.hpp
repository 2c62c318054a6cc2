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
#include <utility>
#include <vector>

#include "qsci/encodings.hpp"

namespace qsci {

enum class Parity { kEven, kOdd, kMixed };

[[nodiscard]] std::string to_string(Parity p);
[[nodiscard]] Parity parse_parity(const std::string &text);

/// sum_k c_k T_k(x) on [-1, 1].
struct ChebyshevSeries {
    std::vector<double> coefficients;
    Parity parity = Parity::kMixed;
    std::string domain = "[-1,1]";
    /// Factor already multiplied into the coefficients (1 unless rescaled).
    double scale = 1.0;
    /// Largest residual at the fitting nodes.
    double max_node_residual = 0.0;

    [[nodiscard]] std::size_t degree() const noexcept {
        return coefficients.empty() ? 0 : coefficients.size() - 1;
    }
    [[nodiscard]] double operator()(double x) const; ///< Clenshaw evaluation
    [[nodiscard]] double one_norm() const;
};

/// Parity implied by the nonzero coefficients.
[[nodiscard]] Parity detect_parity(const std::vector<double> &coefficients, double tol = 0.0);

/// max |P(x)| over [-1, 1], from a dense Chebyshev grid refined around its peaks.
[[nodiscard]] double max_abs(const ChebyshevSeries &series);

struct PhaseSequence {
    std::vector<double> phases; ///< phi_0 .. phi_d
    Parity parity = Parity::kOdd;
    std::string target;
    double kappa = 0.0;
    double eps = 0.0;

    [[nodiscard]] std::size_t degree() const noexcept {
        return phases.empty() ? 0 : phases.size() - 1;
    }
};

/// (2|0^m><0^m| - I) tensor I on n system qubits.
[[nodiscard]] GateMatrix reflection_zpi(std::size_t num_ancillas, std::size_t num_system_qubits);

/**
 * Block-encoding of T_k(A/alpha): the product U R U^dagger R U ... with k
 * factors alternating U and U^dagger and R = reflection_zpi between them.
 * For non-Hermitian A the block is the singular-value Chebyshev transform.
 */
[[nodiscard]] BlockEncoding qubitization_power(const BlockEncoding &be, std::size_t k);

/// T_k applied to the singular values of M (W T_k(S) V^dagger for odd k,
/// W T_k(S) W^dagger for even k); equals T_k(M) for Hermitian M.
[[nodiscard]] Matrix singular_value_chebyshev(const Matrix &m, std::size_t k);

/**
 * P(A/alpha) |psi> for P = sum_k c_k T_k, realized as an LCU of the
 * qubitized walks with subnormalization sum |c_k|. The series must satisfy
 * |P| <= 1 on [-1, 1]. success_prob = ||P(A/alpha) psi||^2 / (sum |c_k|)^2.
 */
[[nodiscard]] Postselected chebyshev_apply(const BlockEncoding &be, const ChebyshevSeries &series,
                                           const StateVector &state);

/// Unnormalized P(A/alpha) psi computed through the walk recursion.
[[nodiscard]] Vector chebyshev_action(const BlockEncoding &be, const ChebyshevSeries &series,
                                      const Vector &psi);

/// Dense P(A/alpha) read off the walks, column by column.
[[nodiscard]] Matrix chebyshev_matrix(const BlockEncoding &be, const ChebyshevSeries &series);

enum class QspSequence {
    kAuto,      ///< repeated for the one-ancilla rotation form, alternating otherwise
    kRepeated,  ///< U, U, U, ...
    kAlternating, ///< U, U^dagger, U, ...
};

struct QspOptions {
    bool extract_real = false;
    QspSequence sequence = QspSequence::kAuto;
};

/**
 * Signal processing sequence CR(phi_0) U CR(phi_1) U ... U CR(phi_d) on the
 * registers [rotation qubit, ancilla, system]. CR(phi) applies
 * exp(i phi (2|0><0| - I)) to the ancilla, with the sign flipped when the
 * rotation qubit reads 1. With extract_real the rotation qubit is
 * Hadamard-sandwiched so the postselected block becomes Re P.
 * Phases follow the qsp_response convention for every encoding; for the
 * reflection-type general form they are shifted internally.
 */
[[nodiscard]] Postselected qsp_apply(const BlockEncoding &be, const PhaseSequence &phases,
                                     const StateVector &state, QspOptions options = {});

/// Unnormalized postselected output of the same sequence.
[[nodiscard]] Vector qsp_action(const BlockEncoding &be, const PhaseSequence &phases,
                                const Vector &psi, QspOptions options = {});

/// Scalar response <0| e^{i phi_0 Z} prod_j W(a) e^{i phi_j Z} |0> with
/// W(a) = [[a, i sqrt(1-a^2)], [i sqrt(1-a^2), a]].
[[nodiscard]] Complex qsp_response(const std::vector<double> &phases, double a);

/// Chebyshev interpolation of f at the d+1 first-kind nodes on [-1, 1].
[[nodiscard]] ChebyshevSeries chebyshev_interpolate(const std::function<double(double)> &f,
                                                    std::size_t degree);

using Interval = std::pair<double, double>;

/**
 * Least-squares Chebyshev fit of f over the union of `intervals` (each within
 * [-1, 1]) using only basis terms of the requested parity. A single interval
 * [-1, 1] with a mixed basis reduces to interpolation.
 */
[[nodiscard]] ChebyshevSeries chebyshev_fit(const std::function<double(double)> &f,
                                            const std::vector<Interval> &intervals,
                                            std::size_t degree, Parity parity = Parity::kMixed);

struct InverseFitOptions {
    std::size_t max_degree = 4001;
};

/**
 * Odd series P with |P(x) x / scale - 1| <= eps on 1/kappa <= |x| <= 1,
 * rescaled so max |P| = 1 on [-1, 1]. The factor sits in `scale`.
 */
[[nodiscard]] ChebyshevSeries inverse_coeffs(double kappa, double eps, InverseFitOptions options = {});

/// max |P(x) x / scale - 1| over a dense grid of 1/kappa <= x <= 1.
[[nodiscard]] double inverse_relative_error(const ChebyshevSeries &series, double kappa);

/**
 * Series Q with |Q(y) (1 - y) / scale - 1| <= eps on -1 <= y <= 1 - 1/kappa,
 * rescaled so max |Q| = 1 on [-1, 1]. Applied to B = I - A / lambda_max it
 * yields a multiple of A^{-1} for positive-definite A.
 */
[[nodiscard]] ChebyshevSeries shifted_inverse_coeffs(double kappa, double eps,
                                                     InverseFitOptions options = {});

/// max |Q(y) (1 - y) / scale - 1| over a dense grid of -1 <= y <= 1 - 1/kappa.
[[nodiscard]] double shifted_inverse_relative_error(const ChebyshevSeries &series, double kappa);

struct JacobiAngerSeries {
    ChebyshevSeries cos_series; ///< approximates cos(t x) / (1 + eps/4)
    ChebyshevSeries sin_series; ///< approximates sin(t x) / (1 + eps/4)
    std::size_t truncation = 0; ///< highest Bessel index kept
};

[[nodiscard]] JacobiAngerSeries jacobi_anger(double t, double eps);

} // namespace qsci
