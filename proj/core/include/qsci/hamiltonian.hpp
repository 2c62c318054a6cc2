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
#include <optional>
#include <string>

#include "qsci/circuit.hpp"
#include "qsci/encodings.hpp"
#include "qsci/polynomial.hpp"

namespace qsci {

struct HamiltonianSpec {
    PauliSum pauli_sum;
    double t = 1.0;
    std::size_t r = 1;
    std::optional<std::size_t> K; ///< Taylor truncation; chosen from eps when absent
    double eps = 1e-6;
};

/// exp(-i H t) through the eigendecomposition of Hermitian H.
[[nodiscard]] GateMatrix exact_unitary(const Matrix &h, double t);

/**
 * exp(-i theta P) for a non-identity Pauli string: basis change (H for X,
 * Rx(pi/2) for Y), CNOT ladder onto the last active qubit, Rz(2 theta), and
 * the mirror image.
 */
[[nodiscard]] Circuit pauli_string_exp(const std::string &label, double theta);

/// r steps of prod_j exp(-i c_j P_j t / r).
[[nodiscard]] Circuit trotter1(const PauliSum &h, double t, std::size_t r);

/// r symmetric steps: half steps forward, then backward, the middle pair merged.
[[nodiscard]] Circuit trotter2(const PauliSum &h, double t, std::size_t r);

/// Spectral-norm distance between a product-formula unitary and exp(-iHt).
[[nodiscard]] double trotter_error(const PauliSum &h, double t, std::size_t r, int order);

/// Smallest K with (t ||a||_1 / r)^(K+1) / (K+1)! <= eps.
[[nodiscard]] std::size_t taylor_default_order(double one_norm, double t, std::size_t r, double eps);

struct TaylorSimulation {
    Matrix segment;       ///< sum_{k<=K} (-i H t/r)^k / k!
    double beta = 1.0;    ///< sum_{k<=K} (t ||a||_1 / r)^k / k!
    BlockEncoding encoding; ///< encodes segment with alpha = beta
    std::size_t K = 0;
    std::size_t r = 1;
};

[[nodiscard]] TaylorSimulation taylor_sim(const HamiltonianSpec &spec);

/// r postselected segments; success_prob is the product over segments.
[[nodiscard]] Postselected taylor_apply(const TaylorSimulation &sim, const StateVector &state);

/// segment^r, the map taylor_apply realizes up to normalization.
[[nodiscard]] Matrix taylor_operator(const TaylorSimulation &sim);

struct QspSimulation {
    StateVector state;
    double success_prob;
    double output_norm;      ///< norm of (cos - i sin) psi before renormalization
    std::size_t degree;      ///< largest Chebyshev degree used
    double tau;              ///< time argument of the Jacobi-Anger series
    bool shifted;            ///< whether H was shifted to (H/alpha + I)/2
};

/**
 * exp(-i H t) psi from the Jacobi-Anger cos and sin series combined with
 * coefficients 1 and -i. Indefinite H is replaced by H+ = (H/alpha + I)/2,
 * simulated for time 2 alpha t, and the known phase exp(i alpha t) removed.
 */
[[nodiscard]] QspSimulation qsp_sim(const BlockEncoding &be, double t, double eps,
                                    const StateVector &state);

} // namespace qsci
