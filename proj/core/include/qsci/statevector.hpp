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
#include <span>
#include <string>
#include <string_view>

#include "qsci/linalg.hpp"

namespace qsci {

/**
 * @brief Normalized amplitude vector of an n-qubit register.
 *
 * Basis index i is read big-endian: qubit 0 is the most significant bit, so
 * the ket |q0 q1 ... q(n-1)> has index sum_k q_k 2^(n-1-k). Instances are
 * immutable; every operation that changes a state returns a new value.
 */
class StateVector {
  public:
    /// Takes ownership of `amplitudes`; their length must be 2^n and their
    /// 2-norm 1 within `tol`.
    static StateVector from_amplitudes(Vector amplitudes, double tol = kNormTol);

    /// Divides by the 2-norm. Throws if the vector is zero.
    static StateVector normalize(Vector amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    [[nodiscard]] const Vector &amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex operator[](std::size_t index) const {
        return amplitudes_(static_cast<Eigen::Index>(index));
    }
    [[nodiscard]] double norm() const { return amplitudes_.norm(); }
    [[nodiscard]] double probability(std::size_t index) const {
        return std::norm((*this)[index]);
    }

  private:
    StateVector(std::size_t num_qubits, Vector amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    std::size_t num_qubits_;
    Vector amplitudes_;
};

[[nodiscard]] StateVector zero_state(std::size_t num_qubits);

/// Zero-pads at the tail to the next power of two, then normalizes.
[[nodiscard]] StateVector amplitude_encode(std::span<const Complex> values);
[[nodiscard]] StateVector amplitude_encode(std::span<const double> values);
[[nodiscard]] StateVector amplitude_encode(const Vector &values);

/// |bits> for a string over {0,1}; leftmost character is qubit 0.
[[nodiscard]] StateVector basis_embed(std::string_view bits);

[[nodiscard]] StateVector kron(const StateVector &a, const StateVector &b);

/// <a|b>
[[nodiscard]] Complex inner(const StateVector &a, const StateVector &b);

/// |<a|b>|^2
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

/// Big-endian label of a basis index, e.g. (3, 3) -> "011".
[[nodiscard]] std::string basis_label(std::size_t index, std::size_t num_qubits);
[[nodiscard]] std::size_t basis_index(std::string_view bits);

/// Rank of the Schmidt decomposition across the cut after `left_qubits`.
/// A rank of 1 means the state is a Kronecker product across that cut.
[[nodiscard]] std::size_t schmidt_rank(const StateVector &state, std::size_t left_qubits,
                                       double tol = 1e-10);

/// Outcome of conditioning leading ancilla qubits on a fixed value.
struct Postselected {
    StateVector state;
    double success_prob;
};

/**
 * Keeps the slice of `full` in which the leading `ancilla_qubits` read
 * `ancilla_value` and renormalizes it. Throws ErrorKind::kPostselection when
 * the slice probability is below `min_prob`.
 */
[[nodiscard]] Postselected postselect_leading(const Vector &full, std::size_t ancilla_qubits,
                                              std::size_t ancilla_value,
                                              double min_prob = kMinPostselectionProb);

} // namespace qsci
