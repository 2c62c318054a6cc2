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
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsci/circuit.hpp"

namespace qsci {

struct QftOptions {
    /// Final qubit-reversal swaps. With them the circuit matrix is the DFT
    /// F[j][k] = exp(2 pi i j k / N) / sqrt(N); without them the output is
    /// bit-reversed.
    bool swaps = true;
};

[[nodiscard]] Circuit qft(std::size_t num_qubits, QftOptions options = {});
[[nodiscard]] Circuit iqft(std::size_t num_qubits, QftOptions options = {});

/// SWAP network reversing the order of all qubits.
[[nodiscard]] Circuit reverse_qubit_order(std::size_t num_qubits);

/// Explicit DFT matrix, used to check qft().
[[nodiscard]] Matrix dft_matrix(std::size_t dimension);

struct PhaseEstimate {
    double phase = 0.0; ///< most frequent outcome / 2^num_bits, in [0,1)
    std::size_t num_bits = 0;
    Histogram distribution;
};

/**
 * Phase estimation circuit on `num_bits` clock qubits followed by the system
 * register. Clock qubit j (0 = most significant) controls U^(2^(num_bits-1-j));
 * after the inverse QFT the clock reads phase * 2^num_bits.
 */
[[nodiscard]] Circuit phase_estimation_circuit(const GateMatrix &u, std::size_t num_bits);

/// Exact clock-register distribution for the given system state.
[[nodiscard]] std::map<std::string, double> phase_distribution(const GateMatrix &u,
                                                               const StateVector &eigenstate,
                                                               std::size_t num_bits);

[[nodiscard]] PhaseEstimate phase_estimate(const GateMatrix &u, const StateVector &eigenstate,
                                           std::size_t num_bits, std::size_t shots,
                                           std::uint64_t seed);

using BasisPredicate = std::function<bool(std::size_t)>;

/// Diagonal reflection: -1 on flagged basis states, +1 elsewhere.
[[nodiscard]] GateMatrix flag_reflection(std::size_t num_qubits, const BasisPredicate &good);

/// 2|0><0| - I on the whole register.
[[nodiscard]] GateMatrix zero_reflection(std::size_t num_qubits);

/**
 * `prep` followed by k Grover iterates Q = prep S0 prep^dagger S_good, where
 * S_good flips the sign of good states and S0 = 2|0><0| - I. After k rounds
 * the good-subspace probability is sin^2((2k+1) theta), sin theta = sqrt(p).
 */
[[nodiscard]] Circuit amplitude_amplify(const Circuit &prep, const BasisPredicate &good,
                                        std::size_t iterations);

/// Total probability of flagged basis states.
[[nodiscard]] double good_probability(const StateVector &state, const BasisPredicate &good);

[[nodiscard]] std::size_t grover_optimal_iterations(std::size_t num_qubits);

/// Grover search for one marked index with a terminal measurement of all qubits.
[[nodiscard]] Circuit grover(std::size_t num_qubits, std::size_t marked, std::size_t iterations);

struct UnitaryTerm {
    Complex coeff;
    GateMatrix unitary;
};

struct LcuCircuit {
    Circuit circuit;           ///< ancillas first, then the system
    std::size_t num_ancillas;
    double alpha;              ///< sum of |coeff|
};

/// PREP^dagger SELECT PREP over ceil(log2 L) ancillas (at least one).
[[nodiscard]] LcuCircuit lcu_circuit(const std::vector<UnitaryTerm> &terms);

/// Unit-norm real vector with v[0] arbitrary; returns a unitary whose first column is v.
[[nodiscard]] Matrix state_preparation_unitary(const Vector &v);

/**
 * Applies sum_l a_l U_l / ||a||_1 to `state` through postselection of the
 * ancilla register on |0...0>.
 */
[[nodiscard]] Postselected lcu_apply(const std::vector<UnitaryTerm> &terms, const StateVector &state);

} // namespace qsci
