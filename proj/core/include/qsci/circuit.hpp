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
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qsci/gates.hpp"
#include "qsci/statevector.hpp"

namespace qsci {

/// One gate application. `targets[0]` is the most significant qubit of the
/// gate's own index space.
struct GateOp {
    std::string name;
    std::vector<double> params;
    GateMatrix gate;
    std::vector<std::size_t> targets;
    std::vector<std::size_t> controls;
    std::vector<int> control_states; ///< one bit per control; 1 = filled circle

    [[nodiscard]] GateOp adjoint() const;
};

/// Builds a GateOp from a standard gate name. Empty `control_states` means
/// every control must read 1.
[[nodiscard]] GateOp make_op(std::string_view name, std::vector<std::size_t> targets,
                             std::vector<double> params = {},
                             std::vector<std::size_t> controls = {},
                             std::vector<int> control_states = {});

/// Builds a GateOp around an arbitrary unitary.
[[nodiscard]] GateOp make_unitary_op(GateMatrix gate, std::vector<std::size_t> targets,
                                     std::vector<std::size_t> controls = {},
                                     std::vector<int> control_states = {},
                                     std::string name = "unitary");

/// Terminal readout of the listed qubits.
struct Measurement {
    std::vector<std::size_t> qubits;
};

using Operation = std::variant<GateOp, Measurement>;

class Circuit {
  public:
    explicit Circuit(std::size_t num_qubits);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<Operation> &ops() const noexcept { return ops_; }
    [[nodiscard]] double global_phase() const noexcept { return global_phase_; }
    [[nodiscard]] bool has_measurements() const;
    [[nodiscard]] std::size_t gate_count() const;

    Circuit &add(GateOp op);
    Circuit &add(std::string_view name, std::vector<std::size_t> targets,
                 std::vector<double> params = {}, std::vector<std::size_t> controls = {},
                 std::vector<int> control_states = {});
    Circuit &measure(std::vector<std::size_t> qubits);
    Circuit &measure_all();
    Circuit &add_global_phase(double phase) noexcept;

    /// Appends `other` with its qubit q placed on `mapping[q]`; an empty
    /// mapping means the identity.
    Circuit &compose(const Circuit &other, std::span<const std::size_t> mapping = {});

  private:
    void check_qubit(std::size_t q) const;

    std::size_t num_qubits_;
    std::vector<Operation> ops_;
    double global_phase_ = 0.0;
};

/// Applies `op` to raw amplitudes of an `num_qubits`-qubit register.
void apply_in_place(Vector &amplitudes, std::size_t num_qubits, const GateOp &op);

[[nodiscard]] StateVector apply(const StateVector &state, const GateOp &op);

/// Runs every gate in order. Circuits with measurement markers are rejected.
[[nodiscard]] StateVector run(const Circuit &circuit, const StateVector &initial);

/// Same as run() but ignores measurement markers.
[[nodiscard]] StateVector run_gates(const Circuit &circuit, const StateVector &initial);

/// Full 2^n x 2^n matrix of a single op, built entry by entry. Test oracle,
/// limited to n <= 10.
[[nodiscard]] Matrix embedded_matrix(const GateOp &op, std::size_t num_qubits);

/// Unitary of a measurement-free circuit, column by column.
[[nodiscard]] Matrix circuit_unitary(const Circuit &circuit);

[[nodiscard]] Circuit inverse(const Circuit &circuit);

[[nodiscard]] double outcome_probability(const StateVector &state, std::size_t qubit, int outcome);

/// Projects `qubit` onto `outcome` and renormalizes.
[[nodiscard]] StateVector project(const StateVector &state, std::size_t qubit, int outcome);

struct MeasureResult {
    int outcome;
    double prob;
    StateVector post_state;
};

/// Projective measurement; `uniform` in [0,1) selects the outcome.
[[nodiscard]] MeasureResult measure(const StateVector &state, std::size_t qubit, double uniform);
[[nodiscard]] MeasureResult measure(const StateVector &state, std::size_t qubit,
                                    std::uint64_t seed);

struct Histogram {
    std::size_t shots = 0;
    std::map<std::string, std::size_t> counts;
    std::string bit_order = "big-endian";
};

struct SampleOptions {
    unsigned threads = 1;
};

/// Uniform double in [0,1) for shot `index` of stream `seed`.
[[nodiscard]] double shot_uniform(std::uint64_t seed, std::uint64_t index) noexcept;

/**
 * Samples the terminal measurements of `circuit` started from |0...0>.
 * Keys list measured qubits in marker order; without markers every qubit
 * is read. The result depends only on (circuit, shots, seed).
 */
[[nodiscard]] Histogram sample(const Circuit &circuit, std::size_t shots, std::uint64_t seed,
                               SampleOptions options = {});

/// Samples `qubits` of a prepared state.
[[nodiscard]] Histogram sample_state(const StateVector &state, std::span<const std::size_t> qubits,
                                     std::size_t shots, std::uint64_t seed,
                                     SampleOptions options = {});

/// Exact outcome distribution of `qubits`, keyed like sample().
[[nodiscard]] std::map<std::string, double> marginal_distribution(const StateVector &state,
                                                                  std::span<const std::size_t> qubits);

/// Reverses every key of width `width`.
[[nodiscard]] Histogram endianness_convert(const Histogram &histogram, std::size_t width);
[[nodiscard]] std::size_t endianness_convert(std::size_t index, std::size_t width);

} // namespace qsci
