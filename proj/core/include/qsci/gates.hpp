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
#include <string_view>
#include <vector>

#include "qsci/linalg.hpp"

namespace qsci {

/// Dense unitary on 2^k amplitudes. Unitarity is checked on construction.
class GateMatrix {
  public:
    explicit GateMatrix(Matrix m, double tol = kUnitarityTol);

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(m_.rows());
    }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] GateMatrix adjoint() const { return GateMatrix(m_.adjoint()); }
    /// U^p by repeated squaring.
    [[nodiscard]] GateMatrix power(std::size_t p) const;

  private:
    Matrix m_;
    std::size_t num_qubits_;
};

/**
 * Standard gate by (case-insensitive) name: I, X, Y, Z, H, S, Sdg, T, Tdg,
 * Rx, Ry, Rz, P, SWAP, CX, CZ, Toffoli. Angles are radians with
 * Rx(t) = exp(-i t X / 2) and likewise for Ry, Rz; P(t) = diag(1, e^{it}).
 */
[[nodiscard]] GateMatrix standard_gate(std::string_view name, std::span<const double> params = {});

/// Number of angle parameters taken by a standard gate.
[[nodiscard]] std::size_t standard_gate_arity(std::string_view name);
[[nodiscard]] bool is_standard_gate(std::string_view name);

/**
 * Block-diagonal controlled gate: `g` acts when the control register (the
 * leading qubits) matches `control_states`, identity otherwise. An empty
 * `control_states` means all controls must read 1.
 */
[[nodiscard]] GateMatrix controlled(const GateMatrix &g, std::size_t num_controls,
                                    std::span<const int> control_states = {});

} // namespace qsci
