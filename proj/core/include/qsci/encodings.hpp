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
#include <vector>

#include "qsci/gates.hpp"
#include "qsci/statevector.hpp"

namespace qsci {

/// Zero-fills to a square matrix whose side is a power of two (at least 2).
[[nodiscard]] Matrix pad_matrix(const Matrix &m);

/// Zero-fills at the tail to `dimension` entries.
[[nodiscard]] Vector pad_vector(const Vector &v, std::size_t dimension);

struct PauliTerm {
    Complex coeff;
    std::string label; ///< over {I,X,Y,Z}; label[0] acts on qubit 0
};

struct PauliSum {
    std::vector<PauliTerm> terms;

    [[nodiscard]] std::size_t num_qubits() const;
    [[nodiscard]] double one_norm() const;
};

/// Kronecker product of the single-qubit Paulis named by `label`.
[[nodiscard]] Matrix pauli_matrix(const std::string &label);

/// Coefficients tr(P M) / 2^n over all 4^n strings; |coeff| <= drop_tol are skipped.
[[nodiscard]] PauliSum pauli_decompose(const Matrix &m, double drop_tol = 1e-12);

[[nodiscard]] Matrix pauli_reconstruct(const PauliSum &sum);

struct HermitianDilation {
    Matrix matrix;                 ///< [[0, A], [A^dagger, 0]]
    std::size_t block_dim;         ///< side of A
    /// For the system [[0,A],[A^dagger,0]] (y, x) = (b, 0), x sits at
    /// indices [block_dim, 2 block_dim).
    std::size_t solution_offset;
};

[[nodiscard]] HermitianDilation hermitian_dilate(const Matrix &a);

/// Unitary whose top-left 2^n block (ancillas reading |0^m>) holds A / alpha.
class BlockEncoding {
  public:
    BlockEncoding(GateMatrix unitary, std::size_t num_ancillas, double alpha, Matrix reference);

    [[nodiscard]] const GateMatrix &unitary() const noexcept { return unitary_; }
    [[nodiscard]] std::size_t num_ancillas() const noexcept { return num_ancillas_; }
    [[nodiscard]] std::size_t num_system_qubits() const noexcept { return num_system_; }
    [[nodiscard]] std::size_t system_dimension() const noexcept {
        return std::size_t{1} << num_system_;
    }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    /// The encoded matrix A (not divided by alpha).
    [[nodiscard]] const Matrix &reference() const noexcept { return reference_; }
    /// Top-left block of the unitary, i.e. A / alpha up to rounding.
    [[nodiscard]] Matrix block() const;
    [[nodiscard]] double block_error() const;

  private:
    GateMatrix unitary_;
    std::size_t num_ancillas_;
    std::size_t num_system_;
    double alpha_;
    Matrix reference_;
};

/**
 * One-ancilla encoding [[A/a, -S], [S, A/a]] with S = sqrt(I - (A/a)^2), for
 * Hermitian A. alpha defaults to the spectral norm.
 */
[[nodiscard]] BlockEncoding block_encode_hermitian(const Matrix &a,
                                                   std::optional<double> alpha = std::nullopt);

/// One-ancilla unitary dilation [[M, sqrt(I-MM^dagger)], [sqrt(I-M^dagger M), -M^dagger]], M = A/alpha.
[[nodiscard]] BlockEncoding block_encode_general(const Matrix &a,
                                                 std::optional<double> alpha = std::nullopt);

/// LCU over the Pauli strings; alpha is the sum of |coeff|.
[[nodiscard]] BlockEncoding block_encode_from_pauli_sum(const PauliSum &sum);

/// Prepares |0^m>|psi>, applies U, and keeps the ancilla-zero slice.
[[nodiscard]] Postselected apply_block_encoding(const BlockEncoding &be, const StateVector &state);

/// Unnormalized (A / alpha) psi as read off the encoding's top-left block.
[[nodiscard]] Vector block_action(const BlockEncoding &be, const Vector &psi);

/// Position and value queries over a stored sparse matrix.
class SparseOracle {
  public:
    static SparseOracle from_matrix(const Matrix &m, double zero_tol = 0.0);

    [[nodiscard]] std::size_t dimension() const noexcept { return columns_.size(); }
    /// Largest number of nonzeros in any row.
    [[nodiscard]] std::size_t sparsity() const noexcept { return sparsity_; }
    /// Column of the v-th nonzero (v counts from 1) in `row`; nullopt past
    /// the end of the row.
    [[nodiscard]] std::optional<std::size_t> position(std::size_t row, std::size_t v) const;
    [[nodiscard]] Complex value(std::size_t row, std::size_t col) const;

  private:
    std::vector<std::vector<std::size_t>> columns_;
    std::vector<std::vector<Complex>> values_;
    std::size_t sparsity_ = 0;
};

} // namespace qsci
