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

#include "qsci/statevector.hpp"

#include <cmath>
#include <sstream>

#include "qsci/error.hpp"

namespace qsci {

StateVector StateVector::from_amplitudes(Vector amplitudes, double tol) {
    const auto dim = static_cast<std::size_t>(amplitudes.size());
    require(dim >= 2, "a state needs at least one qubit");
    const std::size_t n = exact_log2(dim);
    require(amplitudes.allFinite(), "amplitudes must be finite");
    const double norm = amplitudes.norm();
    if (std::abs(norm * norm - 1.0) > tol) {
        std::ostringstream os;
        os << "state is not normalized: sum |a_i|^2 = " << norm * norm;
        fail(ErrorKind::kInvalidInput, os.str());
    }
    return {n, std::move(amplitudes)};
}

StateVector StateVector::normalize(Vector amplitudes) {
    require(amplitudes.allFinite(), "amplitudes must be finite");
    const double norm = amplitudes.norm();
    require(norm > 0.0, "cannot normalize the zero vector");
    amplitudes /= norm;
    return from_amplitudes(std::move(amplitudes));
}

StateVector zero_state(std::size_t num_qubits) {
    require(num_qubits >= 1, "zero_state: at least one qubit is required");
    require(num_qubits < 31, "zero_state: register too large for dense simulation");
    Vector a = Vector::Zero(Eigen::Index{1} << num_qubits);
    a(0) = 1.0;
    return StateVector::from_amplitudes(std::move(a));
}

StateVector amplitude_encode(const Vector &values) {
    require(values.size() >= 1, "amplitude_encode: empty input");
    require(values.allFinite(), "amplitude_encode: entries must be finite");
    require(values.norm() > 0.0, "amplitude_encode: encoding of the zero vector is undefined");
    const auto dim = static_cast<Eigen::Index>(
        std::max<std::size_t>(2, next_power_of_two(static_cast<std::size_t>(values.size()))));
    Vector padded = Vector::Zero(dim);
    padded.head(values.size()) = values;
    return StateVector::normalize(std::move(padded));
}

StateVector amplitude_encode(std::span<const Complex> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = values[i];
    }
    return amplitude_encode(v);
}

StateVector amplitude_encode(std::span<const double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = values[i];
    }
    return amplitude_encode(v);
}

std::size_t basis_index(std::string_view bits) {
    require(!bits.empty(), "empty bitstring");
    require(bits.size() < 64, "bitstring too long");
    std::size_t index = 0;
    for (char c : bits) {
        require(c == '0' || c == '1', "bitstring may only contain '0' and '1'");
        index = (index << 1U) | static_cast<std::size_t>(c == '1');
    }
    return index;
}

StateVector basis_embed(std::string_view bits) {
    const std::size_t index = basis_index(bits);
    Vector a = Vector::Zero(Eigen::Index{1} << bits.size());
    a(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector::from_amplitudes(std::move(a));
}

std::string basis_label(std::size_t index, std::size_t num_qubits) {
    std::string s(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if ((index >> (num_qubits - 1 - q)) & 1U) {
            s[q] = '1';
        }
    }
    return s;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    return StateVector::from_amplitudes(kron(a.amplitudes(), b.amplitudes()));
}

Complex inner(const StateVector &a, const StateVector &b) {
    require(a.dimension() == b.dimension(), "inner: dimension mismatch");
    return a.amplitudes().dot(b.amplitudes()); // Eigen's dot conjugates the left operand
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

std::size_t schmidt_rank(const StateVector &state, std::size_t left_qubits, double tol) {
    require(left_qubits >= 1 && left_qubits < state.num_qubits(),
            "schmidt_rank: cut must split the register");
    const Eigen::Index rows = Eigen::Index{1} << left_qubits;
    const Eigen::Index cols = static_cast<Eigen::Index>(state.dimension()) / rows;
    // Row-major reshape: amplitude (i, j) sits at i * cols + j.
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = state.amplitudes()(i * cols + j);
        }
    }
    const RealVector sv = singular_values(m);
    return static_cast<std::size_t>((sv.array() > tol).count());
}

Postselected postselect_leading(const Vector &full, std::size_t ancilla_qubits,
                                std::size_t ancilla_value, double min_prob) {
    const auto dim = static_cast<std::size_t>(full.size());
    const std::size_t total = exact_log2(dim);
    require(ancilla_qubits < total, "postselect: no system qubits left");
    require(ancilla_value < (std::size_t{1} << ancilla_qubits), "postselect: value out of range");
    const std::size_t block = dim >> ancilla_qubits;
    Vector slice = full.segment(static_cast<Eigen::Index>(ancilla_value * block),
                                static_cast<Eigen::Index>(block));
    const double prob = slice.squaredNorm();
    if (!(prob >= min_prob)) {
        std::ostringstream os;
        os << "postselection probability " << prob << " below " << min_prob;
        fail(ErrorKind::kPostselection, os.str());
    }
    slice /= std::sqrt(prob);
    return {StateVector::from_amplitudes(std::move(slice)), prob};
}

} // namespace qsci
