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

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsci/circuit.hpp"
#include "qsci/hamiltonian.hpp"
#include "qsci/ode.hpp"
#include "qsci/polynomial.hpp"
#include "qsci/solvers.hpp"

namespace qsci::io {

using Json = nlohmann::json;

/// A number, a [re, im] pair, or {"re": .., "im": ..}.
[[nodiscard]] Complex complex_from_json(const Json &j);
[[nodiscard]] Json complex_to_json(Complex z);

/// An array of entries, or {"data": [...], "bit_order": "big-endian"}.
[[nodiscard]] Vector vector_from_json(const Json &j);
/// Real entries are written as plain numbers, complex ones as pairs.
[[nodiscard]] Json vector_to_json(const Vector &v);

/// {"n", "format": "dense" | "coo", "data"}; "rows"/"cols" override n for
/// rectangular input. A bare nested array is read as dense rows.
[[nodiscard]] Matrix matrix_from_json(const Json &j);
[[nodiscard]] Json matrix_to_json(const Matrix &m);

/// {"terms": [{"coeff": [re, im], "label": "IXZ"}]} or a bare list of
/// [coeff, label] pairs.
[[nodiscard]] PauliSum pauli_sum_from_json(const Json &j);
[[nodiscard]] Json pauli_sum_to_json(const PauliSum &sum);

[[nodiscard]] PhaseSequence phases_from_json(const Json &j);
[[nodiscard]] Json phases_to_json(const PhaseSequence &phases);

[[nodiscard]] ChebyshevSeries series_from_json(const Json &j);
[[nodiscard]] Json series_to_json(const ChebyshevSeries &series);

/// {"num_qubits", "bit_order", "ops": [{"name", "params", "targets",
/// "controls", "control_states"}]}; "measure" ops list qubits in "targets",
/// "unitary" ops carry a "matrix".
[[nodiscard]] Circuit circuit_from_json(const Json &j);
[[nodiscard]] Json circuit_to_json(const Circuit &circuit);

[[nodiscard]] Histogram histogram_from_json(const Json &j);
[[nodiscard]] Json histogram_to_json(const Histogram &h);

/// PauliSum fields plus "t", "r", "K", "eps".
[[nodiscard]] HamiltonianSpec hamiltonian_from_json(const Json &j);

/// {"A", "b", "x0", "T", "k", "m", "p", "eps", "kappa"}; A is a matrix document.
[[nodiscard]] OdeProblem ode_from_json(const Json &j);

[[nodiscard]] Json report_to_json(const SolveReport &report);
[[nodiscard]] Json ode_report_to_json(const OdeReport &report);

[[nodiscard]] Json read_json(const std::filesystem::path &path);

/// Writes through a temporary file in the same directory and renames it.
void write_text_atomic(const std::filesystem::path &path, const std::string &content);

/// Human-readable problems with a document; empty when it is valid. `kind`
/// is one of vector, matrix, pauli, phases, series, circuit, histogram,
/// hamiltonian, ode, or "auto" to infer it from the fields present.
[[nodiscard]] std::vector<std::string> diagnose(const Json &j, const std::string &kind = "auto",
                                                const std::string &purpose = "");

} // namespace qsci::io
