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

#include "qsci/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "qsci/error.hpp"

namespace qsci {

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

GateMatrix::GateMatrix(Matrix m, double tol) : m_(std::move(m)), num_qubits_(0) {
    require(m_.rows() == m_.cols(), "gate matrix must be square");
    num_qubits_ = exact_log2(static_cast<std::size_t>(m_.rows()));
    const double defect = unitarity_defect(m_);
    if (!(defect <= tol)) {
        std::ostringstream os;
        os << "gate matrix is not unitary (defect " << defect << ")";
        fail(ErrorKind::kInvalidInput, os.str());
    }
}

GateMatrix GateMatrix::power(std::size_t p) const {
    Matrix result = Matrix::Identity(m_.rows(), m_.cols());
    Matrix base = m_;
    while (p > 0) {
        if (p & 1U) {
            result = result * base;
        }
        p >>= 1U;
        if (p > 0) {
            base = base * base;
        }
    }
    // Long products drift; a looser check absorbs accumulated rounding.
    return GateMatrix(std::move(result), 1e-8);
}

std::size_t standard_gate_arity(std::string_view name) {
    const std::string n = upper(name);
    if (n == "RX" || n == "RY" || n == "RZ" || n == "P") {
        return 1;
    }
    return 0;
}

bool is_standard_gate(std::string_view name) {
    static const char *const kNames[] = {"I",  "X",  "Y",  "Z",  "H",    "S",   "SDG",  "T",
                                         "TDG", "RX", "RY", "RZ", "P", "SWAP", "CX", "CZ",
                                         "TOFFOLI"};
    const std::string n = upper(name);
    return std::any_of(std::begin(kNames), std::end(kNames),
                       [&](const char *k) { return n == k; });
}

GateMatrix standard_gate(std::string_view name, std::span<const double> params) {
    const std::string n = upper(name);
    require(is_standard_gate(n), "unknown gate '" + std::string(name) + "'");
    const std::size_t arity = standard_gate_arity(n);
    require(params.size() == arity, "gate '" + std::string(name) + "' takes " +
                                        std::to_string(arity) + " parameter(s)");
    const double r = 1.0 / std::sqrt(2.0);
    if (n == "I") return GateMatrix(Matrix::Identity(2, 2));
    if (n == "X") return GateMatrix(mat2(0, 1, 1, 0));
    if (n == "Y") return GateMatrix(mat2(0, -kI, kI, 0));
    if (n == "Z") return GateMatrix(mat2(1, 0, 0, -1));
    if (n == "H") return GateMatrix(mat2(r, r, r, -r));
    if (n == "S") return GateMatrix(mat2(1, 0, 0, kI));
    if (n == "SDG") return GateMatrix(mat2(1, 0, 0, -kI));
    if (n == "T") return GateMatrix(mat2(1, 0, 0, std::polar(1.0, kPi / 4)));
    if (n == "TDG") return GateMatrix(mat2(1, 0, 0, std::polar(1.0, -kPi / 4)));
    if (n == "RX" || n == "RY" || n == "RZ") {
        const double c = std::cos(params[0] / 2);
        const double s = std::sin(params[0] / 2);
        if (n == "RX") return GateMatrix(mat2(c, -kI * s, -kI * s, c));
        if (n == "RY") return GateMatrix(mat2(c, -s, s, c));
        return GateMatrix(mat2(std::polar(1.0, -params[0] / 2), 0, 0, std::polar(1.0, params[0] / 2)));
    }
    if (n == "P") return GateMatrix(mat2(1, 0, 0, std::polar(1.0, params[0])));
    if (n == "SWAP") {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
        return GateMatrix(std::move(m));
    }
    if (n == "CX") return controlled(standard_gate("X"), 1);
    if (n == "CZ") return controlled(standard_gate("Z"), 1);
    return controlled(standard_gate("X"), 2); // TOFFOLI
}

GateMatrix controlled(const GateMatrix &g, std::size_t num_controls,
                      std::span<const int> control_states) {
    require(num_controls >= 1, "controlled: at least one control is required");
    require(control_states.empty() || control_states.size() == num_controls,
            "controlled: one control state per control");
    std::size_t pattern = 0;
    for (std::size_t c = 0; c < num_controls; ++c) {
        const int s = control_states.empty() ? 1 : control_states[c];
        require(s == 0 || s == 1, "controlled: control states must be 0 or 1");
        pattern = (pattern << 1U) | static_cast<std::size_t>(s);
    }
    const auto d = static_cast<Eigen::Index>(g.dimension());
    const Eigen::Index blocks = Eigen::Index{1} << num_controls;
    Matrix m = Matrix::Identity(blocks * d, blocks * d);
    const auto at = static_cast<Eigen::Index>(pattern) * d;
    m.block(at, at, d, d) = g.matrix();
    return GateMatrix(std::move(m));
}

} // namespace qsci
