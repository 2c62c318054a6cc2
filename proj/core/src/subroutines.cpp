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

#include "qsci/subroutines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsci/error.hpp"

namespace qsci {

Circuit reverse_qubit_order(std::size_t num_qubits) {
    Circuit c(num_qubits);
    for (std::size_t j = 0; j < num_qubits / 2; ++j) {
        c.add("SWAP", {j, num_qubits - 1 - j});
    }
    return c;
}

Circuit qft(std::size_t num_qubits, QftOptions options) {
    Circuit c(num_qubits);
    for (std::size_t j = 0; j < num_qubits; ++j) {
        c.add("H", {j});
        for (std::size_t k = j + 1; k < num_qubits; ++k) {
            const double angle = 2.0 * kPi / std::ldexp(1.0, static_cast<int>(k - j + 1));
            c.add("P", {j}, {angle}, {k});
        }
    }
    if (options.swaps) {
        c.compose(reverse_qubit_order(num_qubits));
    }
    return c;
}

Circuit iqft(std::size_t num_qubits, QftOptions options) {
    return inverse(qft(num_qubits, options));
}

Matrix dft_matrix(std::size_t dimension) {
    const auto n = static_cast<Eigen::Index>(dimension);
    Matrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dimension));
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto jk = static_cast<double>((j * k) % n);
            f(j, k) = std::polar(scale, 2.0 * kPi * jk / static_cast<double>(n));
        }
    }
    return f;
}

Circuit phase_estimation_circuit(const GateMatrix &u, std::size_t num_bits) {
    require(num_bits >= 1, "phase estimation needs at least one clock bit");
    const std::size_t n = u.num_qubits();
    Circuit c(num_bits + n);
    std::vector<std::size_t> system(n);
    std::iota(system.begin(), system.end(), num_bits);
    for (std::size_t j = 0; j < num_bits; ++j) {
        c.add("H", {j});
    }
    for (std::size_t j = 0; j < num_bits; ++j) {
        const GateMatrix power = u.power(std::size_t{1} << (num_bits - 1 - j));
        c.add(make_unitary_op(power, system, {j}, {}, "U^" + std::to_string(std::size_t{1} << (num_bits - 1 - j))));
    }
    std::vector<std::size_t> clock(num_bits);
    std::iota(clock.begin(), clock.end(), std::size_t{0});
    c.compose(iqft(num_bits), clock);
    return c;
}

namespace {

StateVector phase_estimation_state(const GateMatrix &u, const StateVector &eigenstate,
                                   std::size_t num_bits) {
    require(eigenstate.num_qubits() == u.num_qubits(),
            "phase estimation: state width does not match the unitary");
    const Circuit c = phase_estimation_circuit(u, num_bits);
    return run(c, kron(zero_state(num_bits), eigenstate));
}

std::vector<std::size_t> leading(std::size_t count) {
    std::vector<std::size_t> q(count);
    std::iota(q.begin(), q.end(), std::size_t{0});
    return q;
}

} // namespace

std::map<std::string, double> phase_distribution(const GateMatrix &u, const StateVector &eigenstate,
                                                 std::size_t num_bits) {
    const auto clock = leading(num_bits);
    return marginal_distribution(phase_estimation_state(u, eigenstate, num_bits), clock);
}

PhaseEstimate phase_estimate(const GateMatrix &u, const StateVector &eigenstate, std::size_t num_bits,
                             std::size_t shots, std::uint64_t seed) {
    const auto clock = leading(num_bits);
    PhaseEstimate est;
    est.num_bits = num_bits;
    est.distribution = sample_state(phase_estimation_state(u, eigenstate, num_bits), clock, shots, seed);
    const auto best = std::max_element(
        est.distribution.counts.begin(), est.distribution.counts.end(),
        [](const auto &a, const auto &b) { return a.second < b.second; });
    est.phase = static_cast<double>(basis_index(best->first)) / std::ldexp(1.0, static_cast<int>(num_bits));
    return est;
}

GateMatrix flag_reflection(std::size_t num_qubits, const BasisPredicate &good) {
    const auto dim = Eigen::Index{1} << num_qubits;
    Matrix m = Matrix::Identity(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (good(static_cast<std::size_t>(i))) {
            m(i, i) = -1.0;
        }
    }
    return GateMatrix(std::move(m));
}

GateMatrix zero_reflection(std::size_t num_qubits) {
    const auto dim = Eigen::Index{1} << num_qubits;
    Matrix m = -Matrix::Identity(dim, dim);
    m(0, 0) = 1.0;
    return GateMatrix(std::move(m));
}

Circuit amplitude_amplify(const Circuit &prep, const BasisPredicate &good, std::size_t iterations) {
    require(!prep.has_measurements(), "amplitude_amplify: preparation must be measurement free");
    const std::size_t n = prep.num_qubits();
    const auto all = leading(n);
    const Circuit unprep = inverse(prep);
    const GateMatrix s_good = flag_reflection(n, good);
    const GateMatrix s_zero = zero_reflection(n);
    Circuit c(n);
    c.compose(prep);
    for (std::size_t k = 0; k < iterations; ++k) {
        c.add(make_unitary_op(s_good, all, {}, {}, "S_good"));
        c.compose(unprep);
        c.add(make_unitary_op(s_zero, all, {}, {}, "S_0"));
        c.compose(prep);
    }
    return c;
}

double good_probability(const StateVector &state, const BasisPredicate &good) {
    double p = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (good(i)) {
            p += state.probability(i);
        }
    }
    return p;
}

std::size_t grover_optimal_iterations(std::size_t num_qubits) {
    const double n = std::ldexp(1.0, static_cast<int>(num_qubits));
    return static_cast<std::size_t>(std::floor(kPi / 4.0 * std::sqrt(n)));
}

Circuit grover(std::size_t num_qubits, std::size_t marked, std::size_t iterations) {
    require(marked < (std::size_t{1} << num_qubits), "grover: marked index out of range");
    Circuit prep(num_qubits);
    for (std::size_t q = 0; q < num_qubits; ++q) {
        prep.add("H", {q});
    }
    Circuit c = amplitude_amplify(prep, [marked](std::size_t i) { return i == marked; }, iterations);
    c.measure_all();
    return c;
}

Matrix state_preparation_unitary(const Vector &v) {
    const Eigen::Index dim = v.size();
    Vector u = -v;
    u(0) += 1.0;
    const double norm2 = u.squaredNorm();
    if (norm2 < 1e-30) {
        return Matrix::Identity(dim, dim);
    }
    // Householder reflector I - 2uu^dagger/|u|^2 sends e_0 to v for real v.
    return Matrix::Identity(dim, dim) - (2.0 / norm2) * u * u.adjoint();
}

LcuCircuit lcu_circuit(const std::vector<UnitaryTerm> &terms) {
    require(!terms.empty(), "lcu: at least one term is required");
    const std::size_t dim = terms.front().unitary.dimension();
    for (const auto &t : terms) {
        require(t.unitary.dimension() == dim, "lcu: all unitaries must share a dimension");
        require(std::isfinite(t.coeff.real()) && std::isfinite(t.coeff.imag()),
                "lcu: coefficients must be finite");
    }
    double alpha = 0.0;
    for (const auto &t : terms) {
        alpha += std::abs(t.coeff);
    }
    require(alpha > 0.0, "lcu: all coefficients are zero");

    const std::size_t m = std::max<std::size_t>(1, qubits_for(terms.size()));
    const std::size_t n = exact_log2(dim);
    const auto branches = Eigen::Index{1} << m;
    Vector amplitudes = Vector::Zero(branches);
    for (std::size_t l = 0; l < terms.size(); ++l) {
        amplitudes(static_cast<Eigen::Index>(l)) = std::sqrt(std::abs(terms[l].coeff) / alpha);
    }
    const GateMatrix prep(state_preparation_unitary(amplitudes));

    Circuit c(m + n);
    const auto ancillas = leading(m);
    std::vector<std::size_t> system(n);
    std::iota(system.begin(), system.end(), m);
    c.add(make_unitary_op(prep, ancillas, {}, {}, "PREP"));
    for (std::size_t l = 0; l < terms.size(); ++l) {
        if (terms[l].coeff == Complex{0.0}) {
            continue;
        }
        // The coefficient's phase rides on the unitary so PREP stays real.
        const Complex phase = terms[l].coeff / std::abs(terms[l].coeff);
        const GateMatrix u(phase * terms[l].unitary.matrix());
        std::vector<int> states(m);
        for (std::size_t b = 0; b < m; ++b) {
            states[b] = static_cast<int>((l >> (m - 1 - b)) & 1U);
        }
        c.add(make_unitary_op(u, system, ancillas, states, "SELECT_" + std::to_string(l)));
    }
    c.add(make_unitary_op(prep.adjoint(), ancillas, {}, {}, "PREP_dg"));
    return {std::move(c), m, alpha};
}

Postselected lcu_apply(const std::vector<UnitaryTerm> &terms, const StateVector &state) {
    const LcuCircuit lcu = lcu_circuit(terms);
    require(lcu.circuit.num_qubits() - lcu.num_ancillas == state.num_qubits(),
            "lcu: state width does not match the unitaries");
    const StateVector full = run(lcu.circuit, kron(zero_state(lcu.num_ancillas), state));
    return postselect_leading(full.amplitudes(), lcu.num_ancillas, 0);
}

} // namespace qsci
