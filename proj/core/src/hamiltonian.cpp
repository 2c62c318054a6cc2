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

#include "qsci/hamiltonian.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qsci/error.hpp"

namespace qsci {

namespace {

std::size_t width_of(const PauliSum &h) {
    require(!h.terms.empty(), "Hamiltonian has no terms");
    const std::size_t n = h.num_qubits();
    require(n >= 1, "Pauli labels are empty");
    for (const auto &term : h.terms) {
        require(term.label.size() == n, "Pauli labels must share a length");
        require(term.label.find_first_not_of("IXYZ") == std::string::npos,
                "invalid Pauli label '" + term.label + "'");
        require(std::abs(term.coeff.imag()) <= 1e-12,
                "Hamiltonian coefficient of '" + term.label + "' is complex; H would not be Hermitian");
    }
    return n;
}

/// Appends exp(-i theta P) for one term, folding identities into the phase.
void append_term(Circuit &c, const std::string &label, double theta) {
    std::size_t active = 0, pos = 0;
    for (std::size_t q = 0; q < label.size(); ++q) {
        if (label[q] != 'I') {
            ++active;
            pos = q;
        }
    }
    if (active == 0) {
        c.add_global_phase(-theta);
    } else if (active == 1) {
        const char *gate = label[pos] == 'X' ? "RX" : label[pos] == 'Y' ? "RY" : "RZ";
        c.add(gate, {pos}, {2.0 * theta});
    } else {
        c.compose(pauli_string_exp(label, theta));
    }
}

} // namespace

GateMatrix exact_unitary(const Matrix &h, double t) {
    require(h.rows() == h.cols(), "exact_unitary: matrix must be square");
    require(is_hermitian(h), "exact_unitary: matrix is not Hermitian");
    return GateMatrix(hermitian_function(h, [t](double lambda) { return std::polar(1.0, -lambda * t); }));
}

Circuit pauli_string_exp(const std::string &label, double theta) {
    require(!label.empty(), "pauli_string_exp: empty label");
    std::vector<std::size_t> active;
    for (std::size_t q = 0; q < label.size(); ++q) {
        const char c = label[q];
        require(c == 'I' || c == 'X' || c == 'Y' || c == 'Z',
                std::string("pauli_string_exp: invalid label character '") + c + "'");
        if (c != 'I') {
            active.push_back(q);
        }
    }
    require(!active.empty(), "pauli_string_exp: the identity string only contributes a global phase");
    Circuit c(label.size());
    auto basis_change = [&](bool forward) {
        for (std::size_t q : active) {
            if (label[q] == 'X') {
                c.add("H", {q});
            } else if (label[q] == 'Y') {
                c.add("RX", {q}, {forward ? kPi / 2 : -kPi / 2});
            }
        }
    };
    basis_change(true);
    for (std::size_t i = 0; i + 1 < active.size(); ++i) {
        c.add("CX", {active[i], active[i + 1]});
    }
    c.add("RZ", {active.back()}, {2.0 * theta});
    for (std::size_t i = active.size() - 1; i-- > 0;) {
        c.add("CX", {active[i], active[i + 1]});
    }
    basis_change(false);
    return c;
}

Circuit trotter1(const PauliSum &h, double t, std::size_t r) {
    const std::size_t n = width_of(h);
    require(r >= 1, "trotter: r must be at least 1");
    const double dt = t / static_cast<double>(r);
    Circuit c(n);
    for (std::size_t step = 0; step < r; ++step) {
        for (const auto &term : h.terms) {
            append_term(c, term.label, term.coeff.real() * dt);
        }
    }
    return c;
}

Circuit trotter2(const PauliSum &h, double t, std::size_t r) {
    const std::size_t n = width_of(h);
    require(r >= 1, "trotter: r must be at least 1");
    const double dt = t / static_cast<double>(r);
    const std::size_t L = h.terms.size();
    Circuit c(n);
    for (std::size_t step = 0; step < r; ++step) {
        for (std::size_t j = 0; j + 1 < L; ++j) {
            append_term(c, h.terms[j].label, h.terms[j].coeff.real() * dt / 2);
        }
        append_term(c, h.terms[L - 1].label, h.terms[L - 1].coeff.real() * dt);
        for (std::size_t j = L - 1; j-- > 0;) {
            append_term(c, h.terms[j].label, h.terms[j].coeff.real() * dt / 2);
        }
    }
    return c;
}

double trotter_error(const PauliSum &h, double t, std::size_t r, int order) {
    require(order == 1 || order == 2, "trotter_error: order must be 1 or 2");
    const Circuit c = order == 1 ? trotter1(h, t, r) : trotter2(h, t, r);
    const Matrix exact = exact_unitary(pauli_reconstruct(h), t).matrix();
    return spectral_norm(circuit_unitary(c) - exact);
}

std::size_t taylor_default_order(double one_norm, double t, std::size_t r, double eps) {
    require(eps > 0.0, "taylor: eps must be positive");
    const double x = std::abs(t) * one_norm / static_cast<double>(r);
    double term = x; // x^(K+1)/(K+1)! at K = 0
    std::size_t K = 0;
    while (term > eps) {
        ++K;
        term *= x / static_cast<double>(K + 1);
        require(K < 200, "taylor: truncation order exceeds 200");
    }
    return std::max<std::size_t>(K, 1);
}

TaylorSimulation taylor_sim(const HamiltonianSpec &spec) {
    width_of(spec.pauli_sum);
    require(spec.r >= 1, "taylor: r must be at least 1");
    const double norm1 = spec.pauli_sum.one_norm();
    const std::size_t K = spec.K ? *spec.K : taylor_default_order(norm1, spec.t, spec.r, spec.eps);
    require(K >= 1, "taylor: K must be at least 1");
    const Matrix h = pauli_reconstruct(spec.pauli_sum);
    const Complex step = -kI * spec.t / static_cast<double>(spec.r);
    const double x = std::abs(spec.t) * norm1 / static_cast<double>(spec.r);

    Matrix term = Matrix::Identity(h.rows(), h.cols());
    Matrix segment = term;
    double beta = 1.0, scalar = 1.0;
    for (std::size_t k = 1; k <= K; ++k) {
        term = (step / static_cast<double>(k)) * (h * term);
        segment += term;
        scalar *= x / static_cast<double>(k);
        beta += scalar;
    }
    BlockEncoding be = block_encode_general(segment, beta);
    return {std::move(segment), beta, std::move(be), K, spec.r};
}

Postselected taylor_apply(const TaylorSimulation &sim, const StateVector &state) {
    StateVector current = state;
    double prob = 1.0;
    for (std::size_t s = 0; s < sim.r; ++s) {
        Postselected seg = apply_block_encoding(sim.encoding, current);
        prob *= seg.success_prob;
        current = std::move(seg.state);
    }
    return {std::move(current), prob};
}

Matrix taylor_operator(const TaylorSimulation &sim) {
    Matrix out = Matrix::Identity(sim.segment.rows(), sim.segment.cols());
    for (std::size_t s = 0; s < sim.r; ++s) {
        out = sim.segment * out;
    }
    return out;
}

QspSimulation qsp_sim(const BlockEncoding &be, double t, double eps, const StateVector &state) {
    const Matrix &h = be.reference();
    require(is_hermitian(h), "qsp_sim: the encoded matrix is not Hermitian");
    const double alpha = be.alpha();
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(h, Eigen::EigenvaluesOnly);
    const bool shifted = eig.eigenvalues().minCoeff() < 0.0;

    const auto dim = h.rows();
    const Matrix target = shifted ? Matrix(0.5 * (h / alpha + Matrix::Identity(dim, dim))) : Matrix(h / alpha);
    const double tau = shifted ? 2.0 * alpha * t : alpha * t;
    const BlockEncoding signal = block_encode_hermitian(target, 1.0);
    const JacobiAngerSeries ja = jacobi_anger(tau, eps);

    const Vector c = chebyshev_action(signal, ja.cos_series, state.amplitudes());
    const Vector s = chebyshev_action(signal, ja.sin_series, state.amplitudes());
    Vector out = c - kI * s;
    if (shifted) {
        out *= std::polar(1.0, alpha * t);
    }
    const double lambda = ja.cos_series.one_norm() + ja.sin_series.one_norm();
    const double norm = out.norm();
    const double prob = norm * norm / (lambda * lambda);
    if (!(prob >= kMinPostselectionProb)) {
        fail(ErrorKind::kPostselection, "qsp_sim: vanishing postselection probability");
    }
    return {StateVector::normalize(std::move(out)), prob, norm,
            std::max(ja.cos_series.degree(), ja.sin_series.degree()), tau, shifted};
}

} // namespace qsci
