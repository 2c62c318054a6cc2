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

#include <catch_amalgamated.hpp>

#include "qsci/error.hpp"
#include "qsci/hamiltonian.hpp"
#include "qsci_ref/oracles.hpp"
#include "support.hpp"

using namespace qsci;
using Catch::Matchers::WithinAbs;

namespace {

Matrix dense(const PauliSum &h) {
    Matrix m = Matrix::Zero(Eigen::Index{1} << h.terms[0].label.size(), Eigen::Index{1} << h.terms[0].label.size());
    for (const auto &t : h.terms) m += t.coeff * ref::pauli_string(t.label);
    return m;
}

double spectral(const Matrix &m) { return Eigen::JacobiSVD<Matrix>(m).singularValues()(0); }

const PauliSum kXZ{{{1.0, "X"}, {1.0, "Z"}}};

} // namespace

TEST_CASE("exact unitary matches the matrix exponential", "[hamiltonian]") {
    std::mt19937_64 rng(51);
    const Matrix h = test::random_hermitian(rng, 4);
    CHECK(test::max_diff(exact_unitary(h, 0.8).matrix(), ref::expm(Complex(0, -0.8) * h)) < 1e-12);
    REQUIRE_THROWS_AS(exact_unitary(test::random_matrix(rng, 2), 1.0), Error);
}

TEST_CASE("Pauli string exponentials", "[hamiltonian]") {
    for (const std::string label : {"XY", "ZZ", "YIX", "XZY", "IZI"}) {
        const double theta = 0.37;
        const Circuit c = pauli_string_exp(label, theta);
        CHECK(test::max_diff(circuit_unitary(c), ref::expm(Complex(0, -theta) * ref::pauli_string(label))) < 1e-12);
    }
    REQUIRE_THROWS_AS(pauli_string_exp("II", 0.1), Error);
}

TEST_CASE("first-order steps follow the term order", "[hamiltonian]") {
    const double t = 0.6;
    const Matrix x = ref::pauli_string("X"), z = ref::pauli_string("Z");
    const Matrix want = ref::expm(Complex(0, -t) * z) * ref::expm(Complex(0, -t) * x);
    CHECK(test::max_diff(circuit_unitary(trotter1(kXZ, t, 1)), want) < 1e-13);
}

TEST_CASE("commuting terms are exact for any r", "[hamiltonian]") {
    const PauliSum h{{{0.5, "ZI"}, {-1.3, "IZ"}, {0.7, "ZZ"}, {0.2, "II"}}};
    const Matrix exact = ref::expm(Complex(0, -1.4) * dense(h));
    for (std::size_t r : {1U, 3U}) {
        CHECK(test::max_diff(circuit_unitary(trotter1(h, 1.4, r)), exact) < 1e-12);
        CHECK(test::max_diff(circuit_unitary(trotter2(h, 1.4, r)), exact) < 1e-12);
    }
}

TEST_CASE("second-order step is symmetric", "[hamiltonian]") {
    const double t = 0.4;
    const Matrix x = ref::pauli_string("X"), z = ref::pauli_string("Z");
    const Matrix half = ref::expm(Complex(0, -t / 2) * x);
    const Matrix want = half * ref::expm(Complex(0, -t) * z) * half;
    CHECK(test::max_diff(circuit_unitary(trotter2(kXZ, t, 1)), want) < 1e-13);
}

TEST_CASE("product-formula error orders", "[hamiltonian]") {
    const PauliSum h{{{0.8, "XX"}, {-0.5, "ZI"}, {0.3, "YZ"}}};
    const Matrix exact = ref::expm(Complex(0, -2.0) * dense(h));
    double prev1 = 0.0, prev2 = 0.0;
    for (std::size_t r : {16U, 32U, 64U}) {
        const double e1 = spectral(circuit_unitary(trotter1(h, 2.0, r)) - exact);
        const double e2 = spectral(circuit_unitary(trotter2(h, 2.0, r)) - exact);
        CHECK_THAT(trotter_error(h, 2.0, r, 1), WithinAbs(e1, 1e-12));
        CHECK_THAT(trotter_error(h, 2.0, r, 2), WithinAbs(e2, 1e-12));
        if (prev1 > 0.0) {
            CHECK_THAT(prev1 / e1, WithinAbs(2.0, 0.15));
            CHECK_THAT(prev2 / e2, WithinAbs(4.0, 0.3));
        }
        prev1 = e1;
        prev2 = e2;
    }
    REQUIRE_THROWS_AS(trotter_error(h, 1.0, 1, 3), Error);
}

TEST_CASE("Pauli sums are validated", "[hamiltonian]") {
    REQUIRE_THROWS_AS(trotter1(PauliSum{{{1.0, "X"}, {1.0, "ZZ"}}}, 1.0, 1), Error);
    REQUIRE_THROWS_AS(trotter1(PauliSum{{{Complex(1.0, 1.0), "X"}}}, 1.0, 1), Error);
    REQUIRE_THROWS_AS(trotter1(kXZ, 1.0, 0), Error);
}

TEST_CASE("Taylor truncation order", "[hamiltonian]") {
    for (double eps : {1e-3, 1e-8}) {
        const std::size_t k = taylor_default_order(2.0, 1.0, 2, eps);
        auto bound = [](std::size_t kk) { return std::pow(1.0, double(kk + 1)) / std::tgamma(double(kk + 2)); };
        CHECK(bound(k) <= eps);
        if (k > 0) CHECK(bound(k - 1) > eps);
    }
}

TEST_CASE("Taylor segments converge to the exponential", "[hamiltonian]") {
    const Matrix exact = ref::expm(Complex(0, -1.0) * dense(kXZ));
    double prev = 1e9;
    for (std::size_t k = 1; k <= 9; ++k) {
        const TaylorSimulation sim = taylor_sim({kXZ, 1.0, 2, k, 1e-6});
        // Independent partial sum of (-i H t / r)^j / j!.
        const Matrix step = Complex(0, -0.5) * dense(kXZ);
        Matrix term = Matrix::Identity(2, 2), seg = term;
        for (std::size_t j = 1; j <= k; ++j) {
            term = term * step / static_cast<double>(j);
            seg += term;
        }
        CHECK(test::max_diff(sim.segment, seg) < 1e-14);
        double beta = 0.0, fact = 1.0;
        for (std::size_t j = 0; j <= k; ++j) {
            beta += std::pow(1.0, double(j)) / fact;
            fact *= double(j + 1);
        }
        CHECK_THAT(sim.beta, WithinAbs(beta, 1e-14));
        CHECK(test::max_diff(taylor_operator(sim), seg * seg) < 1e-14);
        const double err = spectral(taylor_operator(sim) - exact);
        CHECK(err < prev);
        prev = err;
        CHECK(unitarity_defect(sim.encoding.unitary().matrix()) < 1e-12);
    }
    CHECK(prev < 1e-7);
}

TEST_CASE("Taylor apply postselects each segment", "[hamiltonian]") {
    const TaylorSimulation sim = taylor_sim({kXZ, 1.0, 3, 6, 1e-6});
    const auto psi = basis_embed("0");
    const auto out = taylor_apply(sim, psi);
    const Vector raw = taylor_operator(sim) * psi.amplitudes();
    CHECK(test::phase_aligned_diff(out.state.amplitudes(), raw.normalized()) < 1e-12);
    CHECK(out.success_prob > 0.0);
    CHECK(out.success_prob <= 1.0);
    const Vector exact = ref::expm(Complex(0, -1.0) * dense(kXZ)) * psi.amplitudes();
    CHECK(1.0 - std::norm(exact.dot(out.state.amplitudes())) < 1e-6);
}

TEST_CASE("Taylor order from eps", "[hamiltonian]") {
    const TaylorSimulation sim = taylor_sim({kXZ, 1.0, 4, std::nullopt, 1e-9});
    CHECK(sim.K == taylor_default_order(2.0, 1.0, 4, 1e-9));
}

TEST_CASE("QSP simulation of indefinite and definite Hamiltonians", "[hamiltonian]") {
    std::mt19937_64 rng(52);
    const Matrix h = test::random_hermitian(rng, 4);
    const auto psi = test::random_state(rng, 2);
    const QspSimulation sim = qsp_sim(block_encode_hermitian(h), 1.3, 1e-9, psi);
    CHECK(sim.shifted);
    const Vector exact = ref::expm(Complex(0, -1.3) * h) * psi.amplitudes();
    CHECK(test::max_diff(sim.state.amplitudes(), exact) < 1e-7);

    Matrix pd = Matrix::Zero(2, 2);
    pd(0, 0) = 0.2;
    pd(1, 1) = 0.9;
    const auto plus = StateVector::normalize(Vector::Ones(2));
    const QspSimulation def = qsp_sim(block_encode_hermitian(pd), 2.0, 1e-9, plus);
    CHECK_FALSE(def.shifted);
    CHECK(test::max_diff(def.state.amplitudes(), ref::expm(Complex(0, -2.0) * pd) * plus.amplitudes()) < 1e-7);
    CHECK(def.success_prob > 0.0);
}
