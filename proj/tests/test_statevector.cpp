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
#include "qsci/statevector.hpp"
#include "qsci_ref/oracles.hpp"
#include "support.hpp"

using namespace qsci;
using Catch::Matchers::WithinAbs;

TEST_CASE("from_amplitudes checks length and norm", "[statevector]") {
    REQUIRE_THROWS_AS(StateVector::from_amplitudes(Vector::Ones(3).normalized()), Error);
    REQUIRE_THROWS_AS(StateVector::from_amplitudes(Vector::Ones(4)), Error);
    const auto s = StateVector::from_amplitudes(Vector::Ones(4) / 2.0);
    CHECK(s.num_qubits() == 2);
    CHECK(s.dimension() == 4);
}

TEST_CASE("normalize rejects the zero vector", "[statevector]") {
    REQUIRE_THROWS_AS(StateVector::normalize(Vector::Zero(2)), Error);
    const auto s = StateVector::normalize(Vector::Constant(2, Complex(0, 3)));
    CHECK_THAT(s.norm(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("amplitude encoding pads and normalizes", "[statevector]") {
    const std::vector<double> v{3.0, 4.0};
    const auto s = amplitude_encode(std::span<const double>(v));
    CHECK_THAT(s[0].real(), WithinAbs(0.6, 1e-15));
    CHECK_THAT(s[1].real(), WithinAbs(0.8, 1e-15));

    const std::vector<double> odd{1.0, 1.0, 1.0};
    const auto p = amplitude_encode(std::span<const double>(odd));
    REQUIRE(p.dimension() == 4);
    CHECK(p[3] == Complex(0.0));
    CHECK_THAT(p.probability(0), WithinAbs(1.0 / 3.0, 1e-15));
}

TEST_CASE("basis labels are big-endian", "[statevector]") {
    CHECK(basis_label(3, 3) == "011");
    CHECK(basis_label(4, 3) == "100");
    CHECK(basis_index("110") == 6);
    for (std::size_t i = 0; i < 16; ++i) {
        CHECK(basis_index(basis_label(i, 4)) == i);
    }
    const auto s = basis_embed("011");
    CHECK(s.probability(3) == 1.0);
    REQUIRE_THROWS_AS(basis_embed("01a"), Error);
}

TEST_CASE("kron of states matches the explicit product", "[statevector]") {
    std::mt19937_64 rng(1);
    const auto a = test::random_state(rng, 1);
    const auto b = test::random_state(rng, 2);
    const Vector expected = ref::kron(Matrix(a.amplitudes()), Matrix(b.amplitudes())).col(0);
    CHECK(test::max_diff(kron(a, b).amplitudes(), expected) < 1e-15);
}

TEST_CASE("inner product and fidelity", "[statevector]") {
    std::mt19937_64 rng(2);
    const auto a = test::random_state(rng, 3);
    const auto b = test::random_state(rng, 3);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < 8; ++i) sum += std::conj(a[i]) * b[i];
    CHECK(std::abs(inner(a, b) - sum) < 1e-15);
    CHECK_THAT(fidelity(a, b), WithinAbs(std::norm(sum), 1e-15));
    CHECK_THAT(fidelity(a, a), WithinAbs(1.0, 1e-14));
}

TEST_CASE("Schmidt rank separates product and entangled states", "[statevector]") {
    std::mt19937_64 rng(3);
    const auto product = kron(test::random_state(rng, 1), test::random_state(rng, 2));
    CHECK(schmidt_rank(product, 1) == 1);
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    CHECK(schmidt_rank(StateVector::from_amplitudes(bell), 1) == 2);
}

TEST_CASE("postselection keeps the leading-ancilla slice", "[statevector]") {
    Vector full(8);
    full << 1, 2, 0, 0, 3, 4, 0, 0;
    full /= full.norm();
    const auto post = postselect_leading(full, 1, 1);
    CHECK_THAT(post.success_prob, WithinAbs(25.0 / 30.0, 1e-15));
    CHECK_THAT(post.state[0].real(), WithinAbs(0.6, 1e-15));
    CHECK_THAT(post.state[1].real(), WithinAbs(0.8, 1e-15));

    const auto both = postselect_leading(full, 2, 0);
    CHECK_THAT(both.success_prob, WithinAbs(5.0 / 30.0, 1e-15));

    try {
        (void)postselect_leading(full, 2, 1);
        FAIL("expected a postselection error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::kPostselection);
    }
}
