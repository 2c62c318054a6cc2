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

#include <set>

#include "qsci/circuit.hpp"
#include "qsci/error.hpp"
#include "qsci_ref/oracles.hpp"
#include "support.hpp"

using namespace qsci;
using Catch::Matchers::WithinAbs;

namespace {

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

const Matrix kX = mat2(0, 1, 1, 0);
const Matrix kY = mat2(0, Complex(0, -1), Complex(0, 1), 0);
const Matrix kZ = mat2(1, 0, 0, -1);
const Matrix kI2 = Matrix::Identity(2, 2);

/// Permutation matrix of a classical reversible map on basis indices.
Matrix permutation(std::size_t dim, const std::function<std::size_t(std::size_t)> &f) {
    Matrix p = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) p(static_cast<Eigen::Index>(f(i)), static_cast<Eigen::Index>(i)) = 1.0;
    return p;
}

} // namespace

TEST_CASE("fixed gates have their textbook matrices", "[gates]") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(test::max_diff(standard_gate("X").matrix(), kX) == 0.0);
    CHECK(test::max_diff(standard_gate("y").matrix(), kY) == 0.0);
    CHECK(test::max_diff(standard_gate("Z").matrix(), kZ) == 0.0);
    CHECK(test::max_diff(standard_gate("H").matrix(), mat2(r, r, r, -r)) < 1e-16);
    CHECK(test::max_diff(standard_gate("S").matrix(), mat2(1, 0, 0, Complex(0, 1))) < 1e-16);
    CHECK(test::max_diff(standard_gate("T").matrix(), mat2(1, 0, 0, std::polar(1.0, kPi / 4))) < 1e-16);
    CHECK(test::max_diff(standard_gate("Sdg").matrix(), standard_gate("S").matrix().adjoint()) < 1e-16);
    CHECK(test::max_diff(standard_gate("Tdg").matrix(), standard_gate("T").matrix().adjoint()) < 1e-16);
    CHECK(test::max_diff(standard_gate("CX").matrix(),
                         permutation(4, [](std::size_t i) { return i >= 2 ? i ^ 1U : i; })) == 0.0);
    CHECK(test::max_diff(standard_gate("SWAP").matrix(),
                         permutation(4, [](std::size_t i) { return ((i & 1U) << 1) | (i >> 1); })) == 0.0);
    CHECK(test::max_diff(standard_gate("Toffoli").matrix(),
                         permutation(8, [](std::size_t i) { return i >= 6 ? i ^ 1U : i; })) == 0.0);
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    CHECK(test::max_diff(standard_gate("CZ").matrix(), cz) == 0.0);
}

TEST_CASE("rotations are half-angle exponentials", "[gates]") {
    for (double theta : {0.3, -1.7, 2.0 * kPi / 3.0}) {
        const double p[] = {theta};
        CHECK(test::max_diff(standard_gate("Rx", p).matrix(), ref::expm(Complex(0, -theta / 2) * kX)) < 1e-14);
        CHECK(test::max_diff(standard_gate("Ry", p).matrix(), ref::expm(Complex(0, -theta / 2) * kY)) < 1e-14);
        CHECK(test::max_diff(standard_gate("RZ", p).matrix(), ref::expm(Complex(0, -theta / 2) * kZ)) < 1e-14);
        CHECK(test::max_diff(standard_gate("P", p).matrix(), mat2(1, 0, 0, std::polar(1.0, theta))) < 1e-15);
    }
}

TEST_CASE("gate construction errors", "[gates]") {
    REQUIRE_THROWS_AS(standard_gate("nope"), Error);
    REQUIRE_THROWS_AS(standard_gate("Rx"), Error);
    REQUIRE_THROWS_AS(GateMatrix(mat2(1, 1, 0, 1)), Error);
    REQUIRE_THROWS_AS(GateMatrix(Matrix::Identity(3, 3)), Error);
    CHECK(standard_gate_arity("rz") == 1);
    CHECK(standard_gate_arity("cx") == 0);
    CHECK(is_standard_gate("toffoli"));
    CHECK_FALSE(is_standard_gate("frob"));
}

TEST_CASE("gate powers match repeated products", "[gates]") {
    std::mt19937_64 rng(5);
    const GateMatrix u(test::random_unitary(rng, 4));
    Matrix expected = Matrix::Identity(4, 4);
    for (std::size_t p = 0; p <= 9; ++p) {
        CHECK(test::max_diff(u.power(p).matrix(), expected) < 1e-12);
        expected = expected * u.matrix();
    }
}

TEST_CASE("controlled gates are block diagonal", "[gates]") {
    const GateMatrix h = standard_gate("H");
    Matrix expected = Matrix::Identity(4, 4);
    expected.bottomRightCorner(2, 2) = h.matrix();
    CHECK(test::max_diff(controlled(h, 1).matrix(), expected) == 0.0);

    const int zero[] = {0};
    Matrix open = Matrix::Identity(4, 4);
    open.topLeftCorner(2, 2) = h.matrix();
    CHECK(test::max_diff(controlled(h, 1, zero).matrix(), open) == 0.0);

    const int states[] = {1, 0};
    const Matrix c2 = controlled(standard_gate("X"), 2, states).matrix();
    // Controls read "10" -> block starting at index 4.
    CHECK(test::max_diff(c2, permutation(8, [](std::size_t i) { return (i >> 1) == 2 ? i ^ 1U : i; })) == 0.0);
}

TEST_CASE("single-qubit ops act as Kronecker products", "[circuits]") {
    std::mt19937_64 rng(7);
    const auto psi = test::random_state(rng, 3);
    const double th[] = {0.9};
    const Matrix ry = standard_gate("Ry", th).matrix();
    for (std::size_t q = 0; q < 3; ++q) {
        const Matrix full = ref::kron(ref::kron(q == 0 ? ry : kI2, q == 1 ? ry : kI2), q == 2 ? ry : kI2);
        const auto out = apply(psi, make_op("Ry", {q}, {0.9}));
        CHECK(test::max_diff(out.amplitudes(), full * psi.amplitudes()) < 1e-14);
    }
}

TEST_CASE("two-qubit ops respect target order and controls", "[circuits]") {
    std::mt19937_64 rng(8);
    const auto psi = test::random_state(rng, 3);
    // CX with control 2, target 0: flips bit 2 (MSB) when bit 0 (LSB) is set.
    const Matrix cx20 = permutation(8, [](std::size_t i) { return (i & 1U) ? i ^ 4U : i; });
    CHECK(test::max_diff(apply(psi, make_op("CX", {2, 0})).amplitudes(), cx20 * psi.amplitudes()) < 1e-15);
    // X on qubit 1 controlled by qubit 0 reading 0.
    const Matrix open = permutation(8, [](std::size_t i) { return (i & 4U) ? i : i ^ 2U; });
    CHECK(test::max_diff(apply(psi, make_op("X", {1}, {}, {0}, {0})).amplitudes(), open * psi.amplitudes()) <
          1e-15);
}

TEST_CASE("random circuits agree with the entrywise oracle", "[circuits]") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const std::size_t n = 4;
    Circuit c(n);
    Matrix product = Matrix::Identity(16, 16);
    for (int step = 0; step < 40; ++step) {
        const std::size_t a = rng() % n, b = (a + 1 + rng() % (n - 1)) % n, e = (b + 1 + rng() % (n - 1)) % n;
        GateOp op = step % 4 == 0   ? make_op("CX", {a, b})
                    : step % 4 == 1 ? make_op("Rx", {a}, {angle(rng)}, {b}, {0})
                    : step % 4 == 2 ? make_unitary_op(GateMatrix(test::random_unitary(rng, 4)), {b, a})
                                    : make_op("H", {a});
        if (e != a && e != b && step % 4 == 0) op = make_op("Toffoli", {a, b, e});
        product = embedded_matrix(op, n) * product;
        c.add(op);
    }
    const auto psi = test::random_state(rng, n);
    CHECK(test::max_diff(run(c, psi).amplitudes(), product * psi.amplitudes()) < 1e-12);
    CHECK(test::max_diff(circuit_unitary(c), product) < 1e-12);
    CHECK(test::max_diff(circuit_unitary(inverse(c)) * product, Matrix::Identity(16, 16)) < 1e-12);
}

TEST_CASE("inverse flips fixed gate names and negates angles", "[circuits]") {
    Circuit c(2);
    c.add("S", {0}).add("T", {1}).add("Rz", {0}, {0.4}).add_global_phase(0.3);
    const Circuit inv = inverse(c);
    const auto &ops = inv.ops();
    REQUIRE(ops.size() == 3);
    CHECK(std::get<GateOp>(ops[0]).params[0] == -0.4);
    CHECK(std::get<GateOp>(ops[1]).name == "Tdg");
    CHECK(std::get<GateOp>(ops[2]).name == "Sdg");
    CHECK(inv.global_phase() == -0.3);
    CHECK(test::max_diff(circuit_unitary(inv) * circuit_unitary(c), Matrix::Identity(4, 4)) < 1e-14);
}

TEST_CASE("global phase multiplies the unitary", "[circuits]") {
    Circuit c(1);
    c.add_global_phase(0.7);
    CHECK(std::abs(circuit_unitary(c)(0, 0) - std::polar(1.0, 0.7)) < 1e-15);
}

TEST_CASE("compose places sub-circuits on mapped qubits", "[circuits]") {
    Circuit inner(2);
    inner.add("CX", {0, 1});
    Circuit outer(3);
    const std::size_t mapping[] = {2, 0};
    outer.compose(inner, mapping);
    const auto out = run(outer, basis_embed("001"));
    CHECK(out.probability(basis_index("101")) == 1.0);
    REQUIRE_THROWS_AS(outer.add("X", {3}), Error);
    REQUIRE_THROWS_AS(outer.add("CX", {1, 1}), Error);
}

TEST_CASE("run rejects measured circuits", "[circuits]") {
    Circuit c(1);
    c.add("H", {0}).measure_all();
    CHECK(c.has_measurements());
    CHECK(c.gate_count() == 1);
    REQUIRE_THROWS_AS(run(c, zero_state(1)), Error);
    CHECK_THAT(run_gates(c, zero_state(1)).probability(1), WithinAbs(0.5, 1e-15));
}

TEST_CASE("projective measurement", "[circuits]") {
    std::mt19937_64 rng(11);
    const auto psi = test::random_state(rng, 3);
    for (std::size_t q = 0; q < 3; ++q) {
        double p1 = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            if ((i >> (2 - q)) & 1U) p1 += psi.probability(i);
        }
        CHECK_THAT(outcome_probability(psi, q, 1), WithinAbs(p1, 1e-14));
        CHECK_THAT(outcome_probability(psi, q, 0) + outcome_probability(psi, q, 1), WithinAbs(1.0, 1e-14));

        const auto low = measure(psi, q, 0.0);
        CHECK(low.outcome == 0);
        CHECK_THAT(low.prob, WithinAbs(1.0 - p1, 1e-14));
        const auto high = measure(psi, q, std::nextafter(1.0, 0.0));
        CHECK(high.outcome == 1);
        const auto post = project(psi, q, 1);
        CHECK(test::max_diff(high.post_state.amplitudes(), post.amplitudes()) < 1e-15);
        CHECK_THAT(outcome_probability(post, q, 1), WithinAbs(1.0, 1e-14));
    }
    const auto a = measure(psi, 1, std::uint64_t{42});
    const auto b = measure(psi, 1, std::uint64_t{42});
    CHECK(a.outcome == b.outcome);
}

TEST_CASE("sampling is deterministic and thread-count independent", "[circuits]") {
    Circuit c(3);
    c.add("H", {0}).add("Ry", {1}, {1.1}).add("CX", {0, 2}).measure_all();
    const auto one = sample(c, 4000, 99);
    const auto four = sample(c, 4000, 99, {.threads = 4});
    CHECK(one.counts == four.counts);
    CHECK(sample(c, 4000, 99).counts == one.counts);
    CHECK(sample(c, 4000, 100).counts != one.counts);
    std::size_t total = 0;
    for (const auto &[k, v] : one.counts) total += v;
    CHECK(total == 4000);
}

TEST_CASE("sample frequencies follow the Born rule", "[circuits]") {
    Circuit c(2);
    c.add("Ry", {0}, {2.0 * std::asin(std::sqrt(0.3))}).measure_all();
    const std::size_t shots = 40000;
    const auto h = sample(c, shots, 3);
    const double f = static_cast<double>(h.counts.at("10")) / shots;
    CHECK(std::abs(f - 0.3) < 4.0 * std::sqrt(0.3 * 0.7 / shots));
}

TEST_CASE("measurement marker order sets key order", "[circuits]") {
    Circuit c(3);
    c.add("X", {2}).measure({2, 0});
    const auto h = sample(c, 10, 1);
    REQUIRE(h.counts.size() == 1);
    CHECK(h.counts.begin()->first == "10");
    const std::size_t qubits[] = {2, 0};
    const auto dist = marginal_distribution(basis_embed("001"), qubits);
    CHECK(dist.at("10") == 1.0);
}

TEST_CASE("marginals sum the right amplitudes", "[circuits]") {
    std::mt19937_64 rng(12);
    const auto psi = test::random_state(rng, 3);
    const std::size_t qubits[] = {0, 2};
    const auto dist = marginal_distribution(psi, qubits);
    for (std::size_t i = 0; i < 8; ++i) {
        const std::string key{static_cast<char>('0' + ((i >> 2) & 1U)), static_cast<char>('0' + (i & 1U))};
        CHECK(dist.count(key) == 1);
    }
    double p = 0.0;
    for (std::size_t i : {1U, 3U}) p += psi.probability(i);
    CHECK_THAT(dist.at("01"), WithinAbs(p, 1e-15));
}

TEST_CASE("endianness conversion reverses keys and indices", "[circuits]") {
    Histogram h;
    h.shots = 3;
    h.counts = {{"001", 2}, {"110", 1}};
    const auto little = endianness_convert(h, 3);
    CHECK(little.counts.at("100") == 2);
    CHECK(little.counts.at("011") == 1);
    CHECK(little.bit_order == "little-endian");
    CHECK(endianness_convert(endianness_convert(h, 3), 3).counts == h.counts);
    CHECK(endianness_convert(std::size_t{1}, 3) == 4);
    CHECK(endianness_convert(std::size_t{6}, 3) == 3);
}

TEST_CASE("shot uniforms are in range and spread", "[circuits]") {
    std::set<double> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = shot_uniform(7, i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        seen.insert(u);
    }
    CHECK(seen.size() == 1000);
}
