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
#include "qsci/io.hpp"
#include "qsci/polynomial.hpp"
#include "qsci_ref/oracles.hpp"
#include "support.hpp"

using namespace qsci;
using Catch::Matchers::WithinAbs;

namespace {

double series_at(const std::vector<double> &c, double x) {
    double total = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) total += c[k] * std::cos(static_cast<double>(k) * std::acos(x));
    return total;
}

/// sum_k c_k T_k(H) through the eigendecomposition of H.
Matrix series_of_matrix(const std::vector<double> &c, const Matrix &h) {
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    RealVector vals = eig.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) vals(i) = series_at(c, std::clamp(vals(i), -1.0, 1.0));
    return eig.eigenvectors() * vals.cast<Complex>().asDiagonal() * eig.eigenvectors().adjoint();
}

Matrix diagonal(std::initializer_list<double> values) {
    Matrix d = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) d(i, i) = v, ++i;
    return d;
}

} // namespace

TEST_CASE("series evaluation", "[polynomial]") {
    ChebyshevSeries s;
    s.coefficients = {0.3, -0.2, 0.5, 0.1};
    for (double x : {-1.0, -0.4, 0.0, 0.77, 1.0}) {
        CHECK_THAT(s(x), WithinAbs(series_at(s.coefficients, x), 1e-15));
    }
    CHECK_THAT(s.one_norm(), WithinAbs(1.1, 1e-15));
    CHECK(s.degree() == 3);
}

TEST_CASE("parity detection", "[polynomial]") {
    CHECK(detect_parity({0.0, 1.0, 0.0, 2.0}) == Parity::kOdd);
    CHECK(detect_parity({1.0, 0.0, 2.0}) == Parity::kEven);
    CHECK(detect_parity({1.0, 1.0}) == Parity::kMixed);
    CHECK(detect_parity({1.0, 1e-20}, 1e-15) == Parity::kEven);
    CHECK(parse_parity("odd") == Parity::kOdd);
    CHECK(to_string(Parity::kEven) == "even");
    REQUIRE_THROWS_AS(parse_parity("sideways"), Error);
}

TEST_CASE("max_abs finds interior peaks", "[polynomial]") {
    ChebyshevSeries s;
    s.coefficients = {0.0, 0.3, 0.0, -0.6};
    double grid = 0.0;
    for (int i = 0; i <= 200000; ++i) grid = std::max(grid, std::abs(s(-1.0 + i / 100000.0)));
    CHECK_THAT(max_abs(s), WithinAbs(grid, 1e-9));
    CHECK(max_abs(s) >= grid);
}

TEST_CASE("qubitization powers are Chebyshev polynomials", "[polynomial]") {
    std::mt19937_64 rng(41);
    const Matrix h = test::random_hermitian(rng, 4);
    const BlockEncoding be = block_encode_hermitian(h);
    const Matrix scaled = h / be.alpha();
    for (std::size_t k = 0; k <= 12; ++k) {
        std::vector<double> c(k + 1, 0.0);
        c[k] = 1.0;
        const BlockEncoding pk = qubitization_power(be, k);
        CHECK(unitarity_defect(pk.unitary().matrix()) < 1e-11);
        CHECK(test::max_diff(pk.block(), series_of_matrix(c, scaled)) < 1e-10);
        CHECK(test::max_diff(singular_value_chebyshev(scaled, k), series_of_matrix(c, scaled)) < 1e-10);
    }
}

TEST_CASE("qubitization of a general matrix acts on singular values", "[polynomial]") {
    std::mt19937_64 rng(42);
    const Matrix a = test::random_matrix(rng, 4);
    const BlockEncoding be = block_encode_general(a);
    const Matrix m = a / be.alpha();
    const Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealVector s = svd.singularValues();
    for (std::size_t k : {1U, 2U, 3U, 6U}) {
        RealVector tk(s.size());
        for (Eigen::Index i = 0; i < s.size(); ++i) tk(i) = std::cos(static_cast<double>(k) * std::acos(s(i)));
        const Matrix &right = k % 2 ? svd.matrixV() : svd.matrixU();
        const Matrix want = svd.matrixU() * tk.cast<Complex>().asDiagonal() * right.adjoint();
        CHECK(test::max_diff(qubitization_power(be, k).block(), want) < 1e-10);
    }
}

TEST_CASE("Chebyshev action and success probability", "[polynomial]") {
    std::mt19937_64 rng(43);
    const Matrix h = test::random_hermitian(rng, 8);
    const BlockEncoding be = block_encode_hermitian(h);
    ChebyshevSeries s;
    s.coefficients = {0.1, 0.0, -0.3, 0.0, 0.25, 0.0, 0.2};
    s.parity = Parity::kEven;
    const Matrix want = series_of_matrix(s.coefficients, h / be.alpha());
    const auto psi = test::random_state(rng, 3);
    CHECK(test::max_diff(chebyshev_action(be, s, psi.amplitudes()), want * psi.amplitudes()) < 1e-12);
    CHECK(test::max_diff(chebyshev_matrix(be, s), want) < 1e-12);
    const auto post = chebyshev_apply(be, s, psi);
    const double lambda = s.one_norm();
    CHECK_THAT(post.success_prob, WithinAbs((want * psi.amplitudes()).squaredNorm() / (lambda * lambda), 1e-12));
    CHECK(test::phase_aligned_diff(post.state.amplitudes(), (want * psi.amplitudes()).normalized()) < 1e-12);
}

TEST_CASE("Chebyshev apply refuses series above one", "[polynomial]") {
    const BlockEncoding be = block_encode_hermitian(diagonal({0.5, -0.5}), 1.0);
    ChebyshevSeries s;
    s.coefficients = {0.0, 1.5};
    REQUIRE_THROWS_AS(chebyshev_apply(be, s, basis_embed("0")), Error);
}

TEST_CASE("QSP response with zero phases is T_d", "[polynomial]") {
    for (std::size_t d = 1; d <= 6; ++d) {
        const std::vector<double> phases(d + 1, 0.0);
        for (double a : {-0.9, 0.1, 0.5}) {
            const Complex r = qsp_response(phases, a);
            CHECK_THAT(r.real(), WithinAbs(std::cos(static_cast<double>(d) * std::acos(a)), 1e-14));
            CHECK_THAT(r.real(), WithinAbs(ref::qsp_real_response(phases, a), 1e-15));
        }
    }
}

TEST_CASE("QSP sequence realizes the fitted inverse polynomial", "[polynomial]") {
    const PhaseSequence phases = io::phases_from_json(io::read_json(std::string(QSCI_DATA_DIR) +
                                                                    "/inverse_k4_phases.json"));
    const ChebyshevSeries target = inverse_coeffs(phases.kappa, phases.eps);
    REQUIRE(target.degree() == phases.degree());
    const std::vector<double> xs{-0.9, -0.3, 0.25, 0.6, 1.0};
    const BlockEncoding be = block_encode_hermitian(diagonal({-0.9, -0.3, 0.25, 0.6}), 1.0);
    for (std::size_t i = 0; i < 4; ++i) {
        Vector e = Vector::Zero(4);
        e(static_cast<Eigen::Index>(i)) = 1.0;
        const Vector out = qsp_action(be, phases, e, {.extract_real = true});
        CHECK_THAT(out(static_cast<Eigen::Index>(i)).real(), WithinAbs(0.5 * target(xs[i]), 1e-10));
        CHECK_THAT(ref::qsp_real_response(phases.phases, xs[i]), WithinAbs(0.5 * target(xs[i]), 1e-10));
    }
}

TEST_CASE("QSP repeated sequence with zero phases gives T_d", "[polynomial]") {
    const BlockEncoding be = block_encode_hermitian(diagonal({0.3, -0.7}), 1.0);
    PhaseSequence p;
    p.phases.assign(4, 0.0);
    p.parity = Parity::kOdd;
    const Vector out = qsp_action(be, p, Vector::Ones(2), {.sequence = QspSequence::kRepeated});
    CHECK(std::abs(out(0) - std::cos(3.0 * std::acos(0.3))) < 1e-12);
    CHECK(std::abs(out(1) - std::cos(3.0 * std::acos(-0.7))) < 1e-12);
}

TEST_CASE("QSP alternating sequence on a general encoding", "[polynomial]") {
    // Odd polynomials of a Hermitian matrix agree with its singular-value transform.
    const PhaseSequence phases = io::phases_from_json(io::read_json(std::string(QSCI_DATA_DIR) +
                                                                    "/inverse_k4_phases.json"));
    const ChebyshevSeries target = inverse_coeffs(phases.kappa, phases.eps);
    const std::vector<double> xs{0.5, -0.8};
    const BlockEncoding be = block_encode_general(diagonal({0.5, -0.8}), 1.0);
    const Vector out = qsp_action(be, phases, Vector::Ones(2), {.extract_real = true});
    for (Eigen::Index i = 0; i < 2; ++i) {
        CHECK_THAT(out(i).real(), WithinAbs(0.5 * target(xs[static_cast<std::size_t>(i)]), 1e-10));
    }
}

TEST_CASE("interpolation and parity-restricted fits", "[polynomial]") {
    const auto f = [](double x) { return std::exp(x); };
    const ChebyshevSeries s = chebyshev_interpolate(f, 16);
    for (double x = -1.0; x <= 1.0; x += 0.01) CHECK_THAT(s(x), WithinAbs(f(x), 1e-13));

    const auto g = [](double x) { return std::sin(3.0 * x); };
    const ChebyshevSeries odd = chebyshev_fit(g, {{-1.0, 1.0}}, 21, Parity::kOdd);
    CHECK(detect_parity(odd.coefficients) == Parity::kOdd);
    for (double x = -1.0; x <= 1.0; x += 0.01) CHECK_THAT(odd(x), WithinAbs(g(x), 1e-12));
}

TEST_CASE("inverse approximation meets its relative error bound", "[polynomial]") {
    for (auto [kappa, eps] : {std::pair{2.0, 1e-3}, std::pair{4.0, 1e-4}, std::pair{10.0, 1e-5}}) {
        const ChebyshevSeries s = inverse_coeffs(kappa, eps);
        CHECK(s.parity == Parity::kOdd);
        CHECK(detect_parity(s.coefficients) == Parity::kOdd);
        double worst = 0.0, peak = 0.0;
        for (int i = 0; i <= 20000; ++i) {
            const double x = 1.0 / kappa + (1.0 - 1.0 / kappa) * i / 20000.0;
            worst = std::max(worst, std::abs(series_at(s.coefficients, x) * x / s.scale - 1.0));
        }
        for (int i = 0; i <= 20000; ++i) peak = std::max(peak, std::abs(series_at(s.coefficients, -1.0 + i / 10000.0)));
        CHECK(worst <= eps);
        CHECK(peak <= 1.0 + 1e-9);
        CHECK_THAT(inverse_relative_error(s, kappa), WithinAbs(worst, 0.1 * eps));
    }
    CHECK(inverse_coeffs(2.0, 1e-3).degree() < inverse_coeffs(20.0, 1e-3).degree());
    REQUIRE_THROWS_AS(inverse_coeffs(0.5, 1e-3), Error);
    REQUIRE_THROWS_AS(inverse_coeffs(50.0, 1e-12, {.max_degree = 21}), Error);
}

TEST_CASE("shifted inverse approximation", "[polynomial]") {
    const double kappa = 5.0, eps = 1e-4;
    const ChebyshevSeries s = shifted_inverse_coeffs(kappa, eps);
    double worst = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double y = -1.0 + (2.0 - 1.0 / kappa) * i / 20000.0;
        worst = std::max(worst, std::abs(series_at(s.coefficients, y) * (1.0 - y) / s.scale - 1.0));
    }
    CHECK(worst <= eps);
    CHECK(max_abs(s) <= 1.0 + 1e-9);
    CHECK(shifted_inverse_relative_error(s, kappa) <= eps);
}

TEST_CASE("Jacobi-Anger series", "[polynomial]") {
    for (double t : {0.5, 3.0, 10.0}) {
        const double eps = 1e-8;
        const JacobiAngerSeries ja = jacobi_anger(t, eps);
        CHECK(detect_parity(ja.cos_series.coefficients) == Parity::kEven);
        CHECK(detect_parity(ja.sin_series.coefficients) == Parity::kOdd);
        CHECK_THAT(ja.cos_series.coefficients[0], WithinAbs(std::cyl_bessel_j(0.0, t) / (1 + eps / 4), 1e-15));
        for (double x = -1.0; x <= 1.0; x += 0.005) {
            CHECK_THAT(ja.cos_series(x), WithinAbs(std::cos(t * x) / (1 + eps / 4), eps));
            CHECK_THAT(ja.sin_series(x), WithinAbs(std::sin(t * x) / (1 + eps / 4), eps));
        }
        CHECK(ja.truncation >= static_cast<std::size_t>(t));
    }
}
