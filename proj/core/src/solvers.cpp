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

#include "qsci/solvers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qsci/error.hpp"
#include "qsci/hamiltonian.hpp"
#include "qsci/subroutines.hpp"

namespace qsci {

namespace {

void validate(const LinearSystemProblem &p) {
    require(p.A.rows() == p.A.cols() && p.A.rows() > 0, "linear system: A must be square");
    require(p.b.size() == p.A.rows(), "linear system: b does not match A");
    require(p.A.allFinite() && p.b.allFinite(), "linear system: entries must be finite");
    require(p.b.norm() > 0.0, "linear system: b must be nonzero");
    require(p.eps > 0.0 && p.eps < 1.0, "linear system: eps must lie in (0, 1)");
    require(!p.alpha || *p.alpha > 0.0, "linear system: alpha must be positive");
}

/// Hermitian system the polynomial routes act on.
struct Prepared {
    Matrix h;          ///< padded Hermitian matrix
    Vector rhs;        ///< padded right-hand side (unnormalized)
    ExtractionWindow window;
    double alpha;      ///< subnormalization of h
    double kappa_fit;  ///< spectrum of h/alpha lies in [1/kappa_fit, 1] in magnitude
    std::vector<std::string> warnings;
};

Prepared prepare(const LinearSystemProblem &p, const SolveOptions &options) {
    validate(p);
    Prepared out;
    const auto n = static_cast<std::size_t>(p.A.rows());
    Matrix h;
    Vector rhs;
    if (is_hermitian(p.A)) {
        h = p.A;
        rhs = p.b;
        out.window = {0, n};
    } else {
        const HermitianDilation dil = hermitian_dilate(p.A);
        h = dil.matrix;
        rhs = Vector::Zero(h.rows());
        rhs.head(p.b.size()) = p.b;
        out.window = {dil.solution_offset, n};
    }
    out.h = pad_matrix(h);
    out.rhs = pad_vector(rhs, static_cast<std::size_t>(out.h.rows()));

    const RealVector sv = singular_values(p.A);
    const double smax = sv.maxCoeff();
    const double smin = sv.minCoeff();
    require(smax > 0.0, "linear system: A is zero");
    const double actual = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    double kappa = p.kappa;
    if (kappa <= 0.0) {
        require(std::isfinite(actual), "linear system: A is singular");
        kappa = actual;
    } else if (options.check_kappa && actual > kappa * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "linear system: actual condition number " << actual << " exceeds the bound " << kappa;
        fail(ErrorKind::kInvalidInput, os.str());
    }
    out.alpha = p.alpha ? *p.alpha : smax;
    if (out.alpha < smax * (1.0 - 1e-12)) {
        std::ostringstream os;
        os << "linear system: alpha " << out.alpha << " is below ||A||_2 = " << smax;
        fail(ErrorKind::kInvalidInput, os.str());
    }
    // A looser alpha pushes the smallest scaled singular value below 1/kappa.
    out.kappa_fit = std::max(kappa * out.alpha / smax, 1.0 + 1e-6);
    return out;
}

SolveReport finish_report(std::string route, const LinearSystemProblem &p, Postselected post,
                          ExtractionWindow window, std::size_t degree, double kappa,
                          const SolveOptions &options) {
    SolveReport r;
    r.route = std::move(route);
    r.success_prob = post.success_prob;
    r.degree_or_bits = degree;
    r.window = window;
    r.kappa_used = kappa;
    const Vector &a = post.state.amplitudes();
    const Vector w = a.segment(static_cast<Eigen::Index>(window.offset), static_cast<Eigen::Index>(window.length));
    r.window_norm2 = w.squaredNorm();
    r.complement_norm2 = std::max(0.0, a.squaredNorm() - r.window_norm2);
    if (!(r.window_norm2 > 0.0)) {
        fail(ErrorKind::kPostselection, "solver: extraction window is empty");
    }
    r.solution = w / std::sqrt(r.window_norm2);
    r.solution_state = std::move(post.state);
    if (options.residual) {
        const Vector ax = p.A * r.solution;
        const Complex c = ax.dot(p.b) / ax.squaredNorm();
        r.residual = (c * ax - p.b).norm() / p.b.norm();
    }
    return r;
}

} // namespace

double vector_fidelity(const Vector &a, const Vector &b) {
    require(a.size() == b.size(), "fidelity: dimension mismatch");
    const double na = a.norm(), nb = b.norm();
    require(na > 0.0 && nb > 0.0, "fidelity: zero vector");
    return std::norm(a.dot(b)) / (na * na * nb * nb);
}

SolveReport qlsa_chebyshev(const LinearSystemProblem &problem, SolveOptions options) {
    Prepared prep = prepare(problem, options);
    const ChebyshevSeries series = inverse_coeffs(prep.kappa_fit, problem.eps);
    const BlockEncoding be = block_encode_hermitian(prep.h, prep.alpha);
    Postselected post = chebyshev_apply(be, series, amplitude_encode(prep.rhs));
    SolveReport r = finish_report("qlsa-cheb", problem, std::move(post), prep.window, series.degree(),
                                  prep.kappa_fit, options);
    r.warnings = std::move(prep.warnings);
    return r;
}

SolveReport qlsa_qsp(const LinearSystemProblem &problem, const PhaseSequence &phases, SolveOptions options) {
    std::string target = phases.target;
    std::transform(target.begin(), target.end(), target.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (target.find("inverse") == std::string::npos && target.find("1/x") == std::string::npos) {
        fail(ErrorKind::kInvalidInput,
             "qlsa-qsp: phase sequence targets '" + phases.target + "', not an inverse polynomial");
    }
    require(phases.parity == Parity::kOdd, "qlsa-qsp: an inverse polynomial must be odd");
    Prepared prep = prepare(problem, options);
    if (phases.kappa < prep.kappa_fit * (1.0 - 1e-9)) {
        std::ostringstream os;
        os << "qlsa-qsp: phases were computed for kappa " << phases.kappa << " but the system needs "
           << prep.kappa_fit;
        fail(ErrorKind::kInvalidInput, os.str());
    }
    const BlockEncoding be = block_encode_hermitian(prep.h, prep.alpha);
    Postselected post = qsp_apply(be, phases, amplitude_encode(prep.rhs), {.extract_real = true});
    SolveReport r = finish_report("qlsa-qsp", problem, std::move(post), prep.window, phases.degree(),
                                  prep.kappa_fit, options);
    r.warnings = std::move(prep.warnings);
    return r;
}

SolveReport qlsa_pd(const LinearSystemProblem &problem, SolveOptions options) {
    validate(problem);
    require(is_hermitian(problem.A), "qlsa-pd: A must be Hermitian positive definite");
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(problem.A, Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    require(lmin > 0.0, "qlsa-pd: A is not positive definite");
    Prepared prep = prepare(problem, options);

    // B = I - eta A has spectrum in [0, 1 - 1/kappa_fit].
    const double eta = 1.0 / prep.alpha;
    const auto n = problem.A.rows();
    Matrix b = Matrix::Identity(n, n) - eta * problem.A;
    const Matrix bp = pad_matrix(b);
    const ChebyshevSeries series = shifted_inverse_coeffs(prep.kappa_fit, problem.eps);
    const BlockEncoding be = block_encode_hermitian(bp, 1.0);
    Postselected post = chebyshev_apply(be, series, amplitude_encode(prep.rhs));
    SolveReport r = finish_report("qlsa-pd", problem, std::move(post), prep.window, series.degree(),
                                  prep.kappa_fit, options);
    if (lmax > prep.alpha * (1.0 + 1e-12)) {
        r.warnings.push_back("alpha is below the largest eigenvalue");
    }
    return r;
}

double hhl_default_t0(double lambda_max, std::size_t clock_bits) {
    require(lambda_max > 0.0, "hhl: largest eigenvalue must be positive");
    const double levels = std::ldexp(1.0, static_cast<int>(clock_bits));
    return 2.0 * kPi * (levels - 1.0) / (levels * lambda_max);
}

SolveReport hhl(const LinearSystemProblem &problem, HhlOptions options, SolveOptions solve_options) {
    validate(problem);
    require(is_hermitian(problem.A), "hhl: A must be Hermitian");
    require(options.clock_bits >= 1 && options.clock_bits <= 12, "hhl: clock bits must lie in 1..12");
    const Matrix a = pad_matrix(problem.A);
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(problem.A, Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = problem.alpha ? *problem.alpha : eig.eigenvalues().maxCoeff();
    require(lmin > 0.0, "hhl: eigenvalues must be positive");
    const double kappa = problem.kappa > 0.0 ? problem.kappa : lmax / lmin;

    const std::size_t m = options.clock_bits;
    const double t0 = options.t0 ? *options.t0 : hhl_default_t0(lmax, m);
    require(t0 > 0.0, "hhl: t0 must be positive");
    const std::size_t ns = exact_log2(static_cast<std::size_t>(a.rows()));
    const GateMatrix u = exact_unitary(a, -t0); // exp(+i A t0)

    // Clock and system live on qubits 1..m+ns; qubit 0 is the rotation ancilla.
    const Circuit qpe = phase_estimation_circuit(u, m);
    std::vector<std::size_t> shifted(m + ns);
    std::iota(shifted.begin(), shifted.end(), std::size_t{1});

    Circuit forward(1 + m + ns);
    forward.compose(qpe, shifted);
    const StateVector b_state = amplitude_encode(pad_vector(problem.b, static_cast<std::size_t>(a.rows())));
    const StateVector estimated = run(forward, kron(zero_state(1 + m), b_state));

    std::vector<std::size_t> clock(m);
    std::iota(clock.begin(), clock.end(), std::size_t{1});
    const auto dist = marginal_distribution(estimated, clock);
    const double levels = std::ldexp(1.0, static_cast<int>(m));
    auto estimate = [&](std::size_t y) { return 2.0 * kPi * static_cast<double>(y) / (levels * t0); };

    double c = options.C ? *options.C : lmax / kappa;
    if (!options.C) {
        for (const auto &[label, prob] : dist) {
            const std::size_t y = basis_index(label);
            if (y != 0 && prob > 1e-10) {
                c = std::min(c, estimate(y));
            }
        }
    }
    require(c > 0.0, "hhl: C must be positive");

    Circuit rotate(1 + m + ns);
    for (std::size_t y = 1; y < static_cast<std::size_t>(levels); ++y) {
        const double ratio = c / estimate(y);
        const auto it = dist.find(basis_label(y, m));
        const bool populated = it != dist.end() && it->second > 1e-10;
        if (ratio > 1.0 + 1e-12) {
            if (populated) {
                std::ostringstream os;
                os << "hhl: C = " << c << " exceeds the eigenvalue estimate " << estimate(y)
                   << " of a populated clock value";
                fail(ErrorKind::kInvalidInput, os.str());
            }
            continue;
        }
        std::vector<int> states(m);
        for (std::size_t bit = 0; bit < m; ++bit) {
            states[bit] = static_cast<int>((y >> (m - 1 - bit)) & 1U);
        }
        rotate.add("RY", {0}, {2.0 * std::asin(std::min(ratio, 1.0))}, clock, states);
    }
    Circuit uncompute(1 + m + ns);
    uncompute.compose(inverse(qpe), shifted);
    const StateVector final_state = run(uncompute, run(rotate, estimated));

    Postselected post = postselect_leading(final_state.amplitudes(), 1 + m, std::size_t{1} << m);
    const ExtractionWindow window{0, static_cast<std::size_t>(problem.A.rows())};
    return finish_report("hhl", problem, std::move(post), window, m, kappa, solve_options);
}

} // namespace qsci
