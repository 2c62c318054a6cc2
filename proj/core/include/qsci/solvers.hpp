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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsci/polynomial.hpp"

namespace qsci {

/// A x = b with a bound on the condition number of A.
struct LinearSystemProblem {
    Matrix A;
    Vector b;
    double kappa = 0.0;            ///< bound on sigma_max / sigma_min; <= 0 means compute it
    double eps = 1e-3;             ///< target relative accuracy of the polynomial
    std::optional<double> alpha;   ///< bound on ||A||_2; the spectral norm when absent
};

struct ExtractionWindow {
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct SolveReport {
    std::string route;
    StateVector solution_state = zero_state(1); ///< full postselected system register
    Vector solution;               ///< normalized content of the extraction window
    double success_prob = 0.0;
    std::size_t degree_or_bits = 0;
    ExtractionWindow window;
    double window_norm2 = 0.0;     ///< weight of solution_state inside the window
    double complement_norm2 = 0.0; ///< weight outside it
    double kappa_used = 0.0;
    std::optional<double> residual; ///< ||c A x - b|| / ||b|| for the best scalar c
    std::vector<std::string> warnings;
};

struct SolveOptions {
    bool check_kappa = true;   ///< compare the supplied bound with the actual spectrum
    bool residual = true;      ///< fill SolveReport::residual
};

/// Polynomial (Chebyshev/LCU) solver: dilate if needed, pad, encode, apply
/// an odd approximation of 1/x, postselect, extract.
[[nodiscard]] SolveReport qlsa_chebyshev(const LinearSystemProblem &problem, SolveOptions options = {});

/// Same pipeline with the polynomial realized by a phase sequence (real part).
[[nodiscard]] SolveReport qlsa_qsp(const LinearSystemProblem &problem, const PhaseSequence &phases,
                                   SolveOptions options = {});

/// Positive-definite route: B = I - A / lambda_max and a fit of 1/(1 - y).
[[nodiscard]] SolveReport qlsa_pd(const LinearSystemProblem &problem, SolveOptions options = {});

struct HhlOptions {
    std::size_t clock_bits = 4;
    std::optional<double> C;   ///< rotation constant; 1/kappa by default
    std::optional<double> t0;  ///< evolution time of U = exp(i A t0)
};

/**
 * Phase-estimation solver on registers [ancilla, clock, system]. After the
 * eigenvalue-conditioned rotation and uncomputation the ancilla is kept at
 * |1> and the clock at |0...0>.
 */
[[nodiscard]] SolveReport hhl(const LinearSystemProblem &problem, HhlOptions options = {},
                              SolveOptions solve_options = {});

/// Default HHL time: maps the largest eigenvalue to the top clock value.
[[nodiscard]] double hhl_default_t0(double lambda_max, std::size_t clock_bits);

/// |<a|b>|^2 for unit vectors.
[[nodiscard]] double vector_fidelity(const Vector &a, const Vector &b);

} // namespace qsci
