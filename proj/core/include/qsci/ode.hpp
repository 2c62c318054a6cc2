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

#include "qsci/solvers.hpp"

namespace qsci {

/// dx/dt = A x + b on [0, T], x(0) = x0, discretized by m truncated-Taylor
/// steps of order k with p trailing copies of x_m.
struct OdeProblem {
    Matrix A;
    Vector b;
    Vector x0;
    double T = 1.0;
    std::size_t k = 4;
    std::size_t m = 10;
    std::size_t p = 10;
    double eps = 1e-4;            ///< accuracy of the inverse polynomial
    std::optional<double> kappa;  ///< bound for the clock matrix; computed when absent

    [[nodiscard]] double h() const { return T / static_cast<double>(m); }
};

struct ClockBlock {
    std::string label; ///< "x_j", "y_j_l" (Taylor term l of step j) or "copy_i"
    std::size_t offset;
    std::size_t length;
};

/**
 * Block system L z = rhs. Per step j the unknowns are [x_j, y_1 .. y_k] with
 *   y_1 - A h x_j = h b,   y_l - (A h / l) y_(l-1) = 0,
 * and x_(j+1) - x_j - sum_l y_l = 0. The first row pins x_0 and the final
 * p - 1 rows copy x_m forward.
 */
struct ClockSystem {
    Matrix L;
    Vector rhs;
    std::vector<ClockBlock> index_map;
    std::size_t block_dim = 0;
    ExtractionWindow final_window; ///< the p blocks holding x_m
};

[[nodiscard]] ClockSystem ode_clock_build(const OdeProblem &problem);

/// x_0 .. x_m by direct truncated-Taylor stepping.
[[nodiscard]] std::vector<Vector> taylor_stepping(const OdeProblem &problem);

/// x_0 .. x_m read from a dense classical solve of the clock system.
[[nodiscard]] std::vector<Vector> clock_back_substitute(const ClockSystem &system);

struct OdeReport {
    SolveReport linear;          ///< report of the underlying linear solve
    Vector x_final;              ///< normalized x_m
    double clock_prob = 0.0;     ///< weight of the final-copy window
    double success_prob = 0.0;   ///< linear success times clock_prob
    std::vector<std::string> warnings;
};

/// Solves the clock system with qlsa_chebyshev and postselects the final window.
[[nodiscard]] OdeReport ode_solve(const OdeProblem &problem);

} // namespace qsci
