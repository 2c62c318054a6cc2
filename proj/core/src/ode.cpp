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

#include "qsci/ode.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qsci/error.hpp"

namespace qsci {

namespace {

void validate(const OdeProblem &p) {
    require(p.A.rows() == p.A.cols() && p.A.rows() > 0, "ode: A must be square");
    require(p.b.size() == p.A.rows() && p.x0.size() == p.A.rows(), "ode: b and x0 must match A");
    require(p.k >= 1 && p.m >= 1 && p.p >= 1, "ode: k, m and p must be at least 1");
    require(std::isfinite(p.T) && p.T > 0.0, "ode: T must be positive");
}

} // namespace

ClockSystem ode_clock_build(const OdeProblem &problem) {
    validate(problem);
    const Eigen::Index d = problem.A.rows();
    const std::size_t k = problem.k, m = problem.m, p = problem.p;
    const std::size_t blocks = m * (k + 1) + p;
    const auto total = static_cast<Eigen::Index>(blocks) * d;
    const double h = problem.h();
    const Matrix ah = problem.A * h;
    const Matrix id = Matrix::Identity(d, d);

    ClockSystem sys;
    sys.block_dim = static_cast<std::size_t>(d);
    sys.L = Matrix::Zero(total, total);
    sys.rhs = Vector::Zero(total);
    auto at = [&](std::size_t block) { return static_cast<Eigen::Index>(block) * d; };
    auto x_block = [&](std::size_t j) { return j * (k + 1); };

    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t xb = x_block(j);
        sys.index_map.push_back({"x_" + std::to_string(j), static_cast<std::size_t>(at(xb)), sys.block_dim});
        sys.L.block(at(xb), at(xb), d, d) = id;
        if (j == 0) {
            sys.rhs.segment(0, d) = problem.x0;
        } else {
            const std::size_t prev = x_block(j - 1);
            for (std::size_t l = 0; l <= k; ++l) {
                sys.L.block(at(xb), at(prev + l), d, d) = -id;
            }
        }
        for (std::size_t l = 1; l <= k; ++l) {
            const std::size_t yb = xb + l;
            sys.index_map.push_back({"y_" + std::to_string(j) + "_" + std::to_string(l),
                                     static_cast<std::size_t>(at(yb)), sys.block_dim});
            sys.L.block(at(yb), at(yb), d, d) = id;
            if (l == 1) {
                sys.L.block(at(yb), at(xb), d, d) = -ah;
                sys.rhs.segment(at(yb), d) = h * problem.b;
            } else {
                sys.L.block(at(yb), at(yb - 1), d, d) = -ah / static_cast<double>(l);
            }
        }
    }
    // x_m, then p - 1 copies of it.
    const std::size_t final_block = x_block(m);
    const std::size_t last_step = x_block(m - 1);
    sys.index_map.push_back({"x_" + std::to_string(m), static_cast<std::size_t>(at(final_block)), sys.block_dim});
    sys.L.block(at(final_block), at(final_block), d, d) = id;
    for (std::size_t l = 0; l <= k; ++l) {
        sys.L.block(at(final_block), at(last_step + l), d, d) = -id;
    }
    for (std::size_t c = 1; c < p; ++c) {
        const std::size_t cb = final_block + c;
        sys.index_map.push_back({"copy_" + std::to_string(c), static_cast<std::size_t>(at(cb)), sys.block_dim});
        sys.L.block(at(cb), at(cb), d, d) = id;
        sys.L.block(at(cb), at(cb - 1), d, d) = -id;
    }
    sys.final_window = {static_cast<std::size_t>(at(final_block)), p * sys.block_dim};
    return sys;
}

std::vector<Vector> taylor_stepping(const OdeProblem &problem) {
    validate(problem);
    const double h = problem.h();
    const Matrix ah = problem.A * h;
    std::vector<Vector> xs{problem.x0};
    for (std::size_t j = 0; j < problem.m; ++j) {
        const Vector &x = xs.back();
        Vector y = ah * x + h * problem.b;
        Vector next = x + y;
        for (std::size_t l = 2; l <= problem.k; ++l) {
            y = (ah / static_cast<double>(l)) * y;
            next += y;
        }
        xs.push_back(std::move(next));
    }
    return xs;
}

std::vector<Vector> clock_back_substitute(const ClockSystem &system) {
    const Vector z = system.L.partialPivLu().solve(system.rhs);
    std::vector<Vector> xs;
    for (const auto &blk : system.index_map) {
        if (blk.label.rfind("x_", 0) == 0) {
            xs.push_back(z.segment(static_cast<Eigen::Index>(blk.offset), static_cast<Eigen::Index>(blk.length)));
        }
    }
    return xs;
}

OdeReport ode_solve(const OdeProblem &problem) {
    const ClockSystem sys = ode_clock_build(problem);
    OdeReport out;
    const Eigen::ComplexEigenSolver<Matrix> eig(problem.A, false);
    if (eig.eigenvalues().real().maxCoeff() > 1e-12) {
        out.warnings.push_back("A has eigenvalues with positive real part; the solution may grow");
    }
    LinearSystemProblem lin;
    lin.A = sys.L;
    lin.b = sys.rhs;
    lin.eps = problem.eps;
    lin.kappa = problem.kappa ? *problem.kappa : 0.0;
    out.linear = qlsa_chebyshev(lin);

    const Vector &z = out.linear.solution;
    const auto d = static_cast<Eigen::Index>(sys.block_dim);
    const Vector window = z.segment(static_cast<Eigen::Index>(sys.final_window.offset),
                                    static_cast<Eigen::Index>(sys.final_window.length));
    out.clock_prob = window.squaredNorm();
    if (out.clock_prob < 1e-12) {
        std::ostringstream os;
        os << "ode: clock postselection probability " << out.clock_prob << " is below 1e-12";
        fail(ErrorKind::kPostselection, os.str());
    }
    // Every copy holds x_m; after measuring the clock in the window any one is read.
    Vector xm = Vector::Zero(d);
    for (std::size_t c = 0; c < problem.p; ++c) {
        xm += window.segment(static_cast<Eigen::Index>(c) * d, d);
    }
    out.x_final = xm / xm.norm();
    out.success_prob = out.linear.success_prob * out.clock_prob;
    out.warnings.insert(out.warnings.end(), out.linear.warnings.begin(), out.linear.warnings.end());
    return out;
}

} // namespace qsci
