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

#include "qsci/pde.hpp"

#include <cmath>
#include <sstream>

#include "qsci/error.hpp"
#include "qsci/hamiltonian.hpp"

namespace qsci {

Matrix laplacian_1d(std::size_t n) {
    require(n >= 1, "laplacian_1d: n must be positive");
    const auto s = static_cast<Eigen::Index>(n);
    Matrix l = Matrix::Zero(s, s);
    for (Eigen::Index i = 0; i < s; ++i) {
        l(i, i) = 2.0;
        if (i + 1 < s) {
            l(i, i + 1) = l(i + 1, i) = -1.0;
        }
    }
    return l;
}

Matrix kron_sum(const Matrix &l, std::size_t d) {
    require(l.rows() == l.cols() && l.rows() > 0, "kron_sum: L must be square");
    require(d >= 1, "kron_sum: d must be at least 1");
    const Eigen::Index n = l.rows();
    const Matrix id = Matrix::Identity(n, n);
    Eigen::Index total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= n;
    }
    Matrix out = Matrix::Zero(total, total);
    for (std::size_t pos = 0; pos < d; ++pos) {
        Matrix term = Matrix::Identity(1, 1);
        for (std::size_t i = 0; i < d; ++i) {
            term = kron(term, i == pos ? l : id);
        }
        out += term;
    }
    return out;
}

GateMatrix kron_sum_exp(const Matrix &l, std::size_t d, double t) {
    require(d >= 1, "kron_sum_exp: d must be at least 1");
    require(is_hermitian(l), "kron_sum_exp: L must be Hermitian");
    const Matrix factor = hermitian_function(l, [t](double x) { return std::polar(1.0, x * t); });
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t i = 0; i < d; ++i) {
        out = kron(out, factor);
    }
    // Non-power-of-two grids act trivially on the padding.
    const Eigen::Index core = out.rows();
    if (!is_power_of_two(static_cast<std::size_t>(core))) {
        out = pad_matrix(out);
        for (Eigen::Index i = core; i < out.rows(); ++i) {
            out(i, i) = 1.0;
        }
    }
    return GateMatrix(std::move(out));
}

Matrix difference_matrix(std::size_t n) {
    require(n >= 1, "difference_matrix: n must be at least 1");
    const auto s = static_cast<Eigen::Index>(n);
    Matrix b = Matrix::Zero(s, s + 1);
    for (Eigen::Index i = 0; i < s; ++i) {
        b(i, i) = 1.0;
        b(i, i + 1) = -1.0;
    }
    return b;
}

WaveGenerator wave_generator(std::size_t n, double h) {
    require(h > 0.0, "wave_generator: h must be positive");
    const Matrix b = difference_matrix(n);
    const double residual = (b * b.adjoint() - laplacian_1d(n)).cwiseAbs().maxCoeff();
    if (residual > 1e-10) {
        std::ostringstream os;
        os << "wave_generator: factorization residual " << residual;
        fail(ErrorKind::kTolerance, os.str());
    }
    const auto rows = b.rows(), cols = b.cols();
    Matrix gen = Matrix::Zero(rows + cols, rows + cols);
    gen.topRightCorner(rows, cols) = b / h;
    gen.bottomLeftCorner(cols, rows) = b.adjoint() / h;
    return {std::move(gen), b, h, n};
}

WaveLift wave_lift(const Matrix &a, double c, const Vector &b) {
    require(a.rows() == a.cols() && a.rows() > 0, "wave_lift: A must be square");
    require(b.size() == a.rows(), "wave_lift: b does not match A");
    const Eigen::Index n = a.rows();
    WaveLift out;
    out.G = Matrix::Zero(2 * n, 2 * n);
    out.G.topRightCorner(n, n) = Matrix::Identity(n, n);
    out.G.bottomLeftCorner(n, n) = a + c * Matrix::Identity(n, n);
    out.f = Vector::Zero(2 * n);
    out.f.tail(n) = b;
    return out;
}

Vector wave_evolve(const WaveGenerator &gen, const Vector &initial, double t) {
    require(initial.size() == gen.H.rows(), "wave_evolve: state does not match the generator");
    return hermitian_function(gen.H, [t](double lambda) { return std::polar(1.0, -lambda * t); }) * initial;
}

LinearSystemProblem poisson_problem(std::size_t n, std::size_t d, const Vector &f, double eps) {
    LinearSystemProblem p;
    p.A = kron_sum(laplacian_1d(n), d);
    require(f.size() == p.A.rows(), "poisson: right-hand side has the wrong length");
    p.b = f;
    p.eps = eps;
    return p;
}

} // namespace qsci
