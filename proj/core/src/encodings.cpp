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

#include "qsci/encodings.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qsci/error.hpp"
#include "qsci/subroutines.hpp"

namespace qsci {

namespace {

constexpr double kNormBoundTol = 1e-10;

/// Checks the spectral bound and clips values into [-1, 1].
void clip_unit(RealVector &values, const char *what) {
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (std::abs(values(i)) > 1.0 + kNormBoundTol) {
            std::ostringstream os;
            os << what << ": ||A/alpha||_2 = " << std::abs(values(i)) << " exceeds 1";
            fail(ErrorKind::kInvalidInput, os.str());
        }
        values(i) = std::clamp(values(i), -1.0, 1.0);
    }
}

double resolve_alpha(const Matrix &a, std::optional<double> alpha) {
    const double value = alpha ? *alpha : spectral_norm(a);
    require(std::isfinite(value) && value > 0.0, "block encoding: alpha must be positive");
    return value;
}

} // namespace

Matrix pad_matrix(const Matrix &m) {
    require(m.size() > 0, "pad_matrix: empty matrix");
    const auto side = static_cast<Eigen::Index>(
        std::max<std::size_t>(2, next_power_of_two(static_cast<std::size_t>(std::max(m.rows(), m.cols())))));
    Matrix out = Matrix::Zero(side, side);
    out.topLeftCorner(m.rows(), m.cols()) = m;
    return out;
}

Vector pad_vector(const Vector &v, std::size_t dimension) {
    require(static_cast<std::size_t>(v.size()) <= dimension, "pad_vector: vector is longer than target");
    Vector out = Vector::Zero(static_cast<Eigen::Index>(dimension));
    out.head(v.size()) = v;
    return out;
}

std::size_t PauliSum::num_qubits() const {
    return terms.empty() ? 0 : terms.front().label.size();
}

double PauliSum::one_norm() const {
    double s = 0.0;
    for (const auto &t : terms) {
        s += std::abs(t.coeff);
    }
    return s;
}

Matrix pauli_matrix(const std::string &label) {
    require(!label.empty(), "Pauli label is empty");
    Matrix out = Matrix::Identity(1, 1);
    for (char c : label) {
        Matrix p(2, 2);
        switch (c) {
        case 'I': p << 1, 0, 0, 1; break;
        case 'X': p << 0, 1, 1, 0; break;
        case 'Y': p << 0, -kI, kI, 0; break;
        case 'Z': p << 1, 0, 0, -1; break;
        default: fail(ErrorKind::kInvalidInput, std::string("invalid Pauli label character '") + c + "'");
        }
        out = kron(out, p);
    }
    return out;
}

PauliSum pauli_decompose(const Matrix &m, double drop_tol) {
    require(m.rows() == m.cols(), "pauli_decompose: matrix must be square");
    const auto dim = static_cast<std::size_t>(m.rows());
    const std::size_t n = exact_log2(dim);
    require(n >= 1 && n <= 12, "pauli_decompose: supported for 1 to 12 qubits");
    static const char kLetters[] = {'I', 'X', 'Y', 'Z'};

    PauliSum sum;
    const std::size_t strings = std::size_t{1} << (2 * n);
    std::string label(n, 'I');
    for (std::size_t code = 0; code < strings; ++code) {
        std::size_t x_mask = 0, z_mask = 0, y_count = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t letter = (code >> (2 * (n - 1 - q))) & 3U;
            label[q] = kLetters[letter];
            const std::size_t bit = std::size_t{1} << (n - 1 - q);
            if (letter == 1 || letter == 2) x_mask |= bit;
            if (letter == 2 || letter == 3) z_mask |= bit;
            if (letter == 2) ++y_count;
        }
        // <j|P|j^x> = (-i)^y (-1)^popcount(j & z), since <a|Y|1-a> = -i (-1)^a.
        static const Complex kMinusIPowers[] = {1.0, -kI, -1.0, kI};
        const Complex y_phase = kMinusIPowers[y_count % 4];
        Complex trace = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t k = j ^ x_mask;
            const int parity = __builtin_popcountll(j & z_mask) & 1;
            const Complex entry = parity ? -y_phase : y_phase;
            trace += entry * m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
        }
        const Complex coeff = trace / static_cast<double>(dim);
        if (std::abs(coeff) > drop_tol) {
            sum.terms.push_back({coeff, label});
        }
    }
    return sum;
}

Matrix pauli_reconstruct(const PauliSum &sum) {
    require(!sum.terms.empty(), "pauli_reconstruct: empty sum");
    const std::size_t n = sum.num_qubits();
    const auto dim = Eigen::Index{1} << n;
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto &t : sum.terms) {
        require(t.label.size() == n, "pauli_reconstruct: labels must share a length");
        m += t.coeff * pauli_matrix(t.label);
    }
    return m;
}

HermitianDilation hermitian_dilate(const Matrix &a) {
    require(a.rows() == a.cols() && a.rows() > 0, "hermitian_dilate: matrix must be square");
    const Eigen::Index n = a.rows();
    Matrix h = Matrix::Zero(2 * n, 2 * n);
    h.topRightCorner(n, n) = a;
    h.bottomLeftCorner(n, n) = a.adjoint();
    return {std::move(h), static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
}

BlockEncoding::BlockEncoding(GateMatrix unitary, std::size_t num_ancillas, double alpha, Matrix reference)
    : unitary_(std::move(unitary)), num_ancillas_(num_ancillas), num_system_(0), alpha_(alpha),
      reference_(std::move(reference)) {
    require(num_ancillas >= 1, "block encoding: at least one ancilla");
    require(unitary_.num_qubits() > num_ancillas, "block encoding: no system qubits");
    num_system_ = unitary_.num_qubits() - num_ancillas;
    require(static_cast<std::size_t>(reference_.rows()) == system_dimension() &&
                reference_.rows() == reference_.cols(),
            "block encoding: reference matrix has the wrong shape");
    require(alpha_ > 0.0, "block encoding: alpha must be positive");
    if (block_error() > 1e-9) {
        std::ostringstream os;
        os << "block encoding: top-left block differs from A/alpha by " << block_error();
        fail(ErrorKind::kInvalidInput, os.str());
    }
}

Matrix BlockEncoding::block() const {
    const auto d = static_cast<Eigen::Index>(system_dimension());
    return unitary_.matrix().topLeftCorner(d, d);
}

double BlockEncoding::block_error() const {
    return (block() - reference_ / alpha_).cwiseAbs().maxCoeff();
}

BlockEncoding block_encode_hermitian(const Matrix &a, std::optional<double> alpha) {
    require(a.rows() == a.cols(), "block_encode_hermitian: matrix must be square");
    require(is_power_of_two(static_cast<std::size_t>(a.rows())),
            "block_encode_hermitian: dimension must be a power of two (pad first)");
    require(is_hermitian(a), "block_encode_hermitian: matrix is not Hermitian");
    const double a_norm = resolve_alpha(a, alpha);
    const Eigen::SelfAdjointEigenSolver<Matrix> eig((a / a_norm).eval());
    RealVector d = eig.eigenvalues();
    clip_unit(d, "block_encode_hermitian");
    const RealVector s = (1.0 - d.array().square()).max(0.0).sqrt().matrix();
    const Matrix &q = eig.eigenvectors();
    const Eigen::Index n = a.rows();
    const Matrix dq = q * d.cast<Complex>().asDiagonal() * q.adjoint();
    const Matrix sq = q * s.cast<Complex>().asDiagonal() * q.adjoint();
    Matrix u(2 * n, 2 * n);
    u << dq, -sq, sq, dq;
    return BlockEncoding(GateMatrix(std::move(u)), 1, a_norm, a);
}

BlockEncoding block_encode_general(const Matrix &a, std::optional<double> alpha) {
    require(a.rows() == a.cols(), "block_encode_general: matrix must be square");
    require(is_power_of_two(static_cast<std::size_t>(a.rows())),
            "block_encode_general: dimension must be a power of two (pad first)");
    const double a_norm = resolve_alpha(a, alpha);
    const Eigen::BDCSVD<Matrix> svd((a / a_norm).eval(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    RealVector sigma = svd.singularValues();
    clip_unit(sigma, "block_encode_general");
    const RealVector c = (1.0 - sigma.array().square()).max(0.0).sqrt().matrix();
    const Matrix &w = svd.matrixU();
    const Matrix &v = svd.matrixV();
    const Eigen::Index n = a.rows();
    // Each singular direction gets the exact 2x2 rotation [[s, c], [c, -s]].
    Matrix u(2 * n, 2 * n);
    u << w * sigma.cast<Complex>().asDiagonal() * v.adjoint(),
        w * c.cast<Complex>().asDiagonal() * w.adjoint(),
        v * c.cast<Complex>().asDiagonal() * v.adjoint(),
        -(v * sigma.cast<Complex>().asDiagonal() * w.adjoint());
    return BlockEncoding(GateMatrix(std::move(u)), 1, a_norm, a);
}

BlockEncoding block_encode_from_pauli_sum(const PauliSum &sum) {
    require(!sum.terms.empty(), "block_encode_from_pauli_sum: empty sum");
    std::vector<UnitaryTerm> terms;
    terms.reserve(sum.terms.size());
    for (const auto &t : sum.terms) {
        terms.push_back({t.coeff, GateMatrix(pauli_matrix(t.label))});
    }
    const LcuCircuit lcu = lcu_circuit(terms);
    return BlockEncoding(GateMatrix(circuit_unitary(lcu.circuit)), lcu.num_ancillas, lcu.alpha,
                         pauli_reconstruct(sum));
}

Vector block_action(const BlockEncoding &be, const Vector &psi) {
    require(static_cast<std::size_t>(psi.size()) == be.system_dimension(),
            "block encoding: state width does not match the system register");
    const auto d = static_cast<Eigen::Index>(be.system_dimension());
    return be.unitary().matrix().topLeftCorner(d, d) * psi;
}

Postselected apply_block_encoding(const BlockEncoding &be, const StateVector &state) {
    require(state.num_qubits() == be.num_system_qubits(),
            "block encoding: state width does not match the system register");
    const auto d = static_cast<Eigen::Index>(be.system_dimension());
    const Vector full = be.unitary().matrix().leftCols(d) * state.amplitudes();
    return postselect_leading(full, be.num_ancillas(), 0);
}

SparseOracle SparseOracle::from_matrix(const Matrix &m, double zero_tol) {
    require(m.rows() == m.cols(), "sparse oracle: matrix must be square");
    SparseOracle o;
    o.columns_.resize(static_cast<std::size_t>(m.rows()));
    o.values_.resize(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (std::abs(m(i, j)) > zero_tol) {
                o.columns_[static_cast<std::size_t>(i)].push_back(static_cast<std::size_t>(j));
                o.values_[static_cast<std::size_t>(i)].push_back(m(i, j));
            }
        }
        o.sparsity_ = std::max(o.sparsity_, o.columns_[static_cast<std::size_t>(i)].size());
    }
    return o;
}

std::optional<std::size_t> SparseOracle::position(std::size_t row, std::size_t v) const {
    require(row < dimension(), "sparse oracle: row out of range");
    require(v >= 1 && v <= std::max<std::size_t>(sparsity_, 1), "sparse oracle: v out of range");
    const auto &cols = columns_[row];
    if (v > cols.size()) {
        return std::nullopt;
    }
    return cols[v - 1];
}

Complex SparseOracle::value(std::size_t row, std::size_t col) const {
    require(row < dimension() && col < dimension(), "sparse oracle: index out of range");
    const auto &cols = columns_[row];
    const auto it = std::lower_bound(cols.begin(), cols.end(), col);
    if (it == cols.end() || *it != col) {
        return 0.0;
    }
    return values_[row][static_cast<std::size_t>(it - cols.begin())];
}

} // namespace qsci
