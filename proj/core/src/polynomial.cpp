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

#include "qsci/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "qsci/error.hpp"

namespace qsci {

namespace {

constexpr double kMagnitudeTol = 1e-9;

bool parity_allows(Parity p, std::size_t k) {
    switch (p) {
    case Parity::kEven: return k % 2 == 0;
    case Parity::kOdd: return k % 2 == 1;
    case Parity::kMixed: return true;
    }
    return true;
}

/// Chebyshev nodes of the first kind mapped to [a, b].
std::vector<double> mapped_nodes(double a, double b, std::size_t count) {
    std::vector<double> x(count);
    for (std::size_t j = 0; j < count; ++j) {
        const double c = std::cos(kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(count));
        x[j] = 0.5 * (a + b) + 0.5 * (b - a) * c;
    }
    return x;
}

ChebyshevSeries weighted_fit(const std::function<double(double)> &f,
                             const std::vector<Interval> &intervals, std::size_t degree, Parity parity,
                             const std::function<double(double)> &weight) {
    require(!intervals.empty(), "chebyshev_fit: no intervals");
    std::vector<std::size_t> basis;
    for (std::size_t k = 0; k <= degree; ++k) {
        if (parity_allows(parity, k)) {
            basis.push_back(k);
        }
    }
    require(!basis.empty(), "chebyshev_fit: degree too small for the requested parity");
    const std::size_t total = std::max<std::size_t>(200, 4 * basis.size());
    const std::size_t per = (total + intervals.size() - 1) / intervals.size();
    std::vector<double> nodes;
    for (const auto &[a, b] : intervals) {
        require(-1.0 <= a && a < b && b <= 1.0, "chebyshev_fit: intervals must lie in [-1, 1]");
        const auto x = mapped_nodes(a, b, per);
        nodes.insert(nodes.end(), x.begin(), x.end());
    }

    const auto rows = static_cast<Eigen::Index>(nodes.size());
    const auto cols = static_cast<Eigen::Index>(basis.size());
    RealMatrix v(rows, cols);
    RealVector rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double x = nodes[static_cast<std::size_t>(r)];
        const double w = weight(x);
        double t_prev = 1.0, t_cur = x;
        std::size_t next = 0;
        for (std::size_t k = 0; k <= degree && next < basis.size(); ++k) {
            const double tk = k == 0 ? 1.0 : (k == 1 ? x : t_cur);
            if (basis[next] == k) {
                v(r, static_cast<Eigen::Index>(next)) = w * tk;
                ++next;
            }
            if (k >= 1) {
                const double t_new = 2.0 * x * t_cur - t_prev;
                t_prev = t_cur;
                t_cur = t_new;
            }
        }
        const double fx = f(x);
        require(std::isfinite(fx), "chebyshev_fit: f is not finite at a node");
        rhs(r) = w * fx;
    }
    const RealVector sol = v.colPivHouseholderQr().solve(rhs);

    ChebyshevSeries s;
    s.coefficients.assign(degree + 1, 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        s.coefficients[basis[i]] = sol(static_cast<Eigen::Index>(i));
    }
    s.parity = parity == Parity::kMixed ? detect_parity(s.coefficients) : parity;
    std::ostringstream dom;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        dom << (i ? "U" : "") << '[' << intervals[i].first << ',' << intervals[i].second << ']';
    }
    s.domain = dom.str();
    for (double x : nodes) {
        s.max_node_residual = std::max(s.max_node_residual, std::abs(s(x) - f(x)));
    }
    return s;
}

/// Postselection bookkeeping for an unnormalized block output.
Postselected finish(const Vector &out, double subnormalization) {
    const double prob = out.squaredNorm() / (subnormalization * subnormalization);
    if (!(prob >= kMinPostselectionProb)) {
        std::ostringstream os;
        os << "postselection probability " << prob << " is below " << kMinPostselectionProb;
        fail(ErrorKind::kPostselection, os.str());
    }
    return {StateVector::normalize(out), std::min(prob, 1.0)};
}

Vector embed_system(const BlockEncoding &be, const Vector &psi) {
    require(static_cast<std::size_t>(psi.size()) == be.system_dimension(),
            "state width does not match the block encoding's system register");
    Vector v = Vector::Zero(static_cast<Eigen::Index>(be.unitary().dimension()));
    v.head(psi.size()) = psi;
    return v;
}

/// 2|0^m><0^m| - I applied in place: ancilla-zero block first.
void reflect(Vector &v, Eigen::Index system_dim) {
    v.tail(v.size() - system_dim) *= -1.0;
}

} // namespace

std::string to_string(Parity p) {
    switch (p) {
    case Parity::kEven: return "even";
    case Parity::kOdd: return "odd";
    case Parity::kMixed: return "mixed";
    }
    return "mixed";
}

Parity parse_parity(const std::string &text) {
    if (text == "even") return Parity::kEven;
    if (text == "odd") return Parity::kOdd;
    if (text == "mixed") return Parity::kMixed;
    fail(ErrorKind::kInvalidInput, "parity must be 'even', 'odd' or 'mixed', got '" + text + "'");
}

double ChebyshevSeries::operator()(double x) const {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coefficients.size(); k-- > 1;) {
        const double b0 = coefficients[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    const double c0 = coefficients.empty() ? 0.0 : coefficients[0];
    return c0 + x * b1 - b2;
}

double ChebyshevSeries::one_norm() const {
    double s = 0.0;
    for (double c : coefficients) {
        s += std::abs(c);
    }
    return s;
}

Parity detect_parity(const std::vector<double> &coefficients, double tol) {
    bool even = false, odd = false;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (std::abs(coefficients[k]) > tol) {
            (k % 2 == 0 ? even : odd) = true;
        }
    }
    if (even && odd) return Parity::kMixed;
    return odd ? Parity::kOdd : Parity::kEven;
}

double max_abs(const ChebyshevSeries &series) {
    const std::size_t m = std::max<std::size_t>(2001, 16 * (series.degree() + 1));
    auto at = [&](double theta) { return std::abs(series(std::cos(theta))); };
    const double step = kPi / static_cast<double>(m - 1);
    std::vector<double> vals(m);
    for (std::size_t j = 0; j < m; ++j) {
        vals[j] = at(step * static_cast<double>(j));
    }
    double best = *std::max_element(vals.begin(), vals.end());
    // Golden-section refinement around the largest local peaks.
    std::vector<std::size_t> peaks;
    for (std::size_t j = 0; j < m; ++j) {
        const bool left = j == 0 || vals[j] >= vals[j - 1];
        const bool right = j + 1 == m || vals[j] >= vals[j + 1];
        if (left && right && vals[j] >= 0.9 * best) {
            peaks.push_back(j);
        }
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
    peaks.resize(std::min<std::size_t>(peaks.size(), 16));
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (std::size_t j : peaks) {
        double lo = step * static_cast<double>(j == 0 ? 0 : j - 1);
        double hi = step * static_cast<double>(std::min(j + 1, m - 1));
        for (int it = 0; it < 60; ++it) {
            const double c = hi - g * (hi - lo);
            const double d = lo + g * (hi - lo);
            if (at(c) > at(d)) {
                hi = d;
            } else {
                lo = c;
            }
        }
        best = std::max(best, at(0.5 * (lo + hi)));
    }
    return best;
}

GateMatrix reflection_zpi(std::size_t num_ancillas, std::size_t num_system_qubits) {
    require(num_ancillas >= 1, "reflection_zpi: at least one ancilla");
    const auto sys = Eigen::Index{1} << num_system_qubits;
    const auto dim = sys << num_ancillas;
    Matrix r = -Matrix::Identity(dim, dim);
    r.topLeftCorner(sys, sys) = Matrix::Identity(sys, sys);
    return GateMatrix(std::move(r));
}

Matrix singular_value_chebyshev(const Matrix &m, std::size_t k) {
    require(m.rows() == m.cols(), "singular_value_chebyshev: matrix must be square");
    if (k == 0) {
        return Matrix::Identity(m.rows(), m.cols());
    }
    const Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RealVector t = svd.singularValues();
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        t(i) = chebyshev_t(k, t(i));
    }
    const Matrix &right = k % 2 == 1 ? svd.matrixV() : svd.matrixU();
    return svd.matrixU() * t.cast<Complex>().asDiagonal() * right.adjoint();
}

BlockEncoding qubitization_power(const BlockEncoding &be, std::size_t k) {
    const Matrix &u = be.unitary().matrix();
    const Matrix target = singular_value_chebyshev(be.reference() / be.alpha(), k);
    if (k == 0) {
        return BlockEncoding(GateMatrix(Matrix::Identity(u.rows(), u.cols())), be.num_ancillas(), 1.0,
                             target);
    }
    const Matrix ud = u.adjoint();
    const auto sys = static_cast<Eigen::Index>(be.system_dimension());
    Matrix p = u;
    for (std::size_t i = 2; i <= k; ++i) {
        p.rightCols(p.cols() - sys) *= -1.0; // p * R
        p = p * (i % 2 == 0 ? ud : u);
    }
    return BlockEncoding(GateMatrix(std::move(p), 1e-8), be.num_ancillas(), 1.0, target);
}

Vector chebyshev_action(const BlockEncoding &be, const ChebyshevSeries &series, const Vector &psi) {
    require(!series.coefficients.empty(), "chebyshev_apply: empty series");
    const Matrix &u = be.unitary().matrix();
    const Matrix ud = u.adjoint();
    const auto sys = static_cast<Eigen::Index>(be.system_dimension());
    const std::vector<double> &c = series.coefficients;
    const std::size_t d = series.degree();

    bool need_odd = false, need_even = false;
    for (std::size_t k = 1; k <= d; ++k) {
        if (c[k] != 0.0) {
            (k % 2 == 1 ? need_odd : need_even) = true;
        }
    }

    Vector out = c[0] * psi;
    // Odd k: P_k = U R U^dag R ... U applied right to left.
    // Even k: P_k = U R U^dag ... R U^dag, which is its own adjoint chain.
    const Vector start = embed_system(be, psi);
    if (need_odd) {
        Vector v = u * start;
        out += c[1] * v.head(sys);
        for (std::size_t k = 2; k <= d; ++k) {
            reflect(v, sys);
            v = (k % 2 == 1 ? u : ud) * v;
            if (k % 2 == 1) {
                out += c[k] * v.head(sys);
            }
        }
    }
    if (need_even) {
        Vector v = ud * start;
        for (std::size_t k = 2; k <= d; ++k) {
            reflect(v, sys);
            v = (k % 2 == 1 ? ud : u) * v;
            if (k % 2 == 0) {
                out += c[k] * v.head(sys);
            }
        }
    }
    return out;
}

Postselected chebyshev_apply(const BlockEncoding &be, const ChebyshevSeries &series,
                             const StateVector &state) {
    const double peak = max_abs(series);
    if (peak > 1.0 + kMagnitudeTol) {
        std::ostringstream os;
        os << "chebyshev_apply: series reaches |P| = " << peak << " > 1 on [-1, 1]";
        fail(ErrorKind::kInvalidInput, os.str());
    }
    const double lambda = series.one_norm();
    require(lambda > 0.0, "chebyshev_apply: all coefficients are zero");
    return finish(chebyshev_action(be, series, state.amplitudes()), lambda);
}

Matrix chebyshev_matrix(const BlockEncoding &be, const ChebyshevSeries &series) {
    const auto sys = static_cast<Eigen::Index>(be.system_dimension());
    Matrix out(sys, sys);
    for (Eigen::Index j = 0; j < sys; ++j) {
        Vector e = Vector::Zero(sys);
        e(j) = 1.0;
        out.col(j) = chebyshev_action(be, series, e);
    }
    return out;
}

namespace {

bool is_rotation_form(const BlockEncoding &be) {
    if (be.num_ancillas() != 1) {
        return false;
    }
    const Matrix &u = be.unitary().matrix();
    const auto d = static_cast<Eigen::Index>(be.system_dimension());
    const double diag = (u.topLeftCorner(d, d) - u.bottomRightCorner(d, d)).cwiseAbs().maxCoeff();
    const double off = (u.topRightCorner(d, d) + u.bottomLeftCorner(d, d)).cwiseAbs().maxCoeff();
    return diag < 1e-12 && off < 1e-12;
}

void check_phases(const PhaseSequence &phases) {
    require(!phases.phases.empty(), "qsp: phase sequence is empty");
    for (double p : phases.phases) {
        require(std::isfinite(p), "qsp: phases must be finite");
    }
    const Parity expected = phases.degree() % 2 == 0 ? Parity::kEven : Parity::kOdd;
    if (phases.parity != expected) {
        fail(ErrorKind::kInvalidInput, "qsp: declared parity '" + to_string(phases.parity) +
                                           "' does not match degree " +
                                           std::to_string(phases.degree()));
    }
}

} // namespace

Vector qsp_action(const BlockEncoding &be, const PhaseSequence &phases, const Vector &psi,
                  QspOptions options) {
    check_phases(phases);
    const bool alternate = options.sequence == QspSequence::kAlternating ||
                           (options.sequence == QspSequence::kAuto && !is_rotation_form(be));
    const Matrix &u = be.unitary().matrix();
    const Matrix ud = alternate ? Matrix(u.adjoint()) : Matrix();
    const auto sys = static_cast<Eigen::Index>(be.system_dimension());
    const Eigen::Index tail = u.rows() - sys;

    // h0 / h1: amplitudes with the rotation qubit reading 0 / 1.
    Vector h0 = embed_system(be, psi);
    Vector h1 = Vector::Zero(h0.size());
    if (options.extract_real) {
        h0 /= std::sqrt(2.0);
        h1 = h0;
    }
    const std::size_t d = phases.degree();
    std::vector<double> phi = phases.phases;
    if (!is_rotation_form(be) && d > 0) {
        // Reflection-type signal: shift the Wx phases so the same file applies.
        phi[0] += static_cast<double>(2 * d - 1) * kPi / 4.0;
        for (std::size_t j = 1; j < d; ++j) {
            phi[j] -= kPi / 2.0;
        }
        phi[d] -= kPi / 4.0;
    }
    for (std::size_t j = d + 1; j-- > 0;) {
        const Complex plus = std::polar(1.0, phi[j]);
        const Complex minus = std::conj(plus);
        h0.head(sys) *= plus;
        h0.tail(tail) *= minus;
        h1.head(sys) *= minus;
        h1.tail(tail) *= plus;
        if (j > 0) {
            const Matrix &factor = alternate && j % 2 == 0 ? ud : u;
            h0 = factor * h0;
            if (options.extract_real) {
                h1 = factor * h1;
            }
        }
    }
    if (options.extract_real) {
        return (h0.head(sys) + h1.head(sys)) / std::sqrt(2.0);
    }
    return h0.head(sys);
}

Postselected qsp_apply(const BlockEncoding &be, const PhaseSequence &phases, const StateVector &state,
                       QspOptions options) {
    return finish(qsp_action(be, phases, state.amplitudes(), options), 1.0);
}

Complex qsp_response(const std::vector<double> &phases, double a) {
    require(!phases.empty(), "qsp_response: empty phase sequence");
    const double s = std::sqrt(std::max(0.0, 1.0 - a * a));
    Eigen::Matrix2cd w;
    w << a, kI * s, kI * s, a;
    auto rz = [](double phi) {
        Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
        r(0, 0) = std::polar(1.0, phi);
        r(1, 1) = std::polar(1.0, -phi);
        return r;
    };
    Eigen::Matrix2cd m = rz(phases[0]);
    for (std::size_t j = 1; j < phases.size(); ++j) {
        m = m * w * rz(phases[j]);
    }
    return m(0, 0);
}

ChebyshevSeries chebyshev_interpolate(const std::function<double(double)> &f, std::size_t degree) {
    const std::size_t n = degree + 1;
    std::vector<double> fx(n);
    for (std::size_t j = 0; j < n; ++j) {
        fx[j] = f(std::cos(kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n)));
        require(std::isfinite(fx[j]), "chebyshev_interpolate: f is not finite at a node");
    }
    ChebyshevSeries s;
    s.coefficients.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += fx[j] * std::cos(kPi * static_cast<double>(k) * (static_cast<double>(j) + 0.5) /
                                    static_cast<double>(n));
        }
        s.coefficients[k] = (k == 0 ? 1.0 : 2.0) * acc / static_cast<double>(n);
    }
    s.parity = detect_parity(s.coefficients, 1e-13);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = std::cos(kPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n));
        s.max_node_residual = std::max(s.max_node_residual, std::abs(s(x) - fx[j]));
    }
    return s;
}

ChebyshevSeries chebyshev_fit(const std::function<double(double)> &f, const std::vector<Interval> &intervals,
                              std::size_t degree, Parity parity) {
    if (parity == Parity::kMixed && intervals.size() == 1 && intervals[0].first == -1.0 &&
        intervals[0].second == 1.0) {
        return chebyshev_interpolate(f, degree);
    }
    return weighted_fit(f, intervals, degree, parity, [](double) { return 1.0; });
}

namespace {

/// max |Q(x) g(x) / scale - 1| over a Chebyshev grid of [a, b].
double relative_error(const ChebyshevSeries &series, double a, double b,
                      const std::function<double(double)> &g) {
    const std::size_t m = std::max<std::size_t>(4000, 20 * (series.degree() + 1));
    double worst = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double c = std::cos(kPi * static_cast<double>(j) / static_cast<double>(m - 1));
        const double x = 0.5 * (a + b) + 0.5 * (b - a) * c;
        worst = std::max(worst, std::abs(series(x) * g(x) / series.scale - 1.0));
    }
    return worst;
}

/**
 * Smallest degree (of the given step parity) whose fit meets eps: doubling
 * followed by bisection. `fit` returns the series and its error.
 */
ChebyshevSeries search_degree(const std::function<std::pair<ChebyshevSeries, double>(std::size_t)> &fit,
                              bool odd_only, double eps, std::size_t max_degree, const std::string &what) {
    auto grow = [&](std::size_t d) { return odd_only ? 2 * d + 1 : 2 * d; };
    std::size_t lo = odd_only ? 1 : 0, hi = odd_only ? 1 : 2;
    auto [best, err] = fit(hi);
    while (err > eps) {
        lo = hi;
        hi = grow(hi);
        if (hi > max_degree) {
            std::ostringstream os;
            os << what << ": degree cap " << max_degree << " reached at error " << err;
            fail(ErrorKind::kTolerance, os.str());
        }
        std::tie(best, err) = fit(hi);
    }
    const std::size_t step = odd_only ? 2 : 1;
    while (hi - lo > step) {
        std::size_t mid = (lo + hi) / 2;
        if (odd_only && mid % 2 == 0) {
            ++mid;
        }
        if (mid >= hi || mid <= lo) {
            break;
        }
        auto [s, e] = fit(mid);
        if (e <= eps) {
            hi = mid;
            best = std::move(s);
        } else {
            lo = mid;
        }
    }
    const double gamma = 1.0 / max_abs(best);
    for (double &c : best.coefficients) {
        c *= gamma;
    }
    best.scale = gamma;
    best.max_node_residual *= gamma;
    return best;
}

} // namespace

double inverse_relative_error(const ChebyshevSeries &series, double kappa) {
    return relative_error(series, 1.0 / kappa, 1.0, [](double x) { return x; });
}

double shifted_inverse_relative_error(const ChebyshevSeries &series, double kappa) {
    return relative_error(series, -1.0, 1.0 - 1.0 / kappa, [](double y) { return 1.0 - y; });
}

ChebyshevSeries inverse_coeffs(double kappa, double eps, InverseFitOptions options) {
    require(std::isfinite(kappa) && kappa > 1.0, "inverse_coeffs: kappa must exceed 1");
    require(eps > 0.0 && eps < 1.0, "inverse_coeffs: eps must lie in (0, 1)");
    const std::vector<Interval> domain{{1.0 / kappa, 1.0}};
    auto fit = [&](std::size_t d) {
        // Weighting rows by x fits x P(x) to 1, i.e. controls relative error.
        ChebyshevSeries s = weighted_fit([](double x) { return 1.0 / x; }, domain, d, Parity::kOdd,
                                         [](double x) { return x; });
        return std::pair{s, inverse_relative_error(s, kappa)};
    };
    ChebyshevSeries best = search_degree(fit, true, eps, options.max_degree, "inverse_coeffs");
    best.domain = "[-1,-1/kappa]U[1/kappa,1]";
    return best;
}

ChebyshevSeries shifted_inverse_coeffs(double kappa, double eps, InverseFitOptions options) {
    require(std::isfinite(kappa) && kappa >= 1.0, "shifted_inverse_coeffs: kappa must be at least 1");
    require(eps > 0.0 && eps < 1.0, "shifted_inverse_coeffs: eps must lie in (0, 1)");
    const double top = 1.0 - 1.0 / kappa;
    const std::vector<Interval> domain{{-1.0, std::max(top, -1.0 + 1e-12)}};
    auto fit = [&](std::size_t d) {
        ChebyshevSeries s = weighted_fit([](double y) { return 1.0 / (1.0 - y); }, domain, d,
                                         Parity::kMixed, [](double y) { return 1.0 - y; });
        return std::pair{s, shifted_inverse_relative_error(s, kappa)};
    };
    ChebyshevSeries best = search_degree(fit, false, eps, options.max_degree, "shifted_inverse_coeffs");
    best.parity = Parity::kMixed;
    best.domain = "[-1,1-1/kappa]";
    return best;
}

JacobiAngerSeries jacobi_anger(double t, double eps) {
    require(std::isfinite(t), "jacobi_anger: t must be finite");
    require(eps > 0.0 && eps < 1.0, "jacobi_anger: eps must lie in (0, 1)");
    const double at = std::abs(t);
    // |J_j(t)| <= (|t|/2)^j / j!; the series error is at most sum_{j>K} 2 |J_j(t)|.
    auto tail = [&](std::size_t k) {
        double sum = 0.0;
        double term = 1.0; // (|t|/2)^j / j! at j = 0
        for (std::size_t j = 1; j <= k + 400; ++j) {
            term *= (at / 2.0) / static_cast<double>(j);
            if (j > k) {
                sum += 2.0 * term;
                if (term < 1e-300) {
                    break;
                }
            }
        }
        return sum;
    };
    std::size_t k = 0;
    while (tail(k) > eps / 4.0) {
        ++k;
    }
    const double rescale = 1.0 / (1.0 + eps / 4.0);
    auto bessel = [&](std::size_t n) {
        const double j = std::cyl_bessel_j(static_cast<double>(n), at);
        return (t < 0 && n % 2 == 1) ? -j : j;
    };

    JacobiAngerSeries out;
    out.truncation = k;
    out.cos_series.coefficients.assign(k - k % 2 + 1, 0.0);
    out.sin_series.coefficients.assign(std::max<std::size_t>(1, k % 2 == 1 ? k : k - (k > 0)) + 1, 0.0);
    for (std::size_t n = 0; n <= k; ++n) {
        const double sign = ((n / 2) % 2 == 0) ? 1.0 : -1.0;
        if (n == 0) {
            out.cos_series.coefficients[0] = bessel(0) * rescale;
        } else if (n % 2 == 0) {
            out.cos_series.coefficients[n] = 2.0 * sign * bessel(n) * rescale;
        } else {
            out.sin_series.coefficients[n] = 2.0 * sign * bessel(n) * rescale;
        }
    }
    out.cos_series.parity = Parity::kEven;
    out.sin_series.parity = Parity::kOdd;
    out.cos_series.scale = out.sin_series.scale = rescale;
    out.cos_series.domain = out.sin_series.domain = "[-1,1]";
    return out;
}

} // namespace qsci
