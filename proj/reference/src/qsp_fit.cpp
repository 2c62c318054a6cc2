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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "qsci_ref/oracles.hpp"

namespace qsci::ref {

namespace {

double series_value(const std::vector<double> &c, double x) {
    double prev = 1.0, cur = x, total = c.empty() ? 0.0 : c[0];
    for (std::size_t k = 1; k < c.size(); ++k) {
        total += c[k] * cur;
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return total;
}

std::vector<double> expand(const std::vector<double> &reduced, std::size_t degree) {
    std::vector<double> full(degree + 1);
    for (std::size_t j = 0; j <= degree; ++j) {
        full[j] = reduced[std::min(j, degree - j)];
    }
    return full;
}

Eigen::VectorXd residual(const std::vector<double> &reduced, std::size_t degree,
                         const std::vector<double> &nodes, const Eigen::VectorXd &target) {
    const auto full = expand(reduced, degree);
    Eigen::VectorXd r(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        r(static_cast<Eigen::Index>(j)) = qsp_real_response(full, nodes[j]) - target(static_cast<Eigen::Index>(j));
    }
    return r;
}

} // namespace

double qsp_real_response(const std::vector<double> &phases, double x) {
    using M2 = Eigen::Matrix2cd;
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    M2 w;
    w << x, Complex(0, s), Complex(0, s), x;
    auto rz = [](double phi) {
        M2 r = M2::Zero();
        r(0, 0) = std::polar(1.0, phi);
        r(1, 1) = std::polar(1.0, -phi);
        return r;
    };
    M2 u = rz(phases.at(0));
    for (std::size_t j = 1; j < phases.size(); ++j) {
        u = u * w * rz(phases[j]);
    }
    return u(0, 0).real();
}

PhaseFit fit_qsp_phases(const std::vector<double> &coefficients, double tol, std::size_t max_iterations) {
    if (coefficients.empty()) {
        throw std::invalid_argument("fit_qsp_phases: empty series");
    }
    const std::size_t degree = coefficients.size() - 1;
    for (std::size_t k = 0; k <= degree; ++k) {
        if ((k % 2) != (degree % 2) && coefficients[k] != 0.0) {
            throw std::invalid_argument("fit_qsp_phases: series must have definite parity");
        }
    }
    const std::size_t free = degree / 2 + 1;
    std::vector<double> nodes(free);
    Eigen::VectorXd target(static_cast<Eigen::Index>(free));
    for (std::size_t j = 0; j < free; ++j) {
        nodes[j] = std::cos(kPi * static_cast<double>(2 * j + 1) / static_cast<double>(4 * free));
        target(static_cast<Eigen::Index>(j)) = series_value(coefficients, nodes[j]);
    }

    std::vector<double> reduced(free, 0.0);
    reduced[0] = kPi / 4.0;
    if (degree == 0) {
        // e^{2 i phi}: Re = cos(2 phi).
        reduced[0] = 0.5 * std::acos(std::clamp(target(0), -1.0, 1.0));
        return {expand(reduced, degree), 0.0, 0};
    }

    PhaseFit fit;
    Eigen::VectorXd r = residual(reduced, degree, nodes, target);
    const double step = 1e-7;
    for (fit.iterations = 0; fit.iterations < max_iterations; ++fit.iterations) {
        if (r.lpNorm<Eigen::Infinity>() <= tol) {
            break;
        }
        Eigen::MatrixXd jac(r.size(), r.size());
        for (std::size_t c = 0; c < free; ++c) {
            auto plus = reduced, minus = reduced;
            plus[c] += step;
            minus[c] -= step;
            jac.col(static_cast<Eigen::Index>(c)) =
                (residual(plus, degree, nodes, target) - residual(minus, degree, nodes, target)) / (2.0 * step);
        }
        const Eigen::VectorXd delta = jac.fullPivLu().solve(-r);
        double scale = 1.0;
        bool improved = false;
        for (int tries = 0; tries < 30; ++tries, scale *= 0.5) {
            auto trial = reduced;
            for (std::size_t c = 0; c < free; ++c) {
                trial[c] += scale * delta(static_cast<Eigen::Index>(c));
            }
            const Eigen::VectorXd rt = residual(trial, degree, nodes, target);
            if (rt.norm() < r.norm()) {
                reduced = std::move(trial);
                r = rt;
                improved = true;
                break;
            }
        }
        if (!improved) {
            break;
        }
    }
    fit.phases = expand(reduced, degree);
    fit.residual = r.lpNorm<Eigen::Infinity>();
    return fit;
}

} // namespace qsci::ref
