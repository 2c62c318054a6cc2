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

#include "qsci_ref/oracles.hpp"

namespace qsci::ref {

Vector rk45(const OdeRhs &f, const Vector &x0, double T, Rk45Options options) {
    // Dormand-Prince tableau.
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;

    Vector x = x0;
    double t = 0.0;
    double h = std::min(options.h0, T);
    Vector k1 = f(t, x);
    for (std::size_t step = 0; t < T; ++step) {
        if (step >= options.max_steps) {
            throw std::runtime_error("rk45: step limit reached");
        }
        h = std::min(h, T - t);
        const Vector k2 = f(t + c2 * h, x + h * a21 * k1);
        const Vector k3 = f(t + c3 * h, x + h * (a31 * k1 + a32 * k2));
        const Vector k4 = f(t + c4 * h, x + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vector k5 = f(t + c5 * h, x + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vector k6 = f(t + h, x + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vector next = x + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vector k7 = f(t + h, next);
        const Vector err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        double ratio = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double sc = options.atol + options.rtol * std::max(std::abs(x(i)), std::abs(next(i)));
            ratio = std::max(ratio, std::abs(err(i)) / sc);
        }
        if (ratio <= 1.0) {
            t += h;
            x = next;
            k1 = k7;
        }
        const double factor = ratio == 0.0 ? 5.0 : 0.9 * std::pow(ratio, -0.2);
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return x;
}

Vector rk45_linear(const Matrix &a, const Vector &b, const Vector &x0, double T, Rk45Options options) {
    return rk45([&](double, const Vector &x) -> Vector { return a * x + b; }, x0, T, options);
}

std::vector<Vector> leapfrog(const Matrix &k, const Vector &u0, const Vector &v0, double dt,
                             std::size_t steps) {
    std::vector<Vector> u{u0};
    if (steps == 0) {
        return u;
    }
    u.push_back(u0 + dt * v0 - 0.5 * dt * dt * (k * u0));
    for (std::size_t s = 1; s < steps; ++s) {
        u.push_back(2.0 * u[s] - u[s - 1] - dt * dt * (k * u[s]));
    }
    return u;
}

} // namespace qsci::ref
