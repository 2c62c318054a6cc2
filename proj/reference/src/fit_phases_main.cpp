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

// Computes a phase file for the odd 1/x approximation.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "qsci/io.hpp"
#include "qsci/polynomial.hpp"
#include "qsci_ref/oracles.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Fit signal-processing phases for an odd inverse approximation"};
    double kappa = 20.0, eps = 1e-6, amplitude = 0.5;
    std::string out;
    app.add_option("--kappa", kappa, "condition number bound")->check(CLI::PositiveNumber);
    app.add_option("--eps", eps, "relative accuracy of the polynomial")->check(CLI::PositiveNumber);
    app.add_option("--amplitude", amplitude, "factor applied to the series before fitting")
        ->check(CLI::Range(1e-3, 1.0));
    app.add_option("--out", out, "output path")->required();
    CLI11_PARSE(app, argc, argv);

    const qsci::ChebyshevSeries series = qsci::inverse_coeffs(kappa, eps);
    std::vector<double> target = series.coefficients;
    for (double &c : target) c *= amplitude;
    const auto fit = qsci::ref::fit_qsp_phases(target);
    std::fprintf(stderr, "degree %zu, node residual %.3e after %zu iterations\n", series.degree(), fit.residual,
                 fit.iterations);
    if (fit.residual > 1e-10) {
        return 4;
    }
    qsci::PhaseSequence phases{fit.phases, qsci::Parity::kOdd, "inverse", kappa, eps};
    qsci::io::write_text_atomic(out, qsci::io::phases_to_json(phases).dump(1) + "\n");
    return 0;
}
