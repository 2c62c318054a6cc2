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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsci/error.hpp"
#include "qsci/io.hpp"

namespace qsci::cli {

/// Exit statuses of the workbench.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kPostselectionFailure = 3,
    kToleranceNotMet = 4,
};

struct OutputOptions {
    std::string path;  ///< empty = stdout
    bool csv = false;
};

/// A JSON document plus the flat table emitted under --csv.
struct Result {
    io::Json json;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

void emit(const Result &result, const OutputOptions &out);

struct DemoOptions {
    std::string name;
    std::uint64_t seed = 0;
    std::optional<std::size_t> shots;
    std::size_t max_n = 128;
    std::string data_dir;
    std::string phases;
};

[[nodiscard]] Result run_demo(const DemoOptions &options);

struct SolveOptions {
    std::string route;
    std::string matrix, rhs, phases, spec;
    std::optional<double> kappa, alpha, C, t0, min_fidelity, eps;
    std::size_t clock_bits = 4;
    std::size_t n = 4, d = 2;
    std::optional<double> h;
    double t = 1.0;
};

/// Runs the route; `status` becomes kToleranceNotMet when --min-fidelity fails.
[[nodiscard]] Result run_solve(const SolveOptions &options, int &status);

[[nodiscard]] std::string format_double(double v);

} // namespace qsci::cli
