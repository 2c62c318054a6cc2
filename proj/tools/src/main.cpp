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

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qsci/error.hpp"

namespace {

using namespace qsci::cli;

constexpr std::uint64_t kFallbackSeed = 1234;

std::uint64_t default_seed() {
    if (const char *env = std::getenv("QSCI_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            std::cerr << "warning: ignoring non-numeric QSCI_SEED\n";
        }
    }
    return kFallbackSeed;
}

int exit_code(qsci::ErrorKind kind) {
    switch (kind) {
    case qsci::ErrorKind::kInvalidInput: return kInputError;
    case qsci::ErrorKind::kPostselection: return kPostselectionFailure;
    case qsci::ErrorKind::kTolerance: return kToleranceNotMet;
    }
    return kInputError;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qsci: statevector workbench for quantum scientific-computing routines"};
    app.require_subcommand(1);
    OutputOptions out;
    auto add_output = [&](CLI::App *cmd) {
        cmd->add_option("--out,-o", out.path, "write to this file (atomically) instead of stdout");
        cmd->add_flag("--csv", out.csv, "emit a flat CSV table");
    };

    DemoOptions demo;
    demo.seed = default_seed();
    demo.data_dir = QSCI_DEFAULT_DATA_DIR;
    std::size_t shots = 0;
    auto *demo_cmd = app.add_subcommand("demo", "reproduce a reference demonstration");
    demo_cmd->add_option("name", demo.name, "demonstration")
        ->required()
        ->check(CLI::IsMember({"bell", "superposition", "qft", "trotter", "pauli-growth", "grover", "qlsa-figure"}));
    demo_cmd->add_option("--seed", demo.seed, "sampling seed (default: $QSCI_SEED or 1234)");
    auto *shots_opt = demo_cmd->add_option("--shots", shots, "override the shot count")->check(CLI::PositiveNumber);
    demo_cmd->add_option("--max-n", demo.max_n, "largest matrix size for pauli-growth")
        ->check(CLI::PositiveNumber);
    demo_cmd->add_option("--data-dir", demo.data_dir, "directory holding the bundled fixtures");
    demo_cmd->add_option("--phases", demo.phases, "phase file for qlsa-figure (uses the phase route)");
    add_output(demo_cmd);

    SolveOptions solve;
    auto *solve_cmd = app.add_subcommand("solve", "run a solver route on input files");
    solve_cmd->add_option("route", solve.route, "solver route")
        ->required()
        ->check(CLI::IsMember({"qlsa-cheb", "qlsa-qsp", "qlsa-pd", "hhl", "ode", "poisson", "wave"}));
    solve_cmd->add_option("--matrix", solve.matrix, "matrix file");
    solve_cmd->add_option("--rhs", solve.rhs, "right-hand side vector file");
    solve_cmd->add_option("--phases", solve.phases, "phase file (qlsa-qsp)");
    solve_cmd->add_option("--spec", solve.spec, "ODE spec file (ode)");
    solve_cmd->add_option("--kappa", solve.kappa, "condition number bound")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--eps", solve.eps, "polynomial accuracy")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--alpha", solve.alpha, "bound on the spectral norm")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--clock-bits,--m-bits", solve.clock_bits, "HHL clock qubits")->check(CLI::Range(1, 12));
    solve_cmd->add_option("--C", solve.C, "HHL rotation constant")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--t0", solve.t0, "HHL evolution time")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--n", solve.n, "grid points per axis (poisson, wave)")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--d", solve.d, "dimensions (poisson)")->check(CLI::Range(1, 4));
    solve_cmd->add_option("--spacing", solve.h, "grid spacing (wave)")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--t", solve.t, "evolution time (wave)");
    solve_cmd->add_option("--min-fidelity", solve.min_fidelity, "exit 4 when the classical check falls below this");
    add_output(solve_cmd);

    std::vector<std::string> files;
    std::string kind = "auto", purpose;
    bool strict = false;
    auto *validate_cmd = app.add_subcommand("validate", "check input files and report diagnostics");
    validate_cmd->add_option("files", files, "files to check")->required();
    validate_cmd->add_option("--kind", kind, "file kind")
        ->check(CLI::IsMember({"auto", "vector", "matrix", "pauli", "hamiltonian", "phases", "series", "circuit",
                               "histogram", "ode"}));
    validate_cmd->add_option("--for", purpose, "route the files are meant for (e.g. hhl)");
    validate_cmd->add_flag("--strict", strict, "exit 2 when any diagnostic is reported");
    validate_cmd->add_option("--out,-o", out.path, "write the report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (demo_cmd->parsed()) {
            if (shots_opt->count() > 0) demo.shots = shots;
            emit(run_demo(demo), out);
            return kOk;
        }
        if (solve_cmd->parsed()) {
            int status = kOk;
            emit(run_solve(solve, status), out);
            return status;
        }
        Result r{{{"files", qsci::io::Json::array()}}};
        std::size_t total = 0;
        for (const auto &path : files) {
            std::vector<std::string> diags;
            try {
                diags = qsci::io::diagnose(qsci::io::read_json(path), kind, purpose);
            } catch (const qsci::Error &e) {
                diags.emplace_back(e.what());
            }
            total += diags.size();
            for (const auto &d : diags) std::cerr << path << ": " << d << "\n";
            r.json["files"].push_back({{"path", path}, {"diagnostics", diags}});
        }
        r.json["ok"] = total == 0;
        emit(r, out);
        return strict && total > 0 ? kInputError : kOk;
    } catch (const qsci::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
