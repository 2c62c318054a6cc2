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

#include <cmath>

#include "commands.hpp"

#include "qsci/error.hpp"
#include "qsci/hamiltonian.hpp"
#include "qsci/solvers.hpp"
#include "qsci/subroutines.hpp"
#include "qsci_ref/oracles.hpp"

namespace qsci::cli {

namespace {

void add_histogram_rows(Result &r, const Histogram &h) {
    r.csv_header = {"outcome", "count"};
    for (const auto &[key, count] : h.counts) {
        r.csv_rows.push_back({key, std::to_string(count)});
    }
}

Result bell(const DemoOptions &o) {
    Circuit c(2);
    c.add("H", {0}).add("CX", {0, 1}).measure_all();
    const Histogram h = sample(c, o.shots.value_or(5120), o.seed);
    Result r{{{"demo", "bell"}, {"seed", o.seed}, {"histogram", io::histogram_to_json(h)}}};
    add_histogram_rows(r, h);
    return r;
}

Result superposition(const DemoOptions &o) {
    Circuit c(3);
    for (std::size_t q = 0; q < 3; ++q) c.add("H", {q});
    c.measure_all();
    const Histogram h = sample(c, o.shots.value_or(std::size_t{1} << 15), o.seed);
    Result r{{{"demo", "superposition"}, {"seed", o.seed}, {"histogram", io::histogram_to_json(h)}}};
    add_histogram_rows(r, h);
    return r;
}

Result qft_demo(const DemoOptions &o) {
    const std::size_t n = 5;
    const std::size_t shots = o.shots.value_or(std::size_t{1} << 20);
    Circuit prep(n);
    for (std::size_t q = 0; q < n; ++q) prep.add("H", {q});
    const StateVector before = run(prep, zero_state(n));
    const StateVector after = run(qft(n), before);
    std::vector<std::size_t> all(n);
    for (std::size_t q = 0; q < n; ++q) all[q] = q;
    const Histogram hb = sample_state(before, all, shots, o.seed);
    const Histogram ha = sample_state(after, all, shots, o.seed + 1);
    Result r{{{"demo", "qft"}, {"seed", o.seed}, {"num_qubits", n},
              {"before", io::histogram_to_json(hb)}, {"after", io::histogram_to_json(ha)}}};
    r.csv_header = {"outcome", "before", "after"};
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
        const std::string key = basis_label(i, n);
        auto count = [&](const Histogram &h) { return h.counts.count(key) ? h.counts.at(key) : 0; };
        r.csv_rows.push_back({key, std::to_string(count(hb)), std::to_string(count(ha))});
    }
    return r;
}

Result trotter_demo(const DemoOptions &) {
    const std::vector<std::size_t> grid{10, 20, 40, 80, 100, 200, 400, 800, 1000, 2000, 4000, 8000, 10000};
    const PauliSum h{{{1.0, "X"}, {1.0, "Z"}}};
    Result r{{{"demo", "trotter"}, {"hamiltonian", io::pauli_sum_to_json(h)}, {"rows", io::Json::array()}}};
    r.csv_header = {"t", "r", "order", "error"};
    for (int t = 1; t <= 5; ++t) {
        for (int order : {1, 2}) {
            for (std::size_t steps : grid) {
                const double e = trotter_error(h, t, steps, order);
                r.json["rows"].push_back({{"t", t}, {"r", steps}, {"order", order}, {"error", e}});
                r.csv_rows.push_back({std::to_string(t), std::to_string(steps), std::to_string(order), format_double(e)});
            }
        }
    }
    return r;
}

Result pauli_growth(const DemoOptions &o) {
    Result r{{{"demo", "pauli-growth"}, {"rows", io::Json::array()}}};
    r.csv_header = {"N", "terms", "reconstruction_error"};
    for (std::size_t n = 2; n <= o.max_n; n *= 2) {
        Matrix l = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < l.rows(); ++i) {
            l(i, i) = 2.0;
            if (i + 1 < l.rows()) l(i, i + 1) = l(i + 1, i) = -1.0;
        }
        const PauliSum sum = pauli_decompose(l);
        const double err = (pauli_reconstruct(sum) - l).cwiseAbs().maxCoeff();
        r.json["rows"].push_back({{"N", n}, {"terms", sum.terms.size()}, {"reconstruction_error", err}});
        r.csv_rows.push_back({std::to_string(n), std::to_string(sum.terms.size()), format_double(err)});
    }
    return r;
}

Result grover_demo(const DemoOptions &o) {
    const std::size_t n = 3, marked = 5;
    const std::size_t k = grover_optimal_iterations(n);
    const Histogram h = sample(grover(n, marked, k), o.shots.value_or(1024), o.seed);
    const double p = run_gates(grover(n, marked, k), zero_state(n)).probability(marked);
    Result r{{{"demo", "grover"}, {"seed", o.seed}, {"marked", basis_label(marked, n)}, {"iterations", k},
              {"marked_probability", p}, {"histogram", io::histogram_to_json(h)}}};
    add_histogram_rows(r, h);
    return r;
}

Result qlsa_figure(const DemoOptions &o) {
    LinearSystemProblem p;
    p.A = io::matrix_from_json(io::read_json(o.data_dir + "/antidiag40_matrix.json"));
    p.b = io::vector_from_json(io::read_json(o.data_dir + "/antidiag40_rhs.json"));
    p.kappa = 20.0;
    p.eps = 1e-6;
    const SolveReport rep = o.phases.empty()
                                ? qlsa_chebyshev(p)
                                : qlsa_qsp(p, io::phases_from_json(io::read_json(o.phases)));
    const Vector classical = ref::dense_solve(p.A, p.b).normalized();
    const Complex overlap = classical.dot(rep.solution);
    const Vector aligned = rep.solution * (std::abs(overlap) / overlap);
    double worst = 0.0;
    Result r{{{"demo", "qlsa-figure"}, {"report", io::report_to_json(rep)}, {"rows", io::Json::array()}}};
    r.csv_header = {"index", "quantum", "classical"};
    for (Eigen::Index i = 0; i < aligned.size(); ++i) {
        worst = std::max(worst, std::abs(aligned(i) - classical(i)) / std::abs(classical(i)));
        r.json["rows"].push_back({{"index", i}, {"quantum", aligned(i).real()}, {"classical", classical(i).real()}});
        r.csv_rows.push_back({std::to_string(i), format_double(aligned(i).real()), format_double(classical(i).real())});
    }
    r.json["max_relative_error"] = worst;
    return r;
}

} // namespace

Result run_demo(const DemoOptions &o) {
    if (o.name == "bell") return bell(o);
    if (o.name == "superposition") return superposition(o);
    if (o.name == "qft") return qft_demo(o);
    if (o.name == "trotter") return trotter_demo(o);
    if (o.name == "pauli-growth") return pauli_growth(o);
    if (o.name == "grover") return grover_demo(o);
    if (o.name == "qlsa-figure") return qlsa_figure(o);
    fail(ErrorKind::kInvalidInput, "unknown demo '" + o.name + "'");
}

} // namespace qsci::cli
