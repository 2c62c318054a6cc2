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
#include "qsci/ode.hpp"
#include "qsci/pde.hpp"
#include "qsci/solvers.hpp"
#include "qsci_ref/oracles.hpp"

namespace qsci::cli {

namespace {

std::string need(const std::string &value, const char *flag, const std::string &route) {
    if (value.empty()) {
        fail(ErrorKind::kInvalidInput, "solve " + route + ": " + flag + " is required");
    }
    return value;
}

LinearSystemProblem load_problem(const SolveOptions &o) {
    LinearSystemProblem p;
    p.A = io::matrix_from_json(io::read_json(need(o.matrix, "--matrix", o.route)));
    p.b = io::vector_from_json(io::read_json(need(o.rhs, "--rhs", o.route)));
    p.kappa = o.kappa.value_or(0.0);
    p.eps = o.eps.value_or(1e-3);
    p.alpha = o.alpha;
    return p;
}

io::Json classical_check(const Vector &quantum, const Vector &classical) {
    const Vector c = classical.normalized();
    const Complex overlap = c.dot(quantum);
    const Vector aligned = std::abs(overlap) > 0.0 ? Vector(quantum * (std::abs(overlap) / overlap)) : quantum;
    double worst = 0.0;
    const double floor = 1e-12 * c.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (std::abs(c(i)) > floor) {
            worst = std::max(worst, std::abs(aligned(i) - c(i)) / std::abs(c(i)));
        }
    }
    return {{"fidelity", vector_fidelity(quantum, c)}, {"max_relative_error", worst},
            {"solution", io::vector_to_json(c)}};
}

void add_solution_rows(Result &r, const Vector &solution) {
    r.csv_header = {"index", "re", "im"};
    for (Eigen::Index i = 0; i < solution.size(); ++i) {
        r.csv_rows.push_back({std::to_string(i), format_double(solution(i).real()), format_double(solution(i).imag())});
    }
}

Result linear(const SolveOptions &o) {
    const LinearSystemProblem p = load_problem(o);
    SolveReport rep;
    if (o.route == "qlsa-cheb") {
        rep = qlsa_chebyshev(p);
    } else if (o.route == "qlsa-qsp") {
        rep = qlsa_qsp(p, io::phases_from_json(io::read_json(need(o.phases, "--phases", o.route))));
    } else if (o.route == "qlsa-pd") {
        rep = qlsa_pd(p);
    } else {
        rep = hhl(p, {.clock_bits = o.clock_bits, .C = o.C, .t0 = o.t0});
    }
    Result r{io::report_to_json(rep)};
    r.json["classical_check"] = classical_check(rep.solution, ref::dense_solve(p.A, p.b));
    add_solution_rows(r, rep.solution);
    return r;
}

Result ode(const SolveOptions &o) {
    OdeProblem p = io::ode_from_json(io::read_json(need(o.spec, "--spec", o.route)));
    if (o.eps) p.eps = *o.eps;
    if (o.kappa) p.kappa = o.kappa;
    const OdeReport rep = ode_solve(p);
    Result r{io::ode_report_to_json(rep)};
    r.json["classical_check"] = classical_check(rep.x_final, ref::rk45_linear(p.A, p.b, p.x0, p.T));
    add_solution_rows(r, rep.x_final);
    return r;
}

Result poisson(const SolveOptions &o) {
    const std::size_t dim = static_cast<std::size_t>(std::pow(static_cast<double>(o.n), static_cast<double>(o.d)));
    const Vector f = o.rhs.empty() ? Vector(Vector::Ones(static_cast<Eigen::Index>(dim)))
                                   : io::vector_from_json(io::read_json(o.rhs));
    const LinearSystemProblem p = poisson_problem(o.n, o.d, f, o.eps.value_or(1e-3));
    const SolveReport rep = qlsa_pd(p);
    Result r{io::report_to_json(rep)};
    r.json["route"] = "poisson";
    r.json["grid"] = {{"n", o.n}, {"d", o.d}};
    r.json["classical_check"] = classical_check(rep.solution, ref::dense_solve(p.A, f));
    add_solution_rows(r, rep.solution);
    return r;
}

Result wave(const SolveOptions &o) {
    const double h = o.h.value_or(1.0 / static_cast<double>(o.n + 1));
    const WaveGenerator gen = wave_generator(o.n, h);
    Vector init = Vector::Zero(gen.H.rows());
    for (std::size_t i = 0; i < o.n; ++i) {
        init(static_cast<Eigen::Index>(i)) = std::sin(kPi * static_cast<double>(i + 1) * h);
    }
    init.normalize();
    const Vector z = wave_evolve(gen, init, o.t);
    const Vector exact = ref::expm(Complex(0, -o.t) * gen.H) * init;
    const Vector phi_v = z.head(static_cast<Eigen::Index>(o.n));
    Result r{{{"route", "wave"},
              {"n", o.n},
              {"h", h},
              {"t", o.t},
              {"norm", z.norm()},
              {"phi_V", io::vector_to_json(phi_v)},
              {"phi_E", io::vector_to_json(z.tail(static_cast<Eigen::Index>(o.n + 1)))},
              {"classical_check", {{"max_abs_error", (z - exact).cwiseAbs().maxCoeff()},
                                   {"fidelity", vector_fidelity(z, exact)}}},
              {"warnings", io::Json::array()}}};
    add_solution_rows(r, phi_v);
    return r;
}

} // namespace

Result run_solve(const SolveOptions &o, int &status) {
    Result r;
    if (o.route == "qlsa-cheb" || o.route == "qlsa-qsp" || o.route == "qlsa-pd" || o.route == "hhl") {
        r = linear(o);
    } else if (o.route == "ode") {
        r = ode(o);
    } else if (o.route == "poisson") {
        r = poisson(o);
    } else if (o.route == "wave") {
        r = wave(o);
    } else {
        fail(ErrorKind::kInvalidInput, "unknown route '" + o.route + "'");
    }
    status = kOk;
    if (o.min_fidelity) {
        const double f = r.json["classical_check"]["fidelity"].get<double>();
        r.json["min_fidelity"] = *o.min_fidelity;
        if (f < *o.min_fidelity) {
            r.json["warnings"].push_back("fidelity " + format_double(f) + " is below the required " +
                                         format_double(*o.min_fidelity));
            status = kToleranceNotMet;
        }
    }
    return r;
}

} // namespace qsci::cli
