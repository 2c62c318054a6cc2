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

#include "qsci/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "qsci/error.hpp"

namespace qsci::io {

namespace {

[[noreturn]] void bad(const std::string &message) { fail(ErrorKind::kInvalidInput, message); }

const Json &field(const Json &j, const char *name, const char *what) {
    if (!j.is_object() || !j.contains(name)) {
        bad(std::string(what) + ": missing field '" + name + "'");
    }
    return j.at(name);
}

double number(const Json &j, const char *what) {
    if (!j.is_number()) {
        bad(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

std::size_t count(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        bad(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

template <class T>
std::vector<T> list_of(const Json &j, const char *what) {
    if (!j.is_array()) {
        bad(std::string(what) + " must be an array");
    }
    try {
        return j.get<std::vector<T>>();
    } catch (const nlohmann::json::exception &) {
        bad(std::string(what) + " has entries of the wrong type");
    }
}

} // namespace

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    if (j.is_object() && j.contains("re")) {
        return {number(j.at("re"), "re"), j.contains("im") ? number(j.at("im"), "im") : 0.0};
    }
    bad("expected a number or an [re, im] pair, got " + j.dump());
}

Json complex_to_json(Complex z) {
    if (z.imag() == 0.0) {
        return z.real();
    }
    return Json::array({z.real(), z.imag()});
}

Vector vector_from_json(const Json &j) {
    const Json *data = &j;
    if (j.is_object()) {
        data = &field(j, "data", "vector");
        if (j.contains("bit_order") && j.at("bit_order") != "big-endian") {
            bad("vector: only bit_order \"big-endian\" is supported");
        }
    }
    if (!data->is_array() || data->empty()) {
        bad("vector: expected a nonempty array");
    }
    Vector v(static_cast<Eigen::Index>(data->size()));
    for (std::size_t i = 0; i < data->size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json((*data)[i]);
    }
    return v;
}

Json vector_to_json(const Vector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v(i)));
    }
    return out;
}

Matrix matrix_from_json(const Json &j) {
    if (j.is_array()) {
        if (j.empty() || !j[0].is_array()) {
            bad("matrix: a bare matrix must be an array of rows");
        }
        const auto rows = static_cast<Eigen::Index>(j.size());
        const auto cols = static_cast<Eigen::Index>(j[0].size());
        Matrix m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (!j[static_cast<std::size_t>(r)].is_array() ||
                static_cast<Eigen::Index>(j[static_cast<std::size_t>(r)].size()) != cols) {
                bad("matrix: rows have different lengths");
            }
            for (Eigen::Index c = 0; c < cols; ++c) {
                m(r, c) = complex_from_json(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            }
        }
        return m;
    }
    const std::string format = j.is_object() && j.contains("format") ? j.at("format").get<std::string>() : "dense";
    std::size_t rows = 0, cols = 0;
    if (j.contains("n")) {
        rows = cols = count(j.at("n"), "matrix n");
    }
    if (j.contains("rows")) rows = count(j.at("rows"), "matrix rows");
    if (j.contains("cols")) cols = count(j.at("cols"), "matrix cols");
    if (rows == 0 || cols == 0) {
        bad("matrix: dimension 'n' (or 'rows'/'cols') must be positive");
    }
    const Json &data = field(j, "data", "matrix");
    if (!data.is_array()) {
        bad("matrix: data must be an array");
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    if (format == "dense") {
        // Row-major entries, flat or as nested rows.
        std::vector<Json> flat;
        for (const auto &e : data) {
            if (e.is_array() && !(e.size() == 2 && e[0].is_number() && e[1].is_number() && data.size() == rows * cols)) {
                for (const auto &x : e) flat.push_back(x);
            } else {
                flat.push_back(e);
            }
        }
        if (flat.size() != rows * cols) {
            bad("matrix: dense data has " + std::to_string(flat.size()) + " entries, expected " +
                std::to_string(rows * cols));
        }
        for (std::size_t i = 0; i < flat.size(); ++i) {
            m(static_cast<Eigen::Index>(i / cols), static_cast<Eigen::Index>(i % cols)) = complex_from_json(flat[i]);
        }
    } else if (format == "coo") {
        for (const auto &e : data) {
            if (!e.is_array() || e.size() != 3) {
                bad("matrix: coo entries must be [row, col, value]");
            }
            const std::size_t r = count(e[0], "coo row"), c = count(e[1], "coo col");
            if (r >= rows || c >= cols) {
                bad("matrix: coo index out of range");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += complex_from_json(e[2]);
        }
    } else {
        bad("matrix: unknown format '" + format + "'");
    }
    return m;
}

Json matrix_to_json(const Matrix &m) {
    Json data = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(complex_to_json(m(r, c)));
        }
    }
    Json out{{"format", "dense"}, {"data", data}};
    if (m.rows() == m.cols()) {
        out["n"] = m.rows();
    } else {
        out["rows"] = m.rows();
        out["cols"] = m.cols();
    }
    return out;
}

PauliSum pauli_sum_from_json(const Json &j) {
    const Json &terms = j.is_object() ? (j.contains("pauli_sum") ? field(j.at("pauli_sum"), "terms", "pauli sum")
                                                                   : field(j, "terms", "pauli sum"))
                                      : j;
    if (!terms.is_array() || terms.empty()) {
        bad("pauli sum: terms must be a nonempty array");
    }
    PauliSum sum;
    for (const auto &t : terms) {
        if (t.is_object()) {
            const Json &coeff = t.contains("coeff") ? t.at("coeff") : field(t, "coefficient", "pauli term");
            sum.terms.push_back({complex_from_json(coeff), field(t, "label", "pauli term").get<std::string>()});
        } else if (t.is_array() && t.size() == 2 && t[1].is_string()) {
            sum.terms.push_back({complex_from_json(t[0]), t[1].get<std::string>()});
        } else {
            bad("pauli sum: each term needs a coefficient and a label");
        }
    }
    const std::size_t n = sum.terms.front().label.size();
    for (const auto &t : sum.terms) {
        if (t.label.empty() || t.label.size() != n || t.label.find_first_not_of("IXYZ") != std::string::npos) {
            bad("pauli sum: invalid label '" + t.label + "'");
        }
    }
    return sum;
}

Json pauli_sum_to_json(const PauliSum &sum) {
    Json terms = Json::array();
    for (const auto &t : sum.terms) {
        terms.push_back({{"coeff", Json::array({t.coeff.real(), t.coeff.imag()})}, {"label", t.label}});
    }
    return {{"terms", terms}};
}

PhaseSequence phases_from_json(const Json &j) {
    PhaseSequence p;
    p.phases = list_of<double>(field(j, "phases", "phase file"), "phases");
    if (p.phases.empty()) {
        bad("phase file: phases must be nonempty");
    }
    p.parity = parse_parity(field(j, "parity", "phase file").get<std::string>());
    p.target = j.value("target", std::string{});
    p.kappa = j.contains("kappa") ? number(j.at("kappa"), "kappa") : 0.0;
    p.eps = j.contains("eps") ? number(j.at("eps"), "eps") : 0.0;
    return p;
}

Json phases_to_json(const PhaseSequence &p) {
    return {{"phases", p.phases}, {"parity", to_string(p.parity)}, {"target", p.target},
            {"kappa", p.kappa}, {"eps", p.eps}};
}

ChebyshevSeries series_from_json(const Json &j) {
    ChebyshevSeries s;
    s.coefficients = list_of<double>(field(j, "coefficients", "series file"), "coefficients");
    if (s.coefficients.empty()) {
        bad("series file: coefficients must be nonempty");
    }
    s.parity = j.contains("parity") ? parse_parity(j.at("parity").get<std::string>()) : detect_parity(s.coefficients);
    s.domain = j.value("domain", std::string{"[-1,1]"});
    s.scale = j.contains("scale") ? number(j.at("scale"), "scale") : 1.0;
    return s;
}

Json series_to_json(const ChebyshevSeries &s) {
    return {{"coefficients", s.coefficients}, {"parity", to_string(s.parity)}, {"domain", s.domain},
            {"scale", s.scale}};
}

Circuit circuit_from_json(const Json &j) {
    const std::size_t n = count(field(j, "num_qubits", "circuit"), "num_qubits");
    if (j.contains("bit_order") && j.at("bit_order") != "big-endian") {
        bad("circuit: only bit_order \"big-endian\" is supported");
    }
    Circuit c(n);
    for (const auto &op : field(j, "ops", "circuit")) {
        const std::string name = field(op, "name", "circuit op").get<std::string>();
        auto targets = list_of<std::size_t>(field(op, "targets", "circuit op"), "targets");
        if (name == "measure") {
            c.measure(std::move(targets));
            continue;
        }
        auto controls = op.contains("controls") ? list_of<std::size_t>(op.at("controls"), "controls")
                                                : std::vector<std::size_t>{};
        auto states = op.contains("control_states") ? list_of<int>(op.at("control_states"), "control_states")
                                                    : std::vector<int>{};
        if (name == "unitary") {
            c.add(make_unitary_op(GateMatrix(matrix_from_json(field(op, "matrix", "unitary op"))),
                                  std::move(targets), std::move(controls), std::move(states)));
        } else {
            auto params = op.contains("params") ? list_of<double>(op.at("params"), "params") : std::vector<double>{};
            c.add(name, std::move(targets), std::move(params), std::move(controls), std::move(states));
        }
    }
    if (j.contains("global_phase")) {
        c.add_global_phase(number(j.at("global_phase"), "global_phase"));
    }
    return c;
}

Json circuit_to_json(const Circuit &circuit) {
    Json ops = Json::array();
    for (const auto &o : circuit.ops()) {
        if (const auto *g = std::get_if<GateOp>(&o)) {
            Json op{{"name", is_standard_gate(g->name) ? g->name : "unitary"},
                    {"targets", g->targets}};
            if (!g->params.empty()) op["params"] = g->params;
            if (!g->controls.empty()) {
                op["controls"] = g->controls;
                op["control_states"] = g->control_states;
            }
            if (!is_standard_gate(g->name)) {
                op["matrix"] = matrix_to_json(g->gate.matrix());
                op["label"] = g->name;
            }
            ops.push_back(std::move(op));
        } else {
            ops.push_back({{"name", "measure"}, {"targets", std::get<Measurement>(o).qubits}});
        }
    }
    Json out{{"num_qubits", circuit.num_qubits()}, {"bit_order", "big-endian"}, {"ops", ops}};
    if (circuit.global_phase() != 0.0) {
        out["global_phase"] = circuit.global_phase();
    }
    return out;
}

Histogram histogram_from_json(const Json &j) {
    Histogram h;
    h.shots = count(field(j, "shots", "histogram"), "shots");
    h.bit_order = j.value("bit_order", std::string{"big-endian"});
    std::size_t total = 0;
    for (const auto &[key, value] : field(j, "counts", "histogram").items()) {
        h.counts[key] = count(value, "count");
        total += h.counts[key];
    }
    if (total != h.shots) {
        bad("histogram: counts sum to " + std::to_string(total) + " but shots is " + std::to_string(h.shots));
    }
    return h;
}

Json histogram_to_json(const Histogram &h) {
    Json counts = Json::object();
    for (const auto &[key, value] : h.counts) {
        counts[key] = value;
    }
    return {{"shots", h.shots}, {"counts", counts}, {"bit_order", h.bit_order}};
}

HamiltonianSpec hamiltonian_from_json(const Json &j) {
    HamiltonianSpec spec;
    spec.pauli_sum = pauli_sum_from_json(j);
    if (j.contains("t")) spec.t = number(j.at("t"), "t");
    if (j.contains("r")) spec.r = count(j.at("r"), "r");
    if (j.contains("K")) spec.K = count(j.at("K"), "K");
    if (j.contains("eps")) spec.eps = number(j.at("eps"), "eps");
    return spec;
}

OdeProblem ode_from_json(const Json &j) {
    OdeProblem p;
    p.A = matrix_from_json(field(j, "A", "ode spec"));
    p.b = vector_from_json(field(j, "b", "ode spec"));
    p.x0 = vector_from_json(field(j, "x0", "ode spec"));
    if (j.contains("T")) p.T = number(j.at("T"), "T");
    if (j.contains("k")) p.k = count(j.at("k"), "k");
    if (j.contains("m")) p.m = count(j.at("m"), "m");
    p.p = j.contains("p") ? count(j.at("p"), "p") : p.m;
    if (j.contains("eps")) p.eps = number(j.at("eps"), "eps");
    if (j.contains("kappa")) p.kappa = number(j.at("kappa"), "kappa");
    return p;
}

Json report_to_json(const SolveReport &r) {
    Json out{{"route", r.route},
             {"solution", vector_to_json(r.solution)},
             {"success_prob", r.success_prob},
             {"degree_or_bits", r.degree_or_bits},
             {"window", {{"offset", r.window.offset}, {"length", r.window.length}}},
             {"window_norm2", r.window_norm2},
             {"complement_norm2", r.complement_norm2},
             {"kappa", r.kappa_used},
             {"warnings", r.warnings}};
    if (r.residual) {
        out["residual"] = *r.residual;
    }
    return out;
}

Json ode_report_to_json(const OdeReport &r) {
    Json out = report_to_json(r.linear);
    out["route"] = "ode";
    out["x_final"] = vector_to_json(r.x_final);
    out["clock_prob"] = r.clock_prob;
    out["success_prob"] = r.success_prob;
    out["linear_success_prob"] = r.linear.success_prob;
    out["warnings"] = r.warnings;
    return out;
}

Json read_json(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        bad("cannot open '" + path.string() + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        bad("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

void write_text_atomic(const std::filesystem::path &path, const std::string &content) {
    const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : ".";
    std::random_device rd;
    const std::filesystem::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            bad("cannot write '" + path.string() + "'");
        }
        out << content;
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            bad("failed while writing '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        bad("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

namespace {

std::string infer_kind(const Json &j) {
    if (j.is_array()) {
        return !j.empty() && j[0].is_array() && !(j[0].size() == 2 && j[0][0].is_number()) ? "matrix" : "vector";
    }
    if (!j.is_object()) return "unknown";
    if (j.contains("phases")) return "phases";
    if (j.contains("coefficients")) return "series";
    if (j.contains("ops")) return "circuit";
    if (j.contains("counts")) return "histogram";
    if (j.contains("x0")) return "ode";
    if (j.contains("terms") || j.contains("pauli_sum")) return j.contains("t") ? "hamiltonian" : "pauli";
    if (j.contains("format") || j.contains("n")) return "matrix";
    if (j.contains("data")) return "vector";
    return "unknown";
}

} // namespace

std::vector<std::string> diagnose(const Json &j, const std::string &kind_in, const std::string &purpose) {
    std::vector<std::string> out;
    const std::string kind = kind_in == "auto" ? infer_kind(j) : kind_in;
    try {
        if (kind == "vector") {
            const Vector v = vector_from_json(j);
            if (!v.allFinite()) out.push_back("vector: entries must be finite");
            else if (v.norm() == 0.0) out.push_back("vector: all entries are zero; amplitude encoding is undefined");
        } else if (kind == "matrix") {
            const Matrix m = matrix_from_json(j);
            if (!m.allFinite()) out.push_back("matrix: entries must be finite");
            const bool square = m.rows() == m.cols();
            if ((purpose == "hhl" || purpose == "qlsa-pd" || purpose == "hermitian") && square &&
                !is_hermitian(m)) {
                out.push_back("matrix: not Hermitian (max |A - A^dagger| = " +
                              std::to_string(hermiticity_defect(m)) + "), required by " + purpose);
            }
            if (!square && (purpose == "hhl" || purpose.rfind("qlsa", 0) == 0)) {
                out.push_back("matrix: linear solvers need a square matrix");
            }
        } else if (kind == "pauli" || kind == "hamiltonian") {
            const HamiltonianSpec spec = hamiltonian_from_json(j);
            if (kind == "hamiltonian") {
                for (const auto &t : spec.pauli_sum.terms) {
                    if (std::abs(t.coeff.imag()) > 1e-12) {
                        out.push_back("hamiltonian: term '" + t.label + "' has a complex coefficient; H is not Hermitian");
                    }
                }
                if (spec.r == 0) out.push_back("hamiltonian: r must be at least 1");
            }
        } else if (kind == "phases") {
            if (!j.contains("parity")) {
                out.push_back("phase file: missing field 'parity'");
            }
            if (!j.contains("phases")) {
                out.push_back("phase file: missing field 'phases'");
            }
            if (out.empty()) {
                const PhaseSequence p = phases_from_json(j);
                const Parity expected = p.degree() % 2 == 0 ? Parity::kEven : Parity::kOdd;
                if (p.parity != expected) {
                    out.push_back("phase file: parity '" + to_string(p.parity) + "' does not match degree " +
                                  std::to_string(p.degree()));
                }
                if (!j.contains("kappa")) out.push_back("phase file: missing field 'kappa'");
            }
        } else if (kind == "series") {
            const ChebyshevSeries s = series_from_json(j);
            const Parity actual = detect_parity(s.coefficients);
            if (s.parity != Parity::kMixed && actual != Parity::kMixed && actual != s.parity) {
                out.push_back("series: declared parity '" + to_string(s.parity) + "' but coefficients are " +
                              to_string(actual));
            }
            if (s.parity != Parity::kMixed && actual == Parity::kMixed) {
                out.push_back("series: declared parity '" + to_string(s.parity) + "' but coefficients are mixed");
            }
            if (max_abs(s) > 1.0 + 1e-9) {
                out.push_back("series: |P| exceeds 1 on [-1, 1]");
            }
        } else if (kind == "circuit") {
            static_cast<void>(circuit_from_json(j));
        } else if (kind == "histogram") {
            static_cast<void>(histogram_from_json(j));
        } else if (kind == "ode") {
            const OdeProblem p = ode_from_json(j);
            static_cast<void>(ode_clock_build(p));
        } else {
            out.push_back("unrecognized document: cannot tell which file format it follows");
        }
    } catch (const Error &e) {
        out.emplace_back(e.what());
    } catch (const nlohmann::json::exception &e) {
        out.emplace_back(std::string("malformed document: ") + e.what());
    }
    return out;
}

} // namespace qsci::io
