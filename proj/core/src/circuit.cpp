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

#include "qsci/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>

#include "qsci/error.hpp"

namespace qsci {

namespace {

std::size_t bit_of(std::size_t qubit, std::size_t n) { return n - 1 - qubit; }

void validate_op(const GateOp &op) {
    require(!op.targets.empty(), "gate '" + op.name + "' has no targets");
    require(op.gate.num_qubits() == op.targets.size(),
            "gate '" + op.name + "' acts on " + std::to_string(op.gate.num_qubits()) +
                " qubit(s) but lists " + std::to_string(op.targets.size()) + " target(s)");
    require(op.control_states.size() == op.controls.size(),
            "gate '" + op.name + "': one control state per control");
    std::set<std::size_t> seen;
    for (std::size_t q : op.targets) {
        require(seen.insert(q).second, "gate '" + op.name + "': repeated qubit index");
    }
    for (std::size_t q : op.controls) {
        require(seen.insert(q).second, "gate '" + op.name + "': targets and controls overlap");
    }
    for (int s : op.control_states) {
        require(s == 0 || s == 1, "gate '" + op.name + "': control states must be 0 or 1");
    }
}

std::vector<int> default_states(const std::vector<std::size_t> &controls, std::vector<int> states) {
    if (states.empty()) {
        states.assign(controls.size(), 1);
    }
    return states;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

std::string adjoint_name(const std::string &name) {
    static const std::map<std::string, std::string> kSwap = {
        {"S", "Sdg"}, {"Sdg", "S"}, {"T", "Tdg"}, {"Tdg", "T"}};
    if (auto it = kSwap.find(name); it != kSwap.end()) {
        return it->second;
    }
    return name;
}

} // namespace

GateOp GateOp::adjoint() const {
    GateOp out = *this;
    out.gate = gate.adjoint();
    if (is_standard_gate(name)) {
        out.name = adjoint_name(name);
        for (double &p : out.params) {
            p = -p;
        }
    } else if (name.size() > 3 && name.compare(name.size() - 3, 3, "_dg") == 0) {
        out.name = name.substr(0, name.size() - 3);
    } else if (name != "unitary") {
        out.name = name + "_dg";
    }
    return out;
}

GateOp make_op(std::string_view name, std::vector<std::size_t> targets, std::vector<double> params,
               std::vector<std::size_t> controls, std::vector<int> control_states) {
    GateMatrix g = standard_gate(name, params);
    GateOp op{std::string(name), std::move(params), std::move(g), std::move(targets),
              std::move(controls), {}};
    op.control_states = default_states(op.controls, std::move(control_states));
    validate_op(op);
    return op;
}

GateOp make_unitary_op(GateMatrix gate, std::vector<std::size_t> targets,
                       std::vector<std::size_t> controls, std::vector<int> control_states,
                       std::string name) {
    GateOp op{std::move(name), {}, std::move(gate), std::move(targets), std::move(controls), {}};
    op.control_states = default_states(op.controls, std::move(control_states));
    validate_op(op);
    return op;
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    require(num_qubits >= 1, "a circuit needs at least one qubit");
}

void Circuit::check_qubit(std::size_t q) const {
    require(q < num_qubits_, "qubit index " + std::to_string(q) + " out of range for " +
                                 std::to_string(num_qubits_) + "-qubit circuit");
}

bool Circuit::has_measurements() const {
    return std::any_of(ops_.begin(), ops_.end(),
                       [](const Operation &o) { return std::holds_alternative<Measurement>(o); });
}

std::size_t Circuit::gate_count() const {
    return static_cast<std::size_t>(std::count_if(
        ops_.begin(), ops_.end(), [](const Operation &o) { return std::holds_alternative<GateOp>(o); }));
}

Circuit &Circuit::add(GateOp op) {
    validate_op(op);
    for (std::size_t q : op.targets) {
        check_qubit(q);
    }
    for (std::size_t q : op.controls) {
        check_qubit(q);
    }
    ops_.emplace_back(std::move(op));
    return *this;
}

Circuit &Circuit::add(std::string_view name, std::vector<std::size_t> targets,
                      std::vector<double> params, std::vector<std::size_t> controls,
                      std::vector<int> control_states) {
    return add(make_op(name, std::move(targets), std::move(params), std::move(controls),
                       std::move(control_states)));
}

Circuit &Circuit::measure(std::vector<std::size_t> qubits) {
    require(!qubits.empty(), "measurement needs at least one qubit");
    for (std::size_t q : qubits) {
        check_qubit(q);
    }
    ops_.emplace_back(Measurement{std::move(qubits)});
    return *this;
}

Circuit &Circuit::measure_all() {
    std::vector<std::size_t> all(num_qubits_);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return measure(std::move(all));
}

Circuit &Circuit::add_global_phase(double phase) noexcept {
    global_phase_ += phase;
    return *this;
}

Circuit &Circuit::compose(const Circuit &other, std::span<const std::size_t> mapping) {
    std::vector<std::size_t> map(mapping.begin(), mapping.end());
    if (map.empty()) {
        require(other.num_qubits() <= num_qubits_, "compose: circuit is wider than the target");
        map.resize(other.num_qubits());
        std::iota(map.begin(), map.end(), std::size_t{0});
    }
    require(map.size() == other.num_qubits(), "compose: mapping must cover every qubit");
    auto remap = [&](std::vector<std::size_t> qs) {
        for (std::size_t &q : qs) {
            q = map[q];
        }
        return qs;
    };
    for (const Operation &o : other.ops()) {
        if (const auto *g = std::get_if<GateOp>(&o)) {
            GateOp op = *g;
            op.targets = remap(op.targets);
            op.controls = remap(op.controls);
            add(std::move(op));
        } else {
            measure(remap(std::get<Measurement>(o).qubits));
        }
    }
    global_phase_ += other.global_phase();
    return *this;
}

void apply_in_place(Vector &amplitudes, std::size_t num_qubits, const GateOp &op) {
    require(static_cast<std::size_t>(amplitudes.size()) == (std::size_t{1} << num_qubits),
            "apply: amplitude count does not match register width");
    for (std::size_t q : op.targets) {
        require(q < num_qubits, "apply: target index out of range");
    }
    for (std::size_t q : op.controls) {
        require(q < num_qubits, "apply: control index out of range");
    }

    const std::size_t k = op.targets.size();
    std::vector<std::size_t> fixed;
    std::size_t control_mask = 0;
    for (std::size_t q : op.targets) {
        fixed.push_back(bit_of(q, num_qubits));
    }
    for (std::size_t c = 0; c < op.controls.size(); ++c) {
        const std::size_t b = bit_of(op.controls[c], num_qubits);
        fixed.push_back(b);
        if (op.control_states[c] == 1) {
            control_mask |= std::size_t{1} << b;
        }
    }
    std::sort(fixed.begin(), fixed.end());

    const std::size_t gdim = std::size_t{1} << k;
    std::vector<std::size_t> offsets(gdim, 0);
    for (std::size_t g = 0; g < gdim; ++g) {
        for (std::size_t j = 0; j < k; ++j) {
            if ((g >> (k - 1 - j)) & 1U) {
                offsets[g] |= std::size_t{1} << bit_of(op.targets[j], num_qubits);
            }
        }
    }

    const std::size_t free_count = std::size_t{1} << (num_qubits - fixed.size());
    auto base_index = [&](std::size_t counter) {
        std::size_t idx = counter;
        for (std::size_t pos : fixed) {
            const std::size_t low = idx & ((std::size_t{1} << pos) - 1);
            idx = ((idx >> pos) << (pos + 1)) | low;
        }
        return idx | control_mask;
    };

    Complex *a = amplitudes.data();
    const Matrix &u = op.gate.matrix();
    if (k == 1) {
        const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
        const std::size_t off = offsets[1];
        for (std::size_t c = 0; c < free_count; ++c) {
            const std::size_t i0 = base_index(c);
            const Complex x0 = a[i0];
            const Complex x1 = a[i0 | off];
            a[i0] = u00 * x0 + u01 * x1;
            a[i0 | off] = u10 * x0 + u11 * x1;
        }
        return;
    }
    std::vector<Complex> in(gdim), out(gdim);
    for (std::size_t c = 0; c < free_count; ++c) {
        const std::size_t base = base_index(c);
        for (std::size_t g = 0; g < gdim; ++g) {
            in[g] = a[base | offsets[g]];
        }
        for (std::size_t r = 0; r < gdim; ++r) {
            Complex acc = 0.0;
            for (std::size_t g = 0; g < gdim; ++g) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(g)) * in[g];
            }
            out[r] = acc;
        }
        for (std::size_t g = 0; g < gdim; ++g) {
            a[base | offsets[g]] = out[g];
        }
    }
}

StateVector apply(const StateVector &state, const GateOp &op) {
    Vector a = state.amplitudes();
    apply_in_place(a, state.num_qubits(), op);
    return StateVector::normalize(std::move(a));
}

StateVector run_gates(const Circuit &circuit, const StateVector &initial) {
    require(circuit.num_qubits() == initial.num_qubits(),
            "run: circuit width " + std::to_string(circuit.num_qubits()) +
                " does not match state width " + std::to_string(initial.num_qubits()));
    Vector a = initial.amplitudes();
    for (const Operation &o : circuit.ops()) {
        if (const auto *g = std::get_if<GateOp>(&o)) {
            apply_in_place(a, circuit.num_qubits(), *g);
        }
    }
    if (circuit.global_phase() != 0.0) {
        a *= std::polar(1.0, circuit.global_phase());
    }
    return StateVector::normalize(std::move(a));
}

StateVector run(const Circuit &circuit, const StateVector &initial) {
    require(!circuit.has_measurements(), "run: circuit contains measurements; use sample instead");
    return run_gates(circuit, initial);
}

Matrix embedded_matrix(const GateOp &op, std::size_t num_qubits) {
    require(num_qubits <= 10, "embedded_matrix: limited to 10 qubits");
    const std::size_t dim = std::size_t{1} << num_qubits;
    auto bit = [&](std::size_t index, std::size_t q) { return (index >> bit_of(q, num_qubits)) & 1U; };
    std::size_t touched = 0;
    for (std::size_t q : op.targets) {
        touched |= std::size_t{1} << bit_of(q, num_qubits);
    }
    for (std::size_t q : op.controls) {
        touched |= std::size_t{1} << bit_of(q, num_qubits);
    }
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~touched) != (j & ~touched)) {
                continue;
            }
            bool controls_equal = true;
            bool active = true;
            for (std::size_t c = 0; c < op.controls.size(); ++c) {
                controls_equal &= bit(i, op.controls[c]) == bit(j, op.controls[c]);
                active &= static_cast<int>(bit(i, op.controls[c])) == op.control_states[c];
            }
            if (!controls_equal) {
                continue;
            }
            std::size_t gi = 0, gj = 0;
            for (std::size_t q : op.targets) {
                gi = (gi << 1U) | bit(i, q);
                gj = (gj << 1U) | bit(j, q);
            }
            const auto r = static_cast<Eigen::Index>(i), c = static_cast<Eigen::Index>(j);
            if (active) {
                m(r, c) = op.gate.matrix()(static_cast<Eigen::Index>(gi), static_cast<Eigen::Index>(gj));
            } else if (gi == gj) {
                m(r, c) = 1.0;
            }
        }
    }
    return m;
}

Matrix circuit_unitary(const Circuit &circuit) {
    require(!circuit.has_measurements(), "circuit_unitary: circuit contains measurements");
    require(circuit.num_qubits() <= 14, "circuit_unitary: limited to 14 qubits");
    const auto dim = Eigen::Index{1} << circuit.num_qubits();
    Matrix u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Vector a = Vector::Zero(dim);
        a(col) = 1.0;
        for (const Operation &o : circuit.ops()) {
            apply_in_place(a, circuit.num_qubits(), std::get<GateOp>(o));
        }
        u.col(col) = a;
    }
    if (circuit.global_phase() != 0.0) {
        u *= std::polar(1.0, circuit.global_phase());
    }
    return u;
}

Circuit inverse(const Circuit &circuit) {
    require(!circuit.has_measurements(), "inverse: measurements are not reversible");
    Circuit out(circuit.num_qubits());
    for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) {
        out.add(std::get<GateOp>(*it).adjoint());
    }
    out.add_global_phase(-circuit.global_phase());
    return out;
}

double outcome_probability(const StateVector &state, std::size_t qubit, int outcome) {
    require(qubit < state.num_qubits(), "measure: qubit index out of range");
    require(outcome == 0 || outcome == 1, "measure: outcome must be 0 or 1");
    const std::size_t mask = std::size_t{1} << bit_of(qubit, state.num_qubits());
    double p = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (((i & mask) != 0) == (outcome == 1)) {
            p += state.probability(i);
        }
    }
    return p;
}

StateVector project(const StateVector &state, std::size_t qubit, int outcome) {
    const double p = outcome_probability(state, qubit, outcome);
    if (p <= 0.0) {
        fail(ErrorKind::kPostselection, "project: outcome has probability zero");
    }
    const std::size_t mask = std::size_t{1} << bit_of(qubit, state.num_qubits());
    Vector a = state.amplitudes();
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if (((i & mask) != 0) != (outcome == 1)) {
            a(static_cast<Eigen::Index>(i)) = 0.0;
        }
    }
    return StateVector::normalize(std::move(a));
}

MeasureResult measure(const StateVector &state, std::size_t qubit, double uniform) {
    const double p0 = outcome_probability(state, qubit, 0);
    const int outcome = uniform < p0 ? 0 : 1;
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    return {outcome, p, project(state, qubit, outcome)};
}

MeasureResult measure(const StateVector &state, std::size_t qubit, std::uint64_t seed) {
    return measure(state, qubit, shot_uniform(seed, 0));
}

double shot_uniform(std::uint64_t seed, std::uint64_t index) noexcept {
    const std::uint64_t x = splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL));
    return static_cast<double>(x >> 11U) * 0x1.0p-53;
}

namespace {

/// Marginal probabilities over `qubits`, indexed by the outcome read in list order.
std::vector<double> marginal(const StateVector &state, std::span<const std::size_t> qubits) {
    const std::size_t n = state.num_qubits();
    for (std::size_t q : qubits) {
        require(q < n, "sample: qubit index out of range");
    }
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        std::size_t key = 0;
        for (std::size_t q : qubits) {
            key = (key << 1U) | ((i >> bit_of(q, n)) & 1U);
        }
        probs[key] += state.probability(i);
    }
    return probs;
}

} // namespace

std::map<std::string, double> marginal_distribution(const StateVector &state,
                                                    std::span<const std::size_t> qubits) {
    const std::vector<double> probs = marginal(state, qubits);
    std::map<std::string, double> out;
    for (std::size_t key = 0; key < probs.size(); ++key) {
        if (probs[key] > 0.0) {
            out[basis_label(key, qubits.size())] = probs[key];
        }
    }
    return out;
}

Histogram sample_state(const StateVector &state, std::span<const std::size_t> qubits,
                       std::size_t shots, std::uint64_t seed, SampleOptions options) {
    require(shots >= 1, "sample: shots must be at least 1");
    require(!qubits.empty(), "sample: no qubits to read");
    const std::vector<double> probs = marginal(state, qubits);
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    const double total = cdf.back();

    const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, 64U));
    std::vector<std::vector<std::size_t>> partial(workers, std::vector<std::size_t>(probs.size(), 0));
    auto work = [&](unsigned w) {
        const std::size_t begin = shots * w / workers;
        const std::size_t end = shots * (w + 1) / workers;
        for (std::size_t s = begin; s < end; ++s) {
            const double u = shot_uniform(seed, s) * total;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            std::size_t key = static_cast<std::size_t>(it - cdf.begin());
            key = std::min(key, cdf.size() - 1);
            while (probs[key] == 0.0 && key > 0) {
                --key; // rounding landed on an empty tail bucket
            }
            ++partial[w][key];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    Histogram h;
    h.shots = shots;
    for (std::size_t key = 0; key < probs.size(); ++key) {
        std::size_t c = 0;
        for (const auto &p : partial) {
            c += p[key];
        }
        if (c > 0) {
            h.counts[basis_label(key, qubits.size())] = c;
        }
    }
    return h;
}

Histogram sample(const Circuit &circuit, std::size_t shots, std::uint64_t seed, SampleOptions options) {
    std::vector<std::size_t> qubits;
    bool measuring = false;
    for (const Operation &o : circuit.ops()) {
        if (const auto *m = std::get_if<Measurement>(&o)) {
            measuring = true;
            qubits.insert(qubits.end(), m->qubits.begin(), m->qubits.end());
        } else {
            require(!measuring, "sample: gates after a measurement are not supported");
        }
    }
    if (qubits.empty()) {
        qubits.resize(circuit.num_qubits());
        std::iota(qubits.begin(), qubits.end(), std::size_t{0});
    }
    const StateVector final_state = run_gates(circuit, zero_state(circuit.num_qubits()));
    return sample_state(final_state, qubits, shots, seed, options);
}

std::size_t endianness_convert(std::size_t index, std::size_t width) {
    require(width < 64 && index < (std::size_t{1} << width), "endianness_convert: index wider than width");
    std::size_t out = 0;
    for (std::size_t b = 0; b < width; ++b) {
        out = (out << 1U) | ((index >> b) & 1U);
    }
    return out;
}

Histogram endianness_convert(const Histogram &histogram, std::size_t width) {
    Histogram out;
    out.shots = histogram.shots;
    out.bit_order = histogram.bit_order == "big-endian" ? "little-endian" : "big-endian";
    for (const auto &[key, count] : histogram.counts) {
        require(key.size() == width, "endianness_convert: key '" + key + "' does not have width " +
                                         std::to_string(width));
        out.counts[std::string(key.rbegin(), key.rend())] += count;
    }
    return out;
}

} // namespace qsci
