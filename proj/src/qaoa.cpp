// Copyright 2026 The qaoafs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaoafs/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qaoafs/exact_solver.hpp"
#include "qaoafs/rng.hpp"

namespace qaoafs {

MixerOperator MixerOperator::pauli(PauliString p) {
    if (p.weight() == 1) return MixerOperator(MixerKind::SinglePauli, std::move(p));
    if (p.weight() == 2) return MixerOperator(MixerKind::TwoPauli, std::move(p));
    throw std::invalid_argument("mixer Pauli strings must have weight 1 or 2, got " + p.str());
}

MixerOperator MixerOperator::parse(std::string_view text) {
    if (text == "GlobalX") return global_x();
    if (text == "GlobalY") return global_y();
    return pauli(PauliString::parse(text));
}

std::vector<PauliString> MixerOperator::terms(std::size_t n) const {
    std::vector<PauliString> out;
    switch (kind_) {
        case MixerKind::GlobalX:
        case MixerKind::GlobalY: {
            const Pauli p = kind_ == MixerKind::GlobalX ? Pauli::X : Pauli::Y;
            for (std::size_t q = 0; q < n; ++q) out.push_back(PauliString::single(q, p));
            break;
        }
        case MixerKind::SinglePauli:
        case MixerKind::TwoPauli:
            if (string_->max_qubit() >= n) {
                throw std::out_of_range("mixer " + string_->str() + " exceeds " + std::to_string(n) + " qubits");
            }
            out.push_back(*string_);
            break;
    }
    return out;
}

void MixerOperator::apply(StateVector& state, double beta) const {
    for (const auto& t : terms(state.num_qubits())) state.apply_pauli_rotation(t, beta);
}

StateVector MixerOperator::act(const StateVector& state) const {
    const auto ts = terms(state.num_qubits());
    std::vector<Complex> sum(state.dim(), Complex{});
    for (const auto& t : ts) {
        StateVector term = state;
        term.apply_pauli(t);
        for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += term[x];
    }
    return StateVector::from_amplitudes(std::move(sum));
}

std::string MixerOperator::name() const {
    switch (kind_) {
        case MixerKind::GlobalX: return "GlobalX";
        case MixerKind::GlobalY: return "GlobalY";
        default: return string_->str();
    }
}

std::vector<std::pair<std::size_t, std::size_t>> round_robin_pairs(std::size_t n) {
    // Circle method: slot 0 stays fixed, the others rotate one step per round.
    // For odd n a phantom player m - 1 = n sits out one pair each round.
    const std::size_t m = n % 2 == 0 ? n : n + 1;
    std::vector<std::size_t> slot(m);
    std::iota(slot.begin(), slot.end(), std::size_t{0});
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t round = 0; round + 1 < m; ++round) {
        for (std::size_t k = 0; k < m / 2; ++k) {
            const std::size_t a = slot[k], b = slot[m - 1 - k];
            if (a < n && b < n) out.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::rotate(slot.begin() + 1, slot.end() - 1, slot.end());
    }
    return out;
}

Circuit build_cost_circuit(const IsingHamiltonian& h, double gamma, CircuitForm form) {
    Circuit c(h.n);
    // exp(-i gamma h_i Z_i) = RZ(2 gamma h_i)
    for (std::size_t i = 0; i < h.n; ++i) {
        if (h.linear[i] != 0.0) c.add(Gate::rz(i, 2.0 * gamma * h.linear[i]));
    }
    std::map<std::pair<std::size_t, std::size_t>, double> coupling;
    for (const auto& cp : h.couplings) coupling[{cp.i, cp.j}] += cp.value;
    for (const auto& key : round_robin_pairs(h.n)) {
        const auto it = coupling.find(key);
        if (it == coupling.end() || it->second == 0.0) continue;
        const auto [i, j] = key;
        if (form == CircuitForm::Rotations) {
            c.add(Gate::pauli_rotation(PauliString::pair(i, Pauli::Z, j, Pauli::Z), gamma * it->second));
        } else {
            c.add(Gate::cnot(i, j));
            c.add(Gate::rz(j, 2.0 * gamma * it->second));
            c.add(Gate::cnot(i, j));
        }
    }
    return c;
}

Circuit build_mixer_circuit(const MixerOperator& m, double beta, std::size_t n) {
    Circuit c(n);
    switch (m.kind()) {
        case MixerKind::GlobalX:
            for (std::size_t q = 0; q < n; ++q) c.add(Gate::rx(q, 2.0 * beta));
            break;
        case MixerKind::GlobalY:
            for (std::size_t q = 0; q < n; ++q) c.add(Gate::ry(q, 2.0 * beta));
            break;
        default:
            for (const auto& t : m.terms(n)) c.add(Gate::pauli_rotation(t, beta));
            break;
    }
    return c;
}

Circuit build_qaoa_circuit(const IsingHamiltonian& h, std::span<const double> params,
                           std::span<const MixerOperator> mixers, CircuitForm form) {
    if (params.size() != 2 * mixers.size()) {
        throw std::invalid_argument("QAOA circuit needs two parameters per mixer");
    }
    Circuit c(h.n);
    constexpr double kHalfPi = std::numbers::pi / 2;
    for (std::size_t q = 0; q < h.n; ++q) {
        if (form == CircuitForm::Native) {
            // H = e^{i pi/2} RZ(pi/2) RX(pi/2) RZ(pi/2)
            c.add(Gate::rz(q, kHalfPi));
            c.add(Gate::rx(q, kHalfPi));
            c.add(Gate::rz(q, kHalfPi));
        } else {
            c.add(Gate::h(q));
        }
    }
    for (std::size_t k = 0; k < mixers.size(); ++k) {
        c.append(build_cost_circuit(h, params[2 * k], form));
        c.append(build_mixer_circuit(mixers[k], params[2 * k + 1], h.n));
    }
    return c;
}

QaoaAnsatz::QaoaAnsatz(const IsingHamiltonian& h) : h_(h), energies_(h.diagonal()) {}

StateVector QaoaAnsatz::prepare(std::span<const double> params, std::span<const MixerOperator> mixers) const {
    if (params.size() != 2 * mixers.size()) {
        throw std::invalid_argument("QAOA ansatz needs two parameters per mixer");
    }
    StateVector state = StateVector::plus(h_.n);
    for (std::size_t k = 0; k < mixers.size(); ++k) {
        state.apply_diagonal_evolution(energies_, params[2 * k]);
        mixers[k].apply(state, params[2 * k + 1]);
    }
    return state;
}

double QaoaAnsatz::expectation(std::span<const double> params, std::span<const MixerOperator> mixers) const {
    return prepare(params, mixers).expectation_diagonal(energies_);
}

std::string to_string(EvalMode mode) { return mode == EvalMode::Exact ? "exact" : "shots"; }

double approximation_ratio(double c_k, double c_exact) {
    if (std::abs(c_exact) < 1e-12) {
        throw UndefinedRatioError("approximation ratio undefined: |C_exact| < 1e-12");
    }
    return c_k / c_exact;
}

std::vector<MixerOperator> QaoaRunRecord::mixers() const {
    std::vector<MixerOperator> out;
    for (std::size_t k = 1; k < layers.size(); ++k) out.push_back(MixerOperator::parse(layers[k].mixer));
    return out;
}

QaoaRunRecord run_iterative_qaoa(const FeatureSelectionInstance& inst, std::size_t max_layers, const RunConfig& cfg,
                                 std::uint64_t seed, const std::string& algorithm, const MixerSelector& select) {
    using Clock = std::chrono::steady_clock;
    cfg.optimizer.validate();
    if (cfg.mode == EvalMode::Shots && cfg.shots == 0) throw std::invalid_argument("shot mode needs shots >= 1");

    const IsingHamiltonian h = to_ising(inst);
    const QaoaAnsatz ansatz(h);
    const double c_exact = cfg.c_exact ? *cfg.c_exact : brute_force_min(inst).value;
    if (std::abs(c_exact) < 1e-12) {
        throw UndefinedRatioError("approximation ratio undefined: |C_exact| < 1e-12 for instance seed " +
                                  std::to_string(inst.seed()));
    }

    Xoshiro256 param_rng(seed, Stream::kParameters);
    Xoshiro256 shot_rng(seed, Stream::kShots);

    QaoaRunRecord rec;
    rec.algorithm = algorithm;
    rec.n = inst.size();
    rec.alpha = inst.alpha();
    rec.instance_seed = inst.seed();
    rec.run_seed = seed;
    rec.mode = cfg.mode;
    rec.shots = cfg.mode == EvalMode::Shots ? cfg.shots : 0;
    rec.c_exact = c_exact;

    std::vector<MixerOperator> mixers;
    auto objective = [&](std::span<const double> p) {
        const StateVector s = ansatz.prepare(p, mixers);
        if (cfg.mode == EvalMode::Exact) return s.expectation_diagonal(ansatz.energies());
        const Histogram hist = sample_shots(s, cfg.shots, shot_rng);
        double e = 0.0;
        for (const auto& [x, count] : hist) e += static_cast<double>(count) * ansatz.energies()[x];
        return e / static_cast<double>(cfg.shots);
    };

    {
        LayerRecord l0;
        const auto t0 = Clock::now();
        l0.cost = objective({});
        l0.exact_cost = ansatz.expectation({}, {});
        l0.initial_cost = l0.cost;
        l0.ratio = l0.cost / c_exact;
        l0.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rec.layers.push_back(std::move(l0));
    }

    std::vector<double> params;
    for (std::size_t k = 1; k <= max_layers; ++k) {
        LayerRecord lr;
        lr.layer = k;
        const auto t0 = Clock::now();

        const StateVector prev = ansatz.prepare(params, mixers);
        auto [mixer, gradient] = select(prev, ansatz);
        lr.selection_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        lr.mixer = mixer.name();
        lr.gradient = gradient;
        mixers.push_back(std::move(mixer));

        params.push_back(param_rng.uniform(0.0, 2.0 * std::numbers::pi));
        params.push_back(param_rng.uniform(0.0, std::numbers::pi));

        const OptimizationResult opt = powell_minimize(objective, params, cfg.optimizer);
        params = opt.best_parameters;

        lr.parameters = params;
        lr.cost = opt.best_value;
        lr.exact_cost = ansatz.expectation(params, mixers);
        lr.initial_cost = opt.initial_value;
        lr.ratio = lr.cost / c_exact;
        lr.evaluations = opt.evaluations;
        lr.iterations = opt.iterations;
        lr.converged = opt.converged;
        lr.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rec.layers.push_back(std::move(lr));
    }
    return rec;
}

QaoaRunRecord run_standard_qaoa(const FeatureSelectionInstance& inst, std::size_t max_layers, const RunConfig& cfg,
                                std::uint64_t seed) {
    auto always_x = [](const StateVector&, const QaoaAnsatz&) { return std::pair{MixerOperator::global_x(), 0.0}; };
    return run_iterative_qaoa(inst, max_layers, cfg, seed, "standard", always_x);
}

}  // namespace qaoafs
