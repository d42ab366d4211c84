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

#include "qaoafs/adapt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qaoafs/rng.hpp"

namespace qaoafs {

MixerPool build_mixer_pool(std::size_t n) {
    if (n == 0) throw std::invalid_argument("mixer pool needs at least one qubit");
    MixerPool pool;
    pool.n = n;
    pool.entries.reserve(mixer_pool_size(n));
    pool.entries.push_back(MixerOperator::global_x());
    pool.entries.push_back(MixerOperator::global_y());
    for (std::size_t q = 0; q < n; ++q) {
        pool.entries.push_back(MixerOperator::pauli(PauliString::single(q, Pauli::X)));
        pool.entries.push_back(MixerOperator::pauli(PauliString::single(q, Pauli::Y)));
    }
    constexpr Pauli kLetters[] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (Pauli b : kLetters) {
                for (Pauli c : kLetters) pool.entries.push_back(MixerOperator::pauli(PauliString::pair(i, b, j, c)));
            }
        }
    }
    return pool;
}

double mixer_gradient_evolved(const StateVector& phi, std::span<const double> energies, const MixerOperator& a) {
    if (energies.size() != phi.dim()) throw std::invalid_argument("cost diagonal does not match state");
    const StateVector chi = a.act(phi);
    double im = 0.0;
    for (std::size_t x = 0; x < phi.dim(); ++x) im += energies[x] * (std::conj(phi[x]) * chi[x]).imag();
    return std::abs(2.0 * im);
}

double mixer_gradient(const StateVector& state, const IsingHamiltonian& h, const MixerOperator& a, double gamma0) {
    if (h.n != state.num_qubits()) throw std::invalid_argument("Hamiltonian and state qubit counts differ");
    const auto energies = h.diagonal();
    StateVector phi = state;
    phi.apply_diagonal_evolution(energies, gamma0);
    return mixer_gradient_evolved(phi, energies, a);
}

namespace {

std::pair<MixerOperator, double> argmax_gradient(const StateVector& phi, std::span<const double> energies,
                                                 const MixerPool& pool) {
    if (pool.entries.empty()) throw std::invalid_argument("cannot select from an empty mixer pool");
    std::size_t best = 0;
    double best_g = -1.0;
    for (std::size_t l = 0; l < pool.entries.size(); ++l) {
        const double g = mixer_gradient_evolved(phi, energies, pool.entries[l]);
        if (g > best_g) {
            best_g = g;
            best = l;
        }
    }
    return {pool.entries[best], best_g};
}

// Parameter-shift estimate of |dE/dbeta| at 0 from sampled energies. The
// terms of a mixer commute, so the derivative is the sum over terms of
// E(term rotated by +pi/4) - E(term rotated by -pi/4).
double shot_gradient(const StateVector& phi, std::span<const double> energies, const MixerOperator& a,
                     std::uint64_t shots, Xoshiro256& rng) {
    auto sampled_energy = [&](const StateVector& s) {
        const Histogram hist = sample_shots(s, shots, rng);
        double e = 0.0;
        for (const auto& [x, count] : hist) e += static_cast<double>(count) * energies[x];
        return e / static_cast<double>(shots);
    };
    double d = 0.0;
    for (const auto& t : a.terms(phi.num_qubits())) {
        StateVector plus = phi;
        plus.apply_pauli_rotation(t, std::numbers::pi / 4);
        StateVector minus = phi;
        minus.apply_pauli_rotation(t, -std::numbers::pi / 4);
        d += sampled_energy(plus) - sampled_energy(minus);
    }
    return std::abs(d);
}

}  // namespace

std::pair<MixerOperator, double> select_mixer(const StateVector& state, const IsingHamiltonian& h,
                                              const MixerPool& pool, double gamma0) {
    if (h.n != state.num_qubits()) throw std::invalid_argument("Hamiltonian and state qubit counts differ");
    const auto energies = h.diagonal();
    StateVector phi = state;
    phi.apply_diagonal_evolution(energies, gamma0);
    return argmax_gradient(phi, energies, pool);
}

QaoaRunRecord run_adapt_qaoa(const FeatureSelectionInstance& inst, std::size_t max_layers, const RunConfig& cfg,
                             std::uint64_t seed) {
    const MixerPool pool = build_mixer_pool(inst.size());
    Xoshiro256 gradient_rng(seed, Stream::kGradientShots);
    const bool sampled = cfg.mode == EvalMode::Shots && cfg.shot_gradients;

    auto selector = [&](const StateVector& state, const QaoaAnsatz& ansatz) -> std::pair<MixerOperator, double> {
        StateVector phi = state;
        phi.apply_diagonal_evolution(ansatz.energies(), cfg.gamma0);
        if (!sampled) return argmax_gradient(phi, ansatz.energies(), pool);

        std::size_t best = 0;
        double best_g = -1.0;
        for (std::size_t l = 0; l < pool.size(); ++l) {
            const double g = shot_gradient(phi, ansatz.energies(), pool.entries[l], cfg.shots, gradient_rng);
            if (g > best_g) {
                best_g = g;
                best = l;
            }
        }
        return {pool.entries[best], best_g};
    };
    return run_iterative_qaoa(inst, max_layers, cfg, seed, "adapt", selector);
}

}  // namespace qaoafs
