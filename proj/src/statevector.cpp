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

#include "qaoafs/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qaoafs {

namespace {

constexpr Complex kI{0.0, 1.0};

std::size_t checked_qubits(std::size_t n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::out_of_range("statevector supports 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                                std::to_string(n));
    }
    return n;
}

// i^k for k mod 4.
Complex i_power(std::size_t k) {
    switch (k % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(checked_qubits(n)), amps_(std::size_t{1} << n, Complex{}) {
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    checked_qubits(n);
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
    StateVector s(n);
    if (index >= s.dim()) throw std::out_of_range("basis index outside statevector");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::plus(std::size_t n) {
    checked_qubits(n);
    const double a = std::pow(2.0, -0.5 * static_cast<double>(n));
    return StateVector(n, std::vector<Complex>(std::size_t{1} << n, Complex{a, 0.0}));
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Complex& a) { return std::norm(a); });
    return p;
}

Complex StateVector::inner(const StateVector& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("inner product of states with different sizes");
    Complex s{};
    for (std::size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_) throw std::out_of_range("qubit " + std::to_string(q) + " outside " + std::to_string(n_) + "-qubit state");
}

void StateVector::apply_single(std::size_t q, const Complex (&m)[2][2]) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            const Complex a0 = amps_[k];
            const Complex a1 = amps_[k + stride];
            amps_[k] = m[0][0] * a0 + m[0][1] * a1;
            amps_[k + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply(const Gate& g) {
    for (std::size_t k = 0; k < g.qubits.size(); ++k) {
        check_qubit(g.qubits[k]);
        for (std::size_t m = 0; m < k; ++m) {
            if (g.qubits[m] == g.qubits[k]) throw std::invalid_argument("gate repeats a qubit");
        }
    }
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            const Complex m[2][2] = {{r, r}, {r, -r}};
            apply_single(g.qubits[0], m);
            return;
        }
        case GateKind::RX: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            const Complex m[2][2] = {{c, -kI * s}, {-kI * s, c}};
            apply_single(g.qubits[0], m);
            return;
        }
        case GateKind::RY: {
            const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
            const Complex m[2][2] = {{c, -s}, {s, c}};
            apply_single(g.qubits[0], m);
            return;
        }
        case GateKind::RZ: {
            const Complex m[2][2] = {{std::polar(1.0, -g.angle / 2), 0.0}, {0.0, std::polar(1.0, g.angle / 2)}};
            apply_single(g.qubits[0], m);
            return;
        }
        case GateKind::CNOT: {
            const std::size_t c = std::size_t{1} << g.qubits[0];
            const std::size_t t = std::size_t{1} << g.qubits[1];
            for (std::size_t x = 0; x < amps_.size(); ++x) {
                if ((x & c) && !(x & t)) std::swap(amps_[x], amps_[x | t]);
            }
            return;
        }
        case GateKind::SWAP: {
            const std::size_t a = std::size_t{1} << g.qubits[0];
            const std::size_t b = std::size_t{1} << g.qubits[1];
            for (std::size_t x = 0; x < amps_.size(); ++x) {
                if ((x & a) && !(x & b)) std::swap(amps_[x], amps_[(x & ~a) | b]);
            }
            return;
        }
        case GateKind::PauliRotation:
            if (!g.pauli) throw std::invalid_argument("Pauli rotation gate without a Pauli string");
            apply_pauli_rotation(*g.pauli, g.angle);
            return;
    }
}

void StateVector::apply(const Circuit& c) {
    if (c.num_qubits() != n_) throw std::invalid_argument("circuit and state qubit counts differ");
    for (const auto& g : c.gates()) apply(g);
}

// P|x> = i^{#Y} (-1)^{popcount(x & sign)} |x ^ flip>.
void StateVector::apply_pauli(const PauliString& p) {
    check_qubit(p.max_qubit());
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    const Complex global = i_power(p.y_count());
    std::vector<Complex> out(amps_.size());
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
        const double s = (std::popcount(x & sign) & 1) ? -1.0 : 1.0;
        out[x ^ flip] = global * s * amps_[x];
    }
    amps_ = std::move(out);
}

// exp(-i theta P) = cos(theta) I - i sin(theta) P, valid since P^2 = I.
void StateVector::apply_pauli_rotation(const PauliString& p, double theta) {
    check_qubit(p.max_qubit());
    const std::uint64_t flip = p.flip_mask();
    const std::uint64_t sign = p.sign_mask();
    const Complex global = i_power(p.y_count());
    const double c = std::cos(theta);
    const Complex ms = -kI * std::sin(theta) * global;

    if (flip == 0) {
        for (std::uint64_t x = 0; x < amps_.size(); ++x) {
            const double s = (std::popcount(x & sign) & 1) ? -1.0 : 1.0;
            amps_[x] *= c + ms * s;
        }
        return;
    }
    // Pairs (x, x ^ flip) mix only with each other; visit each pair once via
    // the member with the flip's lowest set bit cleared.
    const std::uint64_t low = flip & (~flip + 1);
    for (std::uint64_t x = 0; x < amps_.size(); ++x) {
        if (x & low) continue;
        const std::uint64_t y = x ^ flip;
        const double sx = (std::popcount(x & sign) & 1) ? -1.0 : 1.0;
        const double sy = (std::popcount(y & sign) & 1) ? -1.0 : 1.0;
        const Complex ax = amps_[x];
        const Complex ay = amps_[y];
        // (P psi)[x] = phase(y) psi[y], (P psi)[y] = phase(x) psi[x]
        amps_[x] = c * ax + ms * sy * ay;
        amps_[y] = c * ay + ms * sx * ax;
    }
}

void StateVector::apply_diagonal_evolution(std::span<const double> energies, double gamma) {
    if (energies.size() != amps_.size()) throw std::invalid_argument("diagonal size does not match state");
    for (std::size_t x = 0; x < amps_.size(); ++x) amps_[x] *= std::polar(1.0, -gamma * energies[x]);
}

double StateVector::expectation_diagonal(std::span<const double> energies) const {
    if (energies.size() != amps_.size()) throw std::invalid_argument("diagonal size does not match state");
    double e = 0.0;
    for (std::size_t x = 0; x < amps_.size(); ++x) e += std::norm(amps_[x]) * energies[x];
    return e;
}

StateVector init_plus_state(std::size_t n) { return StateVector::plus(n); }

StateVector apply_gate(StateVector state, const Gate& g) {
    state.apply(g);
    return state;
}

StateVector apply_pauli_rotation(StateVector state, const PauliString& p, double theta) {
    state.apply_pauli_rotation(p, theta);
    return state;
}

double expectation_of_cost(const StateVector& state, const IsingHamiltonian& h) {
    if (h.n != state.num_qubits()) throw std::invalid_argument("Hamiltonian and state qubit counts differ");
    return state.expectation_diagonal(h.diagonal());
}

Histogram sample_shots(std::span<const double> probabilities, std::uint64_t shots, Xoshiro256& rng) {
    if (shots == 0) throw std::invalid_argument("sample_shots: shots must be at least 1");
    if (probabilities.empty()) throw std::invalid_argument("sample_shots: empty distribution");
    std::vector<double> cdf(probabilities.size());
    std::partial_sum(probabilities.begin(), probabilities.end(), cdf.begin());
    const double total = cdf.back();
    Histogram hist;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) --it;
        // Skip zero-probability bins that share the cdf value.
        while (it != cdf.begin() && probabilities[static_cast<std::size_t>(it - cdf.begin())] == 0.0) --it;
        ++hist[static_cast<std::uint64_t>(it - cdf.begin())];
    }
    return hist;
}

Histogram sample_shots(const StateVector& state, std::uint64_t shots, Xoshiro256& rng) {
    const auto p = state.probabilities();
    return sample_shots(p, shots, rng);
}

double estimate_cost_from_samples(const Histogram& hist, const IsingHamiltonian& h) {
    std::uint64_t shots = 0;
    for (const auto& [x, count] : hist) shots += count;
    if (shots == 0) throw std::invalid_argument("estimate_cost_from_samples: empty histogram");
    double e = 0.0;
    for (const auto& [x, count] : hist) {
        e += static_cast<double>(count) / static_cast<double>(shots) * h.basis_energy(x);
    }
    return e;
}

}  // namespace qaoafs
