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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qaoafs/circuit.hpp"
#include "qaoafs/pauli.hpp"
#include "qaoafs/problem.hpp"
#include "qaoafs/rng.hpp"

namespace qaoafs {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 20;

/// Dense statevector over n qubits. Amplitude index is the bitstring with
/// qubit 0 as the least significant bit.
class StateVector {
public:
    /// |0...0>.
    explicit StateVector(std::size_t n);

    /// Takes ownership of `amplitudes` (size must be a power of two, at least 2).
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);
    static StateVector basis(std::size_t n, std::uint64_t index);
    /// (H|0>)^{⊗n}.
    static StateVector plus(std::size_t n);

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    std::vector<double> probabilities() const;
    Complex inner(const StateVector& other) const;  // <this|other>

    void apply(const Gate& g);
    void apply(const Circuit& c);

    /// exp(-i theta P).
    void apply_pauli_rotation(const PauliString& p, double theta);
    /// P|psi> (a unitary, used to form A|phi> for gradients).
    void apply_pauli(const PauliString& p);

    /// amp_x *= exp(-i gamma e_x); e is the diagonal of a cost operator.
    void apply_diagonal_evolution(std::span<const double> energies, double gamma);

    /// Σ_x |amp_x|^2 e_x.
    double expectation_diagonal(std::span<const double> energies) const;

private:
    StateVector(std::size_t n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}

    void check_qubit(std::size_t q) const;
    void apply_single(std::size_t q, const Complex (&m)[2][2]);

    std::size_t n_;
    std::vector<Complex> amps_;
};

StateVector init_plus_state(std::size_t n);
StateVector apply_gate(StateVector state, const Gate& g);
StateVector apply_pauli_rotation(StateVector state, const PauliString& p, double theta);

/// Exact <psi|H|psi>, including the offset.
double expectation_of_cost(const StateVector& state, const IsingHamiltonian& h);

/// Measurement histogram keyed by bitstring index.
using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Draws `shots` computational-basis samples from |amp|^2.
Histogram sample_shots(const StateVector& state, std::uint64_t shots, Xoshiro256& rng);

/// Same as above with a precomputed probability vector.
Histogram sample_shots(std::span<const double> probabilities, std::uint64_t shots, Xoshiro256& rng);

/// Σ_x (count_x / shots) * basis_energy(h, x).
double estimate_cost_from_samples(const Histogram& hist, const IsingHamiltonian& h);

}  // namespace qaoafs
