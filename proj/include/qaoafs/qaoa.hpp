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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qaoafs/circuit.hpp"
#include "qaoafs/pauli.hpp"
#include "qaoafs/powell.hpp"
#include "qaoafs/problem.hpp"
#include "qaoafs/statevector.hpp"

namespace qaoafs {

enum class MixerKind { GlobalX, GlobalY, SinglePauli, TwoPauli };

/// Mixer Hamiltonian H_M of one layer. Global mixers are Σ_i X_i or Σ_i Y_i
/// over all qubits; the others are a single Pauli string of weight 1 or 2.
class MixerOperator {
public:
    static MixerOperator global_x() { return MixerOperator(MixerKind::GlobalX, std::nullopt); }
    static MixerOperator global_y() { return MixerOperator(MixerKind::GlobalY, std::nullopt); }
    static MixerOperator pauli(PauliString p);

    /// Inverse of name(): "GlobalX", "GlobalY", or a Pauli string such as "X0Z2".
    static MixerOperator parse(std::string_view text);

    MixerKind kind() const { return kind_; }
    const std::optional<PauliString>& string() const { return string_; }

    /// Mutually commuting Pauli terms whose sum is H_M on n qubits.
    std::vector<PauliString> terms(std::size_t n) const;

    /// exp(-i beta H_M) applied in place.
    void apply(StateVector& state, double beta) const;

    /// H_M |state> (the Pauli terms summed; not unitary for global mixers).
    StateVector act(const StateVector& state) const;

    std::string name() const;

    friend bool operator==(const MixerOperator&, const MixerOperator&) = default;

private:
    MixerOperator(MixerKind kind, std::optional<PauliString> s) : kind_(kind), string_(std::move(s)) {}

    MixerKind kind_;
    std::optional<PauliString> string_;
};

enum class CircuitForm {
    /// RZ for linear terms, PauliRotation(Z_i Z_j) for couplings.
    Rotations,
    /// Hardware-style basis: H as RZ·RX·RZ, couplings as CNOT·RZ·CNOT.
    Native,
};

/// Every pair i < j exactly once, grouped into rounds of disjoint pairs
/// (n - 1 rounds for even n, n for odd n) by the circle method.
std::vector<std::pair<std::size_t, std::size_t>> round_robin_pairs(std::size_t n);

/// exp(-i gamma H_C) up to the global phase of the offset. Couplings are
/// emitted in round_robin_pairs order so that disjoint ZZ terms can run in
/// parallel.
Circuit build_cost_circuit(const IsingHamiltonian& h, double gamma, CircuitForm form = CircuitForm::Rotations);

/// exp(-i beta H_M) on n qubits.
Circuit build_mixer_circuit(const MixerOperator& m, double beta, std::size_t n);

/// Hadamard wall followed by one cost and one mixer block per layer.
/// `params` is ordered (gamma_1, beta_1, ..., gamma_p, beta_p).
Circuit build_qaoa_circuit(const IsingHamiltonian& h, std::span<const double> params,
                           std::span<const MixerOperator> mixers, CircuitForm form = CircuitForm::Rotations);

/// Fast ansatz simulator: the cost layer is applied as a diagonal phase
/// from the cached energy table instead of gate by gate.
class QaoaAnsatz {
public:
    explicit QaoaAnsatz(const IsingHamiltonian& h);

    const IsingHamiltonian& hamiltonian() const { return h_; }
    std::span<const double> energies() const { return energies_; }

    StateVector prepare(std::span<const double> params, std::span<const MixerOperator> mixers) const;
    double expectation(std::span<const double> params, std::span<const MixerOperator> mixers) const;

private:
    IsingHamiltonian h_;
    std::vector<double> energies_;
};

enum class EvalMode { Exact, Shots };

std::string to_string(EvalMode mode);

struct RunConfig {
    EvalMode mode = EvalMode::Exact;
    std::uint64_t shots = 10000;
    OptimizerConfig optimizer{};
    /// Small cost-evolution time used by the ADAPT gradient criterion.
    double gamma0 = 0.01;
    /// ADAPT: estimate gradients from shots too (off: always exact).
    bool shot_gradients = false;
    /// Known optimum; computed by brute force when absent.
    std::optional<double> c_exact;
};

/// Thrown when C_exact is too close to zero for r_k = C_k / C_exact.
class UndefinedRatioError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

double approximation_ratio(double c_k, double c_exact);

struct LayerRecord {
    std::size_t layer = 0;           // 0 = initial |+>^n, no parameters
    std::vector<double> parameters;  // all 2*layer parameters after optimisation
    double cost = 0.0;               // objective value used by the optimiser (shot estimate in shot mode)
    double exact_cost = 0.0;         // exact <H_C> at `parameters`
    double initial_cost = 0.0;       // objective at the optimiser's starting point
    double ratio = 0.0;
    double seconds = 0.0;            // wall clock for this layer, including mixer selection
    std::string mixer;               // empty for layer 0
    double gradient = 0.0;           // ADAPT selection gradient, 0 for standard QAOA
    double selection_seconds = 0.0;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

struct QaoaRunRecord {
    std::string algorithm;  // "standard" or "adapt"
    std::size_t n = 0;
    double alpha = 0.0;
    std::uint64_t instance_seed = 0;
    std::uint64_t run_seed = 0;
    EvalMode mode = EvalMode::Exact;
    std::uint64_t shots = 0;
    double c_exact = 0.0;
    std::vector<LayerRecord> layers;  // layers[0] is the initial state

    std::size_t depth() const { return layers.empty() ? 0 : layers.size() - 1; }
    std::vector<MixerOperator> mixers() const;
    const std::vector<double>& final_parameters() const { return layers.back().parameters; }
};

/// Picks the mixer for a new layer given the state after the previous one.
/// Returns the mixer and its selection score (gradient).
using MixerSelector =
    std::function<std::pair<MixerOperator, double>(const StateVector& state, const QaoaAnsatz& ansatz)>;

/// Layer-by-layer driver shared by the standard and adaptive engines. Layer k
/// warm-starts from layer k-1's optimum and appends gamma ~ U[0, 2pi),
/// beta ~ U[0, pi) drawn from Xoshiro256(seed, Stream::kParameters).
QaoaRunRecord run_iterative_qaoa(const FeatureSelectionInstance& inst, std::size_t max_layers, const RunConfig& cfg,
                                 std::uint64_t seed, const std::string& algorithm, const MixerSelector& select);

QaoaRunRecord run_standard_qaoa(const FeatureSelectionInstance& inst, std::size_t max_layers, const RunConfig& cfg,
                                std::uint64_t seed);

}  // namespace qaoafs
