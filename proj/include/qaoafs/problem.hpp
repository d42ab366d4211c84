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
#include <span>
#include <vector>

namespace qaoafs {

/// Binary decision vector; bit i is x_i. Qubit/bit 0 is the least
/// significant bit when converted to an integer index.
class DecisionVector {
public:
    DecisionVector() = default;
    explicit DecisionVector(std::vector<std::uint8_t> bits);

    static DecisionVector from_index(std::uint64_t index, std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    std::uint64_t to_index() const;
    std::span<const std::uint8_t> bits() const { return bits_; }

    friend bool operator==(const DecisionVector&, const DecisionVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Upper-triangular QUBO matrix. Only entries with i <= j exist.
class QuboMatrix {
public:
    QuboMatrix() = default;
    explicit QuboMatrix(std::size_t n);

    std::size_t size() const { return n_; }

    /// Entry (i, j) with i <= j; throws std::out_of_range otherwise.
    double at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, double value);

    double diag(std::size_t i) const { return entries_[i * n_ + i]; }
    double offdiag(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    /// Σ Q_ii x_i + Σ_{i<j} Q_ij x_i x_j.
    double evaluate(const DecisionVector& x) const;
    double evaluate(std::uint64_t mask) const;

    friend bool operator==(const QuboMatrix&, const QuboMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> entries_;  // row-major n x n, lower triangle unused (zero)
};

/// Support of the i.i.d. entry distribution used by generate_instance.
struct UniformEntries {
    double lo = 0.0;
    double hi = 1.0;
};

/// Feature selection objective
///   f(x) = -(1 - alpha) Σ Q_ii x_i + alpha Σ_{i<j} Q_ij x_i x_j.
class FeatureSelectionInstance {
public:
    FeatureSelectionInstance(QuboMatrix q, double alpha, std::uint64_t seed = 0);

    const QuboMatrix& q() const { return q_; }
    double alpha() const { return alpha_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t size() const { return q_.size(); }

    /// Same instance with a different trade-off parameter.
    FeatureSelectionInstance with_alpha(double alpha) const;

    double evaluate(const DecisionVector& x) const;
    /// Bit-identical to evaluate(DecisionVector::from_index(mask, n)).
    double evaluate(std::uint64_t mask) const;

    friend bool operator==(const FeatureSelectionInstance&, const FeatureSelectionInstance&) = default;

private:
    QuboMatrix q_;
    double alpha_;
    std::uint64_t seed_;
};

/// Random instance: every upper-triangular entry drawn from `dist`, in
/// row-major order (i ascending, j = i..n-1), from Xoshiro256(seed).
FeatureSelectionInstance generate_instance(std::size_t n, std::uint64_t seed, double alpha,
                                           UniformEntries dist = {});

double evaluate_qubo(const QuboMatrix& q, const DecisionVector& x);
double evaluate_feature_selection(const FeatureSelectionInstance& inst, const DecisionVector& x);

struct Coupling {
    std::size_t i;
    std::size_t j;
    double value;

    friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// Diagonal cost operator offset + Σ h_i Z_i + Σ_{i<j} J_ij Z_i Z_j.
struct IsingHamiltonian {
    std::size_t n = 0;
    std::vector<double> linear;
    std::vector<Coupling> couplings;  // sorted by (i, j), i < j
    double offset = 0.0;

    /// Energy of computational basis state |x>, z_i = (-1)^{x_i}.
    double basis_energy(const DecisionVector& x) const;
    double basis_energy(std::uint64_t mask) const;

    /// Energies of all 2^n basis states, indexed by bitstring.
    std::vector<double> diagonal() const;

    /// Smallest and largest entry of diagonal().
    std::pair<double, double> energy_range() const;
};

/// Substitutes x_i -> (1 - Z_i)/2 into the feature selection objective.
IsingHamiltonian to_ising(const FeatureSelectionInstance& inst);

double basis_energy(const IsingHamiltonian& h, const DecisionVector& x);

}  // namespace qaoafs
