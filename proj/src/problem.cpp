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

#include "qaoafs/problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qaoafs/rng.hpp"

namespace qaoafs {

namespace {

void require_length(std::size_t got, std::size_t want) {
    if (got != want) {
        throw std::invalid_argument("decision vector has length " + std::to_string(got) +
                                    ", instance has " + std::to_string(want) + " variables");
    }
}

inline bool bit(std::uint64_t mask, std::size_t i) { return ((mask >> i) & 1U) != 0; }

}  // namespace

DecisionVector::DecisionVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) {
        if (b > 1) throw std::invalid_argument("decision vector entries must be 0 or 1");
    }
}

DecisionVector DecisionVector::from_index(std::uint64_t index, std::size_t n) {
    if (n > 64) throw std::invalid_argument("decision vector index form supports at most 64 bits");
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = bit(index, i) ? 1 : 0;
    return DecisionVector(std::move(bits));
}

std::uint64_t DecisionVector::to_index() const {
    if (bits_.size() > 64) throw std::out_of_range("decision vector longer than 64 bits");
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) index |= std::uint64_t{1} << i;
    }
    return index;
}

QuboMatrix::QuboMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {}

double QuboMatrix::at(std::size_t i, std::size_t j) const {
    if (i > j || j >= n_) throw std::out_of_range("QUBO entry index must satisfy i <= j < n");
    return entries_[i * n_ + j];
}

void QuboMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i > j || j >= n_) throw std::out_of_range("QUBO entry index must satisfy i <= j < n");
    if (!std::isfinite(value)) throw std::invalid_argument("QUBO entries must be finite");
    entries_[i * n_ + j] = value;
}

double QuboMatrix::evaluate(std::uint64_t mask) const {
    double linear = 0.0;
    double quadratic = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!bit(mask, i)) continue;
        linear += diag(i);
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (bit(mask, j)) quadratic += offdiag(i, j);
        }
    }
    return linear + quadratic;
}

double QuboMatrix::evaluate(const DecisionVector& x) const {
    require_length(x.size(), n_);
    return evaluate(x.to_index());
}

FeatureSelectionInstance::FeatureSelectionInstance(QuboMatrix q, double alpha, std::uint64_t seed)
    : q_(std::move(q)), alpha_(alpha), seed_(seed) {
    if (q_.size() == 0) throw std::invalid_argument("instance needs at least one feature");
    if (q_.size() > 64) throw std::invalid_argument("instance supports at most 64 features");
    if (!(alpha_ >= 0.0 && alpha_ <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
}

FeatureSelectionInstance FeatureSelectionInstance::with_alpha(double alpha) const {
    return FeatureSelectionInstance(q_, alpha, seed_);
}

double FeatureSelectionInstance::evaluate(std::uint64_t mask) const {
    const std::size_t n = q_.size();
    double linear = 0.0;
    double quadratic = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!bit(mask, i)) continue;
        linear += q_.diag(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (bit(mask, j)) quadratic += q_.offdiag(i, j);
        }
    }
    return -(1.0 - alpha_) * linear + alpha_ * quadratic;
}

double FeatureSelectionInstance::evaluate(const DecisionVector& x) const {
    require_length(x.size(), size());
    return evaluate(x.to_index());
}

FeatureSelectionInstance generate_instance(std::size_t n, std::uint64_t seed, double alpha,
                                           UniformEntries dist) {
    if (n == 0) throw std::invalid_argument("generate_instance: n must be at least 1");
    if (!(dist.lo <= dist.hi)) throw std::invalid_argument("generate_instance: empty entry support");
    Xoshiro256 rng(seed, Stream::kInstance);
    QuboMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) q.set(i, j, rng.uniform(dist.lo, dist.hi));
    }
    return FeatureSelectionInstance(std::move(q), alpha, seed);
}

double evaluate_qubo(const QuboMatrix& q, const DecisionVector& x) { return q.evaluate(x); }

double evaluate_feature_selection(const FeatureSelectionInstance& inst, const DecisionVector& x) {
    return inst.evaluate(x);
}

IsingHamiltonian to_ising(const FeatureSelectionInstance& inst) {
    const std::size_t n = inst.size();
    const double a = inst.alpha();
    const auto& q = inst.q();

    IsingHamiltonian h;
    h.n = n;
    h.linear.assign(n, 0.0);

    // -(1-a) Q_ii (1 - Z_i)/2
    for (std::size_t i = 0; i < n; ++i) {
        const double c = -(1.0 - a) * q.diag(i);
        h.offset += c / 2.0;
        h.linear[i] -= c / 2.0;
    }
    // a Q_ij (1 - Z_i)(1 - Z_j)/4
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double c = a * q.offdiag(i, j);
            if (c == 0.0) continue;
            h.offset += c / 4.0;
            h.linear[i] -= c / 4.0;
            h.linear[j] -= c / 4.0;
            h.couplings.push_back({i, j, c / 4.0});
        }
    }
    return h;
}

double IsingHamiltonian::basis_energy(std::uint64_t mask) const {
    double e = offset;
    for (std::size_t i = 0; i < n; ++i) e += bit(mask, i) ? -linear[i] : linear[i];
    for (const auto& c : couplings) e += (bit(mask, c.i) != bit(mask, c.j)) ? -c.value : c.value;
    return e;
}

double IsingHamiltonian::basis_energy(const DecisionVector& x) const {
    require_length(x.size(), n);
    return basis_energy(x.to_index());
}

std::vector<double> IsingHamiltonian::diagonal() const {
    if (n >= 40) throw std::length_error("diagonal of more than 2^40 entries requested");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> e(dim, offset);
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = linear[i];
        if (hi == 0.0) continue;
        for (std::uint64_t x = 0; x < dim; ++x) e[x] += bit(x, i) ? -hi : hi;
    }
    for (const auto& c : couplings) {
        for (std::uint64_t x = 0; x < dim; ++x) e[x] += (bit(x, c.i) != bit(x, c.j)) ? -c.value : c.value;
    }
    return e;
}

std::pair<double, double> IsingHamiltonian::energy_range() const {
    const auto e = diagonal();
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    return {*lo, *hi};
}

double basis_energy(const IsingHamiltonian& h, const DecisionVector& x) { return h.basis_energy(x); }

}  // namespace qaoafs
