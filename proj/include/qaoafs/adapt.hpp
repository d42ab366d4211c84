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
#include <utility>
#include <vector>

#include "qaoafs/problem.hpp"
#include "qaoafs/qaoa.hpp"
#include "qaoafs/statevector.hpp"

namespace qaoafs {

/// Candidate mixers in a fixed order: GlobalX, GlobalY, then X_q, Y_q for
/// q = 0..n-1, then for each pair i < j the nine strings B_i C_j with
/// B, C in {X, Y, Z} in lexicographic order (XX, XY, XZ, YX, ..., ZZ).
struct MixerPool {
    std::size_t n = 0;
    std::vector<MixerOperator> entries;

    std::size_t size() const { return entries.size(); }
};

/// 2 + 2n + 9 n (n - 1) / 2.
constexpr std::size_t mixer_pool_size(std::size_t n) { return 2 + 2 * n + 9 * n * (n - 1) / 2; }

MixerPool build_mixer_pool(std::size_t n);

/// g = | -i <psi| e^{i gamma0 H} [H, A] e^{-i gamma0 H} |psi> |, evaluated as
/// |2 Im <phi| H A |phi>| with |phi> = e^{-i gamma0 H}|psi>.
double mixer_gradient(const StateVector& state, const IsingHamiltonian& h, const MixerOperator& a, double gamma0);

/// Same, for an already evolved |phi> and the cost diagonal.
double mixer_gradient_evolved(const StateVector& phi, std::span<const double> energies, const MixerOperator& a);

/// Largest-gradient pool entry; ties go to the lowest pool index.
std::pair<MixerOperator, double> select_mixer(const StateVector& state, const IsingHamiltonian& h,
                                              const MixerPool& pool, double gamma0);

/// ADAPT-QAOA: each new layer's mixer is select_mixer() on the state after
/// the previous layer's optimisation, with cfg.gamma0.
QaoaRunRecord run_adapt_qaoa(const FeatureSelectionInstance& inst, std::size_t max_layers, const RunConfig& cfg,
                             std::uint64_t seed);

}  // namespace qaoafs
