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
#include <string>

#include "qaoafs/problem.hpp"

namespace qaoafs {

enum class SolveMethod { BruteForce, BranchAndBound };

std::string to_string(SolveMethod m);

struct ExactSolution {
    DecisionVector minimizer;
    double value = 0.0;  // C_exact
    SolveMethod method = SolveMethod::BruteForce;
    double gap_at_termination = 0.0;
    std::uint64_t nodes = 0;  // enumerated states (brute force) or visited tree nodes
};

inline constexpr std::size_t kBruteForceMaxFeatures = 24;
inline constexpr std::size_t kBranchAndBoundMaxFeatures = 30;

/// Enumerates all 2^n selections. Ties go to the smallest bitstring index.
/// The reported value is bit-identical to inst.evaluate(minimizer).
ExactSolution brute_force_min(const FeatureSelectionInstance& inst);

/// |z_bound - z_best| / |z_best|; throws std::domain_error for |z_best| < 1e-12.
double compute_gap(double z_best, double z_bound);

/// Depth-first branch and bound over x_0, x_1, ... in index order.
///
/// Node bound: decided terms plus min(0, c) for every term that still
/// involves a free variable (and no variable fixed to 0). This never exceeds
/// the best completion, so with gap_tol = 0 the result equals brute force.
/// Stops once compute_gap(incumbent, global bound) <= gap_tol.
ExactSolution branch_and_bound_min(const FeatureSelectionInstance& inst, double gap_tol = 1e-4);

}  // namespace qaoafs
