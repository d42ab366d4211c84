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
#include <functional>
#include <span>
#include <vector>

namespace qaoafs {

using Objective = std::function<double(std::span<const double>)>;

struct OptimizerConfig {
    /// Cap on outer Powell cycles (one cycle = one line search per direction).
    std::size_t max_iterations = 1500;
    /// Hard cap on objective evaluations; 0 means 20 * max_iterations.
    std::size_t max_evaluations = 0;
    /// Relative tolerance of the Brent line searches (scaled like SciPy: 100 * x_tolerance).
    double x_tolerance = 1e-4;
    /// Stop when one cycle lowers f by less than f_tolerance * (|f_old| + |f_new|) / 2.
    double f_tolerance = 1e-6;
    /// Maximum parabolic extrapolation factor while bracketing a line minimum.
    double bracket_grow_limit = 110.0;

    std::size_t evaluation_cap() const { return max_evaluations == 0 ? 20 * max_iterations : max_evaluations; }
    void validate() const;
};

struct OptimizationResult {
    std::vector<double> best_parameters;
    double best_value = 0.0;
    double initial_value = 0.0;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Powell's conjugate-direction method with Brent line searches.
///
/// The result is the best point ever evaluated, so best_value <= f(x0), and
/// the number of objective calls never exceeds cfg.evaluation_cap().
/// Non-finite objective values away from x0 are treated as +inf.
OptimizationResult powell_minimize(const Objective& objective, std::vector<double> x0,
                                   const OptimizerConfig& cfg = {});

}  // namespace qaoafs
