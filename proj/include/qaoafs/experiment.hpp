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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaoafs/device.hpp"
#include "qaoafs/exact_solver.hpp"
#include "qaoafs/powell.hpp"
#include "qaoafs/problem.hpp"
#include "qaoafs/qaoa.hpp"

namespace qaoafs {

/// Invalid configuration or command-line input. Messages name the offending
/// key and, for config files, the line it appears on.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AlgorithmChoice { Standard, Adapt, Both };

struct EstimateSettings {
    std::vector<std::string> devices;      // builtin names; empty = all builtins
    std::optional<std::filesystem::path> device_file;
    double alpha = 0.6;
    EstimateOptions options;
};

struct ExperimentConfig {
    std::vector<std::size_t> sizes{6, 10, 14};
    std::vector<double> alphas{0.2, 0.6};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    AlgorithmChoice algorithm = AlgorithmChoice::Both;
    std::size_t layers = 30;
    EvalMode mode = EvalMode::Shots;
    std::uint64_t shots = 10000;
    UniformEntries distribution;
    OptimizerConfig optimizer;
    double gamma0 = 0.01;
    bool shot_gradients = false;
    EstimateSettings estimate;
    std::size_t jobs = 1;
    /// When false, wall-clock fields are written as 0 so outputs are byte-identical.
    bool timing = true;

    std::vector<std::string> algorithms() const;
    /// Throws ConfigError.
    void validate() const;
};

/// YAML document; unknown keys are rejected. Throws ConfigError.
ExperimentConfig parse_config(const std::string& text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// "1,2,5" or "1..10" or a mix such as "1..3,7".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

/// Writes runs/<algorithm>_n<n>_a<alpha>_s<seed>.json, layers.csv and
/// summary.csv under out_dir. Returns the records in output order.
std::vector<QaoaRunRecord> cmd_solve(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Resolved device list for the estimate command.
std::vector<DeviceProfile> resolve_devices(const EstimateSettings& s);

/// Writes estimate.csv under out_dir.
std::vector<ResourceEstimate> cmd_estimate(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Solves the instance stored at `instance_file` and writes the solution JSON
/// to `out_file`. Method "brute-force", "branch-and-bound" or "both" (the
/// latter cross-checks the two and fails on disagreement).
ExactSolution cmd_oracle(const std::filesystem::path& instance_file, const std::filesystem::path& out_file,
                         const std::string& method = "brute-force", double gap = 0.0);

/// Writes instance_n<n>_a<alpha>_s<seed>.json for every (n, alpha, seed).
std::vector<std::filesystem::path> cmd_gen(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace qaoafs
