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

#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qaoafs/experiment.hpp"
#include "qaoafs/io.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct Overrides {
    std::string config;
    std::string out_dir = "out";
    std::string seeds;
    std::string mode;
    std::size_t layers = 0;
    std::vector<std::string> devices;
    std::size_t jobs = 0;
    bool no_timing = false;
};

qaoafs::ExperimentConfig resolve(const Overrides& o) {
    qaoafs::ExperimentConfig cfg = o.config.empty() ? qaoafs::ExperimentConfig{} : qaoafs::load_config(o.config);
    if (!o.seeds.empty()) cfg.seeds = qaoafs::parse_seed_list(o.seeds);
    if (o.mode == "exact") {
        cfg.mode = qaoafs::EvalMode::Exact;
    } else if (o.mode == "shots") {
        cfg.mode = qaoafs::EvalMode::Shots;
    }
    if (o.jobs > 0) cfg.jobs = o.jobs;
    if (o.no_timing) cfg.timing = false;
    if (!o.devices.empty()) cfg.estimate.devices = o.devices;
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "YAML experiment configuration")->check(CLI::ExistingFile);
    cmd->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--seeds", o.seeds, "Seed list, e.g. 1..10 or 1,4,7");
    cmd->add_option("--jobs", o.jobs, "Worker threads");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feature selection with standard and adaptive QAOA"};
    app.require_subcommand(1);
    Overrides o;

    auto* solve = app.add_subcommand("solve", "Run QAOA sweeps and write run records and CSV summaries");
    add_common(solve, o);
    solve->add_option("--mode", o.mode, "Expectation mode")->check(CLI::IsMember({"exact", "shots"}));
    solve->add_option("--layers", o.layers, "Number of QAOA layers")->check(CLI::PositiveNumber);
    solve->add_flag("--no-timing", o.no_timing, "Write wall-clock fields as 0 (byte-identical reruns)");

    auto* estimate = app.add_subcommand("estimate", "Estimate hardware time and error for standard QAOA");
    add_common(estimate, o);
    estimate->add_option("--layers", o.layers, "QAOA layers for the time estimate")->check(CLI::PositiveNumber);
    estimate->add_option("--device", o.devices, "Device name (repeatable)");

    std::string instance_file, solution_file, method = "brute-force";
    double gap = 0.0;
    auto* oracle = app.add_subcommand("oracle", "Solve an instance file exactly");
    oracle->add_option("instance", instance_file, "Instance JSON")->required()->check(CLI::ExistingFile);
    oracle->add_option("-o,--out", solution_file, "Solution JSON (default: <out-dir>/solution.json)");
    oracle->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
    oracle->add_option("--method", method, "Solver")
        ->check(CLI::IsMember({"brute-force", "branch-and-bound", "both"}))
        ->capture_default_str();
    oracle->add_option("--gap", gap, "Branch-and-bound relative gap tolerance")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Write random instances as JSON");
    add_common(gen, o);
    std::vector<std::size_t> gen_sizes;
    std::vector<double> gen_alphas;
    gen->add_option("--n", gen_sizes, "Problem sizes");
    gen->add_option("--alpha", gen_alphas, "Trade-off parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitValidation;
    }

    try {
        const std::filesystem::path out_dir = o.out_dir;
        if (*solve) {
            auto cfg = resolve(o);
            if (o.layers > 0) cfg.layers = o.layers;
            const auto records = qaoafs::cmd_solve(cfg, out_dir);
            fmt::print("wrote {} run records, layers.csv and summary.csv to {}\n", records.size(), out_dir.string());
        } else if (*estimate) {
            auto cfg = resolve(o);
            if (o.layers > 0) cfg.estimate.options.layers = o.layers;
            const auto rows = qaoafs::cmd_estimate(cfg, out_dir);
            fmt::print("wrote {} estimates to {}\n", rows.size(), (out_dir / "estimate.csv").string());
        } else if (*oracle) {
            const std::filesystem::path out = solution_file.empty() ? out_dir / "solution.json" : std::filesystem::path(solution_file);
            const auto sol = qaoafs::cmd_oracle(instance_file, out, method, gap);
            fmt::print("C_exact = {} ({}), written to {}\n", qaoafs::format_double(sol.value),
                       qaoafs::to_string(sol.method), out.string());
        } else if (*gen) {
            auto cfg = resolve(o);
            if (!gen_sizes.empty()) cfg.sizes = gen_sizes;
            if (!gen_alphas.empty()) cfg.alphas = gen_alphas;
            cfg.validate();
            const auto paths = qaoafs::cmd_gen(cfg, out_dir);
            fmt::print("wrote {} instances to {}\n", paths.size(), out_dir.string());
        }
    } catch (const qaoafs::ConfigError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        fmt::print(stderr, "runtime error: {}\n", e.what());
        return kExitRuntime;
    }
    return 0;
}
