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

#include "qaoafs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "qaoafs/adapt.hpp"
#include "qaoafs/exact_solver.hpp"
#include "qaoafs/io.hpp"
#include "qaoafs/statevector.hpp"

namespace qaoafs {
namespace {

class YamlReader {
public:
    explicit YamlReader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const YAML::Node& node, const std::string& key, const std::string& msg) const {
        const auto mark = node.Mark();
        if (mark.is_null() || mark.line < 0) throw ConfigError(fmt::format("{}: {}: {}", source_, key, msg));
        throw ConfigError(fmt::format("{}:{}: {}: {}", source_, mark.line + 1, key, msg));
    }

    void check_keys(const YAML::Node& map, std::initializer_list<const char*> allowed, const std::string& prefix) const {
        if (!map.IsMap()) fail(map, prefix.empty() ? "<root>" : prefix, "expected a mapping");
        for (const auto& kv : map) {
            const auto key = kv.first.as<std::string>();
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
                fail(kv.first, prefix.empty() ? key : prefix + "." + key, "unknown key");
            }
        }
    }

    template <typename T>
    T scalar(const YAML::Node& node, const std::string& key) const {
        if (!node.IsScalar()) fail(node, key, "expected a scalar");
        if constexpr (std::is_unsigned_v<T> && !std::is_same_v<T, bool>) {
            if (node.Scalar().starts_with('-')) fail(node, key, "must be non-negative");
        }
        try {
            return node.as<T>();
        } catch (const YAML::Exception&) {
            fail(node, key, "cannot parse '" + node.Scalar() + "'");
        }
    }

    template <typename T>
    std::vector<T> list(const YAML::Node& node, const std::string& key) const {
        if (!node.IsSequence()) fail(node, key, "expected a list");
        std::vector<T> out;
        for (std::size_t i = 0; i < node.size(); ++i) out.push_back(scalar<T>(node[i], fmt::format("{}[{}]", key, i)));
        return out;
    }

private:
    std::string source_;
};

template <typename T>
void require_unique(const std::vector<T>& v, const std::string& key) {
    std::set<T> seen(v.begin(), v.end());
    if (seen.size() != v.size()) throw ConfigError(key + ": duplicate entries");
}

std::string alpha_tag(double alpha) { return format_double(alpha); }

/// Runs fn(i) for i in [0, count) on up to `jobs` threads and rethrows the
/// first failure by index once all workers have stopped.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& fn) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t i; !stop && (i = next++) < count;) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                stop = true;
            }
        }
    };
    const std::size_t threads = std::min(jobs, count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

std::vector<std::string> ExperimentConfig::algorithms() const {
    switch (algorithm) {
        case AlgorithmChoice::Standard: return {"standard"};
        case AlgorithmChoice::Adapt: return {"adapt"};
        case AlgorithmChoice::Both: return {"standard", "adapt"};
    }
    return {};
}

void ExperimentConfig::validate() const {
    if (sizes.empty()) throw ConfigError("sizes: must not be empty");
    if (alphas.empty()) throw ConfigError("alphas: must not be empty");
    if (seeds.empty()) throw ConfigError("seeds: must not be empty");
    require_unique(sizes, "sizes");
    require_unique(alphas, "alphas");
    require_unique(seeds, "seeds");
    for (std::size_t n : sizes) {
        if (n < 1) throw ConfigError("sizes: every size must be >= 1");
    }
    for (double a : alphas) {
        if (!(a >= 0.0 && a <= 1.0)) throw ConfigError(fmt::format("alphas: {} is outside [0, 1]", a));
    }
    if (layers < 1) throw ConfigError("layers: must be >= 1");
    if (shots < 1) throw ConfigError("shots: must be >= 1");
    if (!(distribution.lo < distribution.hi)) throw ConfigError("distribution: need lo < hi");
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) throw ConfigError("adapt.gamma0: must be a positive number");
    if (jobs < 1) throw ConfigError("jobs: must be >= 1");
    try {
        optimizer.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("optimizer: ") + e.what());
    }
    const auto& o = estimate.options;
    if (o.layers < 1 || o.error_layers < 1) throw ConfigError("estimate: layers and error_layers must be >= 1");
    if (o.iterations < 1 || o.shots < 1) throw ConfigError("estimate: iterations and shots must be >= 1");
    if (!(estimate.alpha >= 0.0 && estimate.alpha <= 1.0)) throw ConfigError("estimate.alpha: outside [0, 1]");
}

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ConfigError(fmt::format("{}:{}: {}", source, e.mark.line + 1, e.msg));
    }
    ExperimentConfig cfg;
    if (root.IsNull()) return cfg;
    const YamlReader r(source);
    r.check_keys(root,
                 {"sizes", "alphas", "seeds", "algorithm", "layers", "mode", "shots", "distribution", "optimizer", "adapt",
                  "estimate", "jobs", "timing"},
                 "");

    if (auto n = root["sizes"]) cfg.sizes = r.list<std::size_t>(n, "sizes");
    if (auto n = root["alphas"]) cfg.alphas = r.list<double>(n, "alphas");
    if (auto n = root["seeds"]) {
        if (n.IsScalar()) {
            try {
                cfg.seeds = parse_seed_list(n.Scalar());
            } catch (const ConfigError& e) {
                r.fail(n, "seeds", e.what());
            }
        } else {
            cfg.seeds = r.list<std::uint64_t>(n, "seeds");
        }
    }
    if (auto n = root["algorithm"]) {
        const auto a = r.scalar<std::string>(n, "algorithm");
        if (a == "standard") {
            cfg.algorithm = AlgorithmChoice::Standard;
        } else if (a == "adapt") {
            cfg.algorithm = AlgorithmChoice::Adapt;
        } else if (a == "both") {
            cfg.algorithm = AlgorithmChoice::Both;
        } else {
            r.fail(n, "algorithm", "expected standard, adapt or both");
        }
    }
    if (auto n = root["layers"]) cfg.layers = r.scalar<std::size_t>(n, "layers");
    if (auto n = root["mode"]) {
        const auto m = r.scalar<std::string>(n, "mode");
        if (m == "exact") {
            cfg.mode = EvalMode::Exact;
        } else if (m == "shots") {
            cfg.mode = EvalMode::Shots;
        } else {
            r.fail(n, "mode", "expected exact or shots");
        }
    }
    if (auto n = root["shots"]) cfg.shots = r.scalar<std::uint64_t>(n, "shots");
    if (auto d = root["distribution"]) {
        r.check_keys(d, {"lo", "hi"}, "distribution");
        if (auto n = d["lo"]) cfg.distribution.lo = r.scalar<double>(n, "distribution.lo");
        if (auto n = d["hi"]) cfg.distribution.hi = r.scalar<double>(n, "distribution.hi");
    }
    if (auto o = root["optimizer"]) {
        r.check_keys(o, {"max_iterations", "max_evaluations", "x_tolerance", "f_tolerance"}, "optimizer");
        if (auto n = o["max_iterations"]) cfg.optimizer.max_iterations = r.scalar<std::size_t>(n, "optimizer.max_iterations");
        if (auto n = o["max_evaluations"]) cfg.optimizer.max_evaluations = r.scalar<std::size_t>(n, "optimizer.max_evaluations");
        if (auto n = o["x_tolerance"]) cfg.optimizer.x_tolerance = r.scalar<double>(n, "optimizer.x_tolerance");
        if (auto n = o["f_tolerance"]) cfg.optimizer.f_tolerance = r.scalar<double>(n, "optimizer.f_tolerance");
    }
    if (auto a = root["adapt"]) {
        r.check_keys(a, {"gamma0", "shot_gradients"}, "adapt");
        if (auto n = a["gamma0"]) cfg.gamma0 = r.scalar<double>(n, "adapt.gamma0");
        if (auto n = a["shot_gradients"]) cfg.shot_gradients = r.scalar<bool>(n, "adapt.shot_gradients");
    }
    if (auto e = root["estimate"]) {
        r.check_keys(e, {"devices", "device_file", "alpha", "layers", "iterations", "shots", "error_layers", "swap_cost"},
                     "estimate");
        auto& s = cfg.estimate;
        if (auto n = e["devices"]) s.devices = r.list<std::string>(n, "estimate.devices");
        if (auto n = e["device_file"]) s.device_file = r.scalar<std::string>(n, "estimate.device_file");
        if (auto n = e["alpha"]) s.alpha = r.scalar<double>(n, "estimate.alpha");
        if (auto n = e["layers"]) s.options.layers = r.scalar<std::size_t>(n, "estimate.layers");
        if (auto n = e["iterations"]) s.options.iterations = r.scalar<std::uint64_t>(n, "estimate.iterations");
        if (auto n = e["shots"]) s.options.shots = r.scalar<std::uint64_t>(n, "estimate.shots");
        if (auto n = e["error_layers"]) s.options.error_layers = r.scalar<std::size_t>(n, "estimate.error_layers");
        if (auto n = e["swap_cost"]) s.options.swap_cost = r.scalar<std::size_t>(n, "estimate.swap_cost");
    }
    if (auto n = root["jobs"]) cfg.jobs = r.scalar<std::size_t>(n, "jobs");
    if (auto n = root["timing"]) cfg.timing = r.scalar<bool>(n, "timing");

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    ExperimentConfig cfg = parse_config(ss.str(), path.string());
    if (cfg.estimate.device_file && cfg.estimate.device_file->is_relative()) {
        cfg.estimate.device_file = path.parent_path() / *cfg.estimate.device_file;
    }
    return cfg;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    auto parse_u64 = [&](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
            throw ConfigError("invalid seed '" + s + "' in '" + text + "'");
        }
        try {
            return static_cast<std::uint64_t>(std::stoull(s));
        } catch (const std::out_of_range&) {
            throw ConfigError("seed '" + s + "' does not fit in 64 bits");
        }
    };
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_u64(item));
            continue;
        }
        const std::uint64_t lo = parse_u64(item.substr(0, dots));
        const std::uint64_t hi = parse_u64(item.substr(dots + 2));
        if (hi < lo) throw ConfigError("empty seed range '" + item + "'");
        if (hi - lo >= 1000000) throw ConfigError("seed range '" + item + "' is too large");
        for (std::uint64_t s = lo;; ++s) {
            out.push_back(s);
            if (s == hi) break;
        }
    }
    if (out.empty()) throw ConfigError("empty seed list");
    return out;
}

std::vector<QaoaRunRecord> cmd_solve(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
    cfg.validate();
    for (std::size_t n : cfg.sizes) {
        if (n > kMaxQubits) throw ConfigError(fmt::format("sizes: {} exceeds the simulator cap of {} qubits", n, kMaxQubits));
    }
    struct Cell {
        std::size_t n;
        double alpha;
        std::uint64_t seed;
        std::string algorithm;
    };
    auto sizes = cfg.sizes;
    auto alphas = cfg.alphas;
    auto seeds = cfg.seeds;
    std::sort(sizes.begin(), sizes.end());
    std::sort(alphas.begin(), alphas.end());
    std::sort(seeds.begin(), seeds.end());
    std::vector<Cell> cells;
    for (std::size_t n : sizes) {
        for (double a : alphas) {
            for (std::uint64_t s : seeds) {
                for (const auto& alg : cfg.algorithms()) cells.push_back({n, a, s, alg});
            }
        }
    }

    std::vector<QaoaRunRecord> records(cells.size());
    parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        const auto inst = generate_instance(c.n, c.seed, c.alpha, cfg.distribution);
        RunConfig rc;
        rc.mode = cfg.mode;
        rc.shots = cfg.shots;
        rc.optimizer = cfg.optimizer;
        rc.gamma0 = cfg.gamma0;
        rc.shot_gradients = cfg.shot_gradients;
        rc.c_exact = brute_force_min(inst).value;
        QaoaRunRecord rec = c.algorithm == "adapt" ? run_adapt_qaoa(inst, cfg.layers, rc, c.seed)
                                                   : run_standard_qaoa(inst, cfg.layers, rc, c.seed);
        if (!cfg.timing) {
            for (auto& l : rec.layers) l.seconds = l.selection_seconds = 0.0;
        }
        const auto name = fmt::format("{}_n{}_a{}_s{}.json", c.algorithm, c.n, alpha_tag(c.alpha), c.seed);
        write_file_atomic(out_dir / "runs" / name, run_record_to_json(rec).dump(2) + "\n");
        records[i] = std::move(rec);
    });

    std::string layers = std::string(kLayerCsvHeader) + "\n";
    for (const auto& rec : records) layers += layer_csv_rows(rec);
    write_file_atomic(out_dir / "layers.csv", layers);
    write_file_atomic(out_dir / "summary.csv", summary_csv(records));
    return records;
}

std::vector<DeviceProfile> resolve_devices(const EstimateSettings& s) {
    std::vector<DeviceProfile> available = builtin_device_profiles();
    if (s.device_file) {
        try {
            auto extra = devices_from_json(read_json_file(*s.device_file));
            available.insert(available.end(), extra.begin(), extra.end());
        } catch (const FormatError& e) {
            throw ConfigError(std::string("estimate.device_file: ") + e.what());
        }
    }
    std::vector<DeviceProfile> out;
    if (s.devices.empty()) {
        return s.device_file ? std::vector<DeviceProfile>(available.begin() + builtin_device_profiles().size(),
                                                          available.end())
                             : available;
    }
    for (const auto& name : s.devices) {
        // Later definitions (from the device file) shadow builtins of the same name.
        auto it = std::find_if(available.rbegin(), available.rend(), [&](const DeviceProfile& d) { return d.name == name; });
        if (it == available.rend()) throw ConfigError("estimate.devices: unknown device '" + name + "'");
        out.push_back(*it);
    }
    return out;
}

std::vector<ResourceEstimate> cmd_estimate(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
    cfg.validate();
    const auto devices = resolve_devices(cfg.estimate);
    auto sizes = cfg.sizes;
    auto seeds = cfg.seeds;
    std::sort(sizes.begin(), sizes.end());
    std::sort(seeds.begin(), seeds.end());
    for (std::size_t n : sizes) {
        for (const auto& d : devices) {
            if (n > d.topology.size()) {
                throw ConfigError(fmt::format("sizes: n = {} exceeds the {} qubits of device {}", n, d.topology.size(), d.name));
            }
        }
    }
    struct Cell {
        std::size_t n;
        std::uint64_t seed;
        std::size_t device;
    };
    std::vector<Cell> cells;
    for (std::size_t n : sizes) {
        for (std::uint64_t s : seeds) {
            for (std::size_t d = 0; d < devices.size(); ++d) cells.push_back({n, s, d});
        }
    }
    std::vector<ResourceEstimate> out(cells.size());
    parallel_for(cells.size(), cfg.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        const auto inst = generate_instance(c.n, c.seed, cfg.estimate.alpha, cfg.distribution);
        out[i] = estimate_resources(to_ising(inst), devices[c.device], cfg.estimate.options);
    });
    std::string csv = std::string(kEstimateCsvHeader) + "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) csv += estimate_csv_row(cells[i].seed, out[i]);
    write_file_atomic(out_dir / "estimate.csv", csv);
    return out;
}

ExactSolution cmd_oracle(const std::filesystem::path& instance_file, const std::filesystem::path& out_file,
                         const std::string& method, double gap) {
    if (method != "brute-force" && method != "branch-and-bound" && method != "both") {
        throw ConfigError("method: expected brute-force, branch-and-bound or both");
    }
    if (!(gap >= 0.0)) throw ConfigError("gap: must be >= 0");
    FeatureSelectionInstance inst = [&] {
        try {
            return instance_from_json(read_json_file(instance_file));
        } catch (const FormatError& e) {
            throw ConfigError(e.what());
        }
    }();
    const std::size_t cap = method == "branch-and-bound" ? kBranchAndBoundMaxFeatures : kBruteForceMaxFeatures;
    if (inst.size() > cap) {
        throw ConfigError(fmt::format("instance has {} features; {} supports at most {}", inst.size(), method, cap));
    }

    ExactSolution primary = method == "branch-and-bound" ? branch_and_bound_min(inst, gap) : brute_force_min(inst);
    json doc = solution_to_json(inst, primary);
    if (method == "both") {
        const ExactSolution bb = branch_and_bound_min(inst, gap);
        doc["branch_and_bound"] = solution_to_json(inst, bb);
        const double tol = gap == 0.0 ? 1e-12 : gap;
        if (std::abs(bb.value - primary.value) > tol * std::max(1.0, std::abs(primary.value))) {
            throw std::runtime_error(fmt::format("brute force ({}) and branch and bound ({}) disagree",
                                                 format_double(primary.value), format_double(bb.value)));
        }
    }
    write_file_atomic(out_file, doc.dump(2) + "\n");
    return primary;
}

std::vector<std::filesystem::path> cmd_gen(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
    cfg.validate();
    std::vector<std::filesystem::path> paths;
    for (std::size_t n : cfg.sizes) {
        for (double a : cfg.alphas) {
            for (std::uint64_t s : cfg.seeds) {
                const auto inst = generate_instance(n, s, a, cfg.distribution);
                auto p = out_dir / fmt::format("instance_n{}_a{}_s{}.json", n, alpha_tag(a), s);
                write_file_atomic(p, instance_to_json(inst).dump(2) + "\n");
                paths.push_back(std::move(p));
            }
        }
    }
    return paths;
}

}  // namespace qaoafs
