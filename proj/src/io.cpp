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

#include "qaoafs/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <tuple>

#include <fmt/format.h>

namespace qaoafs {
namespace {

void require_object(const json& j, const std::string& what) {
    if (!j.is_object()) throw FormatError(what + ": expected a JSON object");
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    for (const auto& [key, value] : j.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
            throw FormatError(what + ": unknown key '" + key + "'");
        }
    }
}

template <typename T>
T get(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) throw FormatError(what + ": missing key '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(what + "." + key + ": " + e.what());
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& what) {
    return j.contains(key) ? get<T>(j, key, what) : fallback;
}

}  // namespace

json instance_to_json(const FeatureSelectionInstance& inst) {
    const std::size_t n = inst.size();
    json diag = json::array();
    json off = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        diag.push_back(inst.q().diag(i));
        for (std::size_t j = i + 1; j < n; ++j) off.push_back({{"i", i}, {"j", j}, {"value", inst.q().offdiag(i, j)}});
    }
    return {{"n", n}, {"alpha", inst.alpha()}, {"seed", inst.seed()}, {"diag", diag}, {"offdiag", off}};
}

FeatureSelectionInstance instance_from_json(const json& j) {
    const std::string what = "instance";
    require_object(j, what);
    check_keys(j, {"n", "alpha", "seed", "diag", "offdiag"}, what);
    const auto n = get<std::size_t>(j, "n", what);
    const auto diag = get<std::vector<double>>(j, "diag", what);
    if (diag.size() != n) {
        throw FormatError(fmt::format("instance: diag has {} entries but n = {}", diag.size(), n));
    }
    QuboMatrix q(n);
    for (std::size_t i = 0; i < n; ++i) q.set(i, i, diag[i]);
    if (j.contains("offdiag")) {
        const json& off = j.at("offdiag");
        if (!off.is_array()) throw FormatError("instance.offdiag: expected an array");
        for (std::size_t k = 0; k < off.size(); ++k) {
            const std::string w = fmt::format("instance.offdiag[{}]", k);
            require_object(off[k], w);
            check_keys(off[k], {"i", "j", "value"}, w);
            const auto a = get<std::size_t>(off[k], "i", w);
            const auto b = get<std::size_t>(off[k], "j", w);
            if (a >= b || b >= n) throw FormatError(w + ": need i < j < n");
            q.set(a, b, get<double>(off[k], "value", w));
        }
    }
    try {
        return FeatureSelectionInstance(std::move(q), get<double>(j, "alpha", what), get_or<std::uint64_t>(j, "seed", 0, what));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("instance: ") + e.what());
    }
}

json run_record_to_json(const QaoaRunRecord& rec) {
    json layer = json::array(), cost = json::array(), exact = json::array(), initial = json::array(), ratio = json::array(),
         seconds = json::array(), mixer = json::array(), gradient = json::array(), sel = json::array(),
         evals = json::array(), iters = json::array(), conv = json::array(), params = json::array();
    for (const auto& l : rec.layers) {
        layer.push_back(l.layer);
        cost.push_back(l.cost);
        exact.push_back(l.exact_cost);
        initial.push_back(l.initial_cost);
        ratio.push_back(l.ratio);
        seconds.push_back(l.seconds);
        mixer.push_back(l.mixer);
        gradient.push_back(l.gradient);
        sel.push_back(l.selection_seconds);
        evals.push_back(l.evaluations);
        iters.push_back(l.iterations);
        conv.push_back(l.converged);
        params.push_back(l.parameters);
    }
    return {
        {"algorithm", rec.algorithm},
        {"n", rec.n},
        {"alpha", rec.alpha},
        {"instance_seed", rec.instance_seed},
        {"run_seed", rec.run_seed},
        {"mode", to_string(rec.mode)},
        {"shots", rec.shots},
        {"c_exact", rec.c_exact},
        {"layers",
         {{"layer", layer},
          {"cost", cost},
          {"exact_cost", exact},
          {"initial_cost", initial},
          {"ratio", ratio},
          {"seconds", seconds},
          {"mixer", mixer},
          {"gradient", gradient},
          {"selection_seconds", sel},
          {"evaluations", evals},
          {"iterations", iters},
          {"converged", conv},
          {"parameters", params}}},
    };
}

QaoaRunRecord run_record_from_json(const json& j) {
    const std::string what = "run record";
    require_object(j, what);
    check_keys(j, {"algorithm", "n", "alpha", "instance_seed", "run_seed", "mode", "shots", "c_exact", "layers"}, what);
    QaoaRunRecord rec;
    rec.algorithm = get<std::string>(j, "algorithm", what);
    rec.n = get<std::size_t>(j, "n", what);
    rec.alpha = get<double>(j, "alpha", what);
    rec.instance_seed = get<std::uint64_t>(j, "instance_seed", what);
    rec.run_seed = get<std::uint64_t>(j, "run_seed", what);
    const auto mode = get<std::string>(j, "mode", what);
    if (mode == "exact") {
        rec.mode = EvalMode::Exact;
    } else if (mode == "shots") {
        rec.mode = EvalMode::Shots;
    } else {
        throw FormatError("run record: unknown mode '" + mode + "'");
    }
    rec.shots = get<std::uint64_t>(j, "shots", what);
    rec.c_exact = get<double>(j, "c_exact", what);

    const json& L = j.at("layers");
    require_object(L, "run record.layers");
    const std::string lw = "run record.layers";
    const auto layer = get<std::vector<std::size_t>>(L, "layer", lw);
    const auto cost = get<std::vector<double>>(L, "cost", lw);
    const auto exact = get<std::vector<double>>(L, "exact_cost", lw);
    const auto initial = get<std::vector<double>>(L, "initial_cost", lw);
    const auto ratio = get<std::vector<double>>(L, "ratio", lw);
    const auto seconds = get<std::vector<double>>(L, "seconds", lw);
    const auto mixer = get<std::vector<std::string>>(L, "mixer", lw);
    const auto gradient = get<std::vector<double>>(L, "gradient", lw);
    const auto sel = get<std::vector<double>>(L, "selection_seconds", lw);
    const auto evals = get<std::vector<std::size_t>>(L, "evaluations", lw);
    const auto iters = get<std::vector<std::size_t>>(L, "iterations", lw);
    const auto conv = get<std::vector<bool>>(L, "converged", lw);
    const auto params = get<std::vector<std::vector<double>>>(L, "parameters", lw);
    const std::size_t count = layer.size();
    for (std::size_t s : {cost.size(), exact.size(), initial.size(), ratio.size(), seconds.size(), mixer.size(), gradient.size(),
                          sel.size(), evals.size(), iters.size(), conv.size(), params.size()}) {
        if (s != count) throw FormatError("run record.layers: arrays differ in length");
    }
    for (std::size_t k = 0; k < count; ++k) {
        LayerRecord l;
        l.layer = layer[k];
        l.parameters = params[k];
        l.cost = cost[k];
        l.exact_cost = exact[k];
        l.initial_cost = initial[k];
        l.ratio = ratio[k];
        l.seconds = seconds[k];
        l.mixer = mixer[k];
        l.gradient = gradient[k];
        l.selection_seconds = sel[k];
        l.evaluations = evals[k];
        l.iterations = iters[k];
        l.converged = conv[k];
        rec.layers.push_back(std::move(l));
    }
    return rec;
}

json solution_to_json(const FeatureSelectionInstance& inst, const ExactSolution& sol) {
    std::string bits;
    json selected = json::array();
    for (std::size_t i = 0; i < sol.minimizer.size(); ++i) {
        bits.push_back(sol.minimizer[i] ? '1' : '0');
        if (sol.minimizer[i]) selected.push_back(i);
    }
    return {
        {"n", inst.size()},
        {"alpha", inst.alpha()},
        {"seed", inst.seed()},
        {"method", to_string(sol.method)},
        {"minimizer", bits},
        {"selected", selected},
        {"c_exact", sol.value},
        {"gap", sol.gap_at_termination},
        {"nodes", sol.nodes},
    };
}

Topology topology_from_json(const json& j) {
    const std::string what = "topology";
    require_object(j, what);
    const auto kind_text = get<std::string>(j, "kind", what);
    TopologyKind kind;
    try {
        kind = parse_topology_kind(kind_text);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("topology: ") + e.what());
    }
    try {
        switch (kind) {
            case TopologyKind::HeavyHex:
                check_keys(j, {"kind", "rows", "row_length", "trim_corners"}, what);
                if (!j.contains("rows") && !j.contains("row_length")) return Topology::heavy_hex_127();
                return Topology::heavy_hex(get<std::size_t>(j, "rows", what), get<std::size_t>(j, "row_length", what),
                                           get_or<bool>(j, "trim_corners", false, what));
            case TopologyKind::SquareLattice:
                check_keys(j, {"kind", "rows", "cols"}, what);
                return Topology::square_lattice(get<std::size_t>(j, "rows", what), get<std::size_t>(j, "cols", what));
            case TopologyKind::AllToAll:
                check_keys(j, {"kind", "nodes"}, what);
                return Topology::all_to_all(get<std::size_t>(j, "nodes", what));
            case TopologyKind::Custom: {
                check_keys(j, {"kind", "nodes", "edges"}, what);
                auto edges = get<std::vector<std::pair<std::size_t, std::size_t>>>(j, "edges", what);
                return Topology(TopologyKind::Custom, get<std::size_t>(j, "nodes", what), std::move(edges));
            }
        }
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("topology: ") + e.what());
    }
    throw FormatError("topology: unhandled kind");
}

json topology_to_json(const Topology& t) {
    json edges = json::array();
    for (const auto& [a, b] : t.edges()) edges.push_back({a, b});
    return {{"kind", "custom"}, {"nodes", t.size()}, {"edges", edges}};
}

DeviceProfile device_from_json(const json& j) {
    std::string what = "device";
    require_object(j, what);
    check_keys(j, {"name", "t1_us", "t2_us", "e1", "e2", "em", "topology"}, what);
    const auto name = get<std::string>(j, "name", what);
    what = "device '" + name + "'";
    CalibrationData c{get<double>(j, "t1_us", what), get<double>(j, "t2_us", what), get<double>(j, "e1", what),
                      get<double>(j, "e2", what), get<double>(j, "em", what)};
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw FormatError(what + ": " + e.what());
    }
    if (!j.contains("topology")) throw FormatError(what + ": missing key 'topology'");
    return {name, c, topology_from_json(j.at("topology"))};
}

json device_to_json(const DeviceProfile& d) {
    return {{"name", d.name},
            {"t1_us", d.calibration.t1_us},
            {"t2_us", d.calibration.t2_us},
            {"e1", d.calibration.e1},
            {"e2", d.calibration.e2},
            {"em", d.calibration.em},
            {"topology", topology_to_json(d.topology)}};
}

std::vector<DeviceProfile> devices_from_json(const json& j) {
    const json* list = &j;
    if (j.is_object() && j.contains("devices")) {
        check_keys(j, {"devices"}, "device file");
        list = &j.at("devices");
    }
    std::vector<DeviceProfile> out;
    if (list->is_array()) {
        for (const auto& d : *list) out.push_back(device_from_json(d));
    } else {
        out.push_back(device_from_json(*list));
    }
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string format_double(double x) { return fmt::format("{}", x); }

std::string layer_csv_rows(const QaoaRunRecord& rec) {
    std::string out;
    double elapsed = 0.0;
    for (const auto& l : rec.layers) {
        elapsed += l.seconds;
        out += fmt::format("{},{},{},{},{},{},{},{}\n", rec.run_seed, rec.n, format_double(rec.alpha), rec.algorithm,
                           l.layer, format_double(l.cost), format_double(l.ratio), format_double(elapsed));
    }
    return out;
}

std::string summary_csv(std::span<const QaoaRunRecord> records) {
    struct Acc {
        std::size_t runs = 0;
        double r_sum = 0, r_min = INFINITY, r_max = -INFINITY;
        double c_sum = 0, c_min = INFINITY, c_max = -INFINITY;
        double s_sum = 0;
    };
    std::map<std::tuple<std::size_t, double, std::string, std::size_t>, Acc> groups;
    for (const auto& rec : records) {
        double elapsed = 0.0;
        for (const auto& l : rec.layers) {
            elapsed += l.seconds;
            Acc& a = groups[{rec.n, rec.alpha, rec.algorithm, l.layer}];
            ++a.runs;
            a.r_sum += l.ratio;
            a.r_min = std::min(a.r_min, l.ratio);
            a.r_max = std::max(a.r_max, l.ratio);
            a.c_sum += l.cost;
            a.c_min = std::min(a.c_min, l.cost);
            a.c_max = std::max(a.c_max, l.cost);
            a.s_sum += elapsed;
        }
    }
    std::string out = std::string(kSummaryCsvHeader) + "\n";
    for (const auto& [key, a] : groups) {
        const auto& [n, alpha, algorithm, layer] = key;
        const double runs = static_cast<double>(a.runs);
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}\n", n, format_double(alpha), algorithm, layer, a.runs,
                           format_double(a.r_sum / runs), format_double(a.r_min), format_double(a.r_max),
                           format_double(a.c_sum / runs), format_double(a.c_min), format_double(a.c_max),
                           format_double(a.s_sum / runs));
    }
    return out;
}

std::string estimate_csv_row(std::uint64_t seed, const ResourceEstimate& e) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", seed, e.device, e.topology, e.n, e.layers, e.swaps,
                       e.profile.d1, e.profile.d2, e.profile.n1, e.profile.n2, e.error_profile.nm,
                       format_double(e.total_time_s), format_double(e.error_probability));
}

}  // namespace qaoafs
