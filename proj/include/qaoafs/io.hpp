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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaoafs/device.hpp"
#include "qaoafs/exact_solver.hpp"
#include "qaoafs/problem.hpp"
#include "qaoafs/qaoa.hpp"

namespace qaoafs {

using nlohmann::json;

/// Raised for malformed input documents (instances, device files, records).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instances: {n, alpha, seed, diag: [...], offdiag: [{i, j, value}, ...]}.
json instance_to_json(const FeatureSelectionInstance& inst);
FeatureSelectionInstance instance_from_json(const json& j);

json run_record_to_json(const QaoaRunRecord& rec);
QaoaRunRecord run_record_from_json(const json& j);

json solution_to_json(const FeatureSelectionInstance& inst, const ExactSolution& sol);

/// Topology descriptors:
///   {"kind": "heavy-hex"}                                  127-qubit layout
///   {"kind": "heavy-hex", "rows": r, "row_length": l, "trim_corners": b}
///   {"kind": "square-lattice", "rows": r, "cols": c}
///   {"kind": "all-to-all", "nodes": k}
///   {"kind": "custom", "nodes": k, "edges": [[a, b], ...]}
Topology topology_from_json(const json& j);
json topology_to_json(const Topology& t);

/// {name, t1_us, t2_us, e1, e2, em, topology}.
DeviceProfile device_from_json(const json& j);
json device_to_json(const DeviceProfile& d);
/// A single device object, an array of them, or {"devices": [...]}.
std::vector<DeviceProfile> devices_from_json(const json& j);

json read_json_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

// CSV bodies. Every row of the layer table is a function of one run record;
// `seconds` is the cumulative wall clock up to and including that layer.
inline constexpr const char* kLayerCsvHeader = "seed,n,alpha,algorithm,layer,cost,ratio,seconds";
std::string layer_csv_rows(const QaoaRunRecord& rec);

/// Mean/min/max of ratio and cost across seeds, one row per (n, alpha, algorithm, layer).
inline constexpr const char* kSummaryCsvHeader =
    "n,alpha,algorithm,layer,runs,ratio_mean,ratio_min,ratio_max,cost_mean,cost_min,cost_max,seconds_mean";
std::string summary_csv(std::span<const QaoaRunRecord> records);

inline constexpr const char* kEstimateCsvHeader =
    "seed,device,topology,n,layers,swaps,d1,d2,n1,n2,nm,t_total_s,e_tot";
std::string estimate_csv_row(std::uint64_t seed, const ResourceEstimate& e);

}  // namespace qaoafs
