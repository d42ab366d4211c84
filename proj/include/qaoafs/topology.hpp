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
#include <string>
#include <utility>
#include <vector>

namespace qaoafs {

enum class TopologyKind { HeavyHex, SquareLattice, AllToAll, Custom };

std::string to_string(TopologyKind kind);
TopologyKind parse_topology_kind(const std::string& text);

/// Undirected, connected coupling graph of a device.
class Topology {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    /// Validates: no self loops, indices < nodes, connected. Duplicate edges
    /// (in either orientation) are merged.
    Topology(TopologyKind kind, std::size_t nodes, std::vector<Edge> edges);

    static Topology all_to_all(std::size_t nodes);
    static Topology square_lattice(std::size_t rows, std::size_t cols);

    /// Heavy-hex tiling: `rows` chains of `row_length` qubits, consecutive
    /// chains joined through bridge qubits every four columns, alternating
    /// between column offsets 0 and 2. With `trim_corners` the first chain
    /// drops its last qubit and the last chain its first one, which for
    /// (7, 15) yields the 127-qubit Eagle layout.
    static Topology heavy_hex(std::size_t rows, std::size_t row_length, bool trim_corners);

    /// 127-qubit Eagle heavy-hex layout (144 edges).
    static Topology heavy_hex_127() { return heavy_hex(7, 15, true); }

    TopologyKind kind() const { return kind_; }
    std::size_t size() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    bool adjacent(std::size_t a, std::size_t b) const;
    double mean_degree() const { return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(nodes_); }
    std::size_t max_degree() const;

    /// Hop distances from `source` to every node.
    std::vector<std::size_t> distances_from(std::size_t source) const;

    /// Shortest path from `from` to `to` (both included). At every step the
    /// lowest-index neighbour that stays on a shortest path is taken.
    std::vector<std::size_t> shortest_path(std::size_t from, std::size_t to) const;

    /// Breadth-first visiting order from `start`, neighbours by ascending index.
    std::vector<std::size_t> bfs_order(std::size_t start = 0) const;

private:
    TopologyKind kind_;
    std::size_t nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace qaoafs
