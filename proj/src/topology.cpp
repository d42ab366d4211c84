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

#include "qaoafs/topology.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace qaoafs {

std::string to_string(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::HeavyHex: return "heavy-hex";
        case TopologyKind::SquareLattice: return "square-lattice";
        case TopologyKind::AllToAll: return "all-to-all";
        case TopologyKind::Custom: return "custom";
    }
    return "?";
}

TopologyKind parse_topology_kind(const std::string& text) {
    if (text == "heavy-hex") return TopologyKind::HeavyHex;
    if (text == "square-lattice") return TopologyKind::SquareLattice;
    if (text == "all-to-all") return TopologyKind::AllToAll;
    if (text == "custom") return TopologyKind::Custom;
    throw std::invalid_argument("unknown topology '" + text + "'");
}

Topology::Topology(TopologyKind kind, std::size_t nodes, std::vector<Edge> edges)
    : kind_(kind), nodes_(nodes), adj_(nodes) {
    if (nodes == 0) throw std::invalid_argument("topology needs at least one node");
    for (auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("topology edge is a self loop on " + std::to_string(a));
        if (a >= nodes || b >= nodes) throw std::invalid_argument("topology edge references a missing node");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    const auto dist = distances_from(0);
    if (std::any_of(dist.begin(), dist.end(), [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); })) {
        throw std::invalid_argument("topology graph is disconnected");
    }
}

Topology Topology::all_to_all(std::size_t nodes) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < nodes; ++a) {
        for (std::size_t b = a + 1; b < nodes; ++b) edges.emplace_back(a, b);
    }
    return Topology(TopologyKind::AllToAll, nodes, std::move(edges));
}

Topology Topology::square_lattice(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("square lattice needs positive dimensions");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    }
    return Topology(TopologyKind::SquareLattice, rows * cols, std::move(edges));
}

Topology Topology::heavy_hex(std::size_t rows, std::size_t row_length, bool trim_corners) {
    if (rows == 0 || row_length < 3) throw std::invalid_argument("heavy-hex needs rows >= 1 and row_length >= 3");
    if (trim_corners && rows < 2) throw std::invalid_argument("heavy-hex corner trimming needs at least two rows");

    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    struct Bridge {
        std::size_t id, row, col;
    };
    // chain_ids[r][c] = node id of column c in chain r, or npos if trimmed.
    std::vector<std::vector<std::size_t>> chain_ids(rows, std::vector<std::size_t>(row_length, npos));
    std::vector<Bridge> bridges;
    std::vector<Edge> edges;
    std::size_t next = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t first = (trim_corners && r == rows - 1) ? 1 : 0;
        const std::size_t last = (trim_corners && r == 0) ? row_length - 1 : row_length;
        for (std::size_t c = first; c < last; ++c) {
            chain_ids[r][c] = next++;
            if (c > first) edges.emplace_back(chain_ids[r][c - 1], chain_ids[r][c]);
        }
        if (r + 1 == rows) break;
        // Bridges to the next chain are numbered before it.
        for (std::size_t c = (r % 2 == 0) ? 0 : 2; c < row_length; c += 4) {
            if (trim_corners && r == 0 && c == row_length - 1) continue;
            if (trim_corners && r + 2 == rows && c == 0) continue;
            bridges.push_back({next++, r, c});
        }
    }
    for (const auto& b : bridges) {
        edges.emplace_back(chain_ids[b.row][b.col], b.id);
        edges.emplace_back(b.id, chain_ids[b.row + 1][b.col]);
    }
    return Topology(TopologyKind::HeavyHex, next, std::move(edges));
}

bool Topology::adjacent(std::size_t a, std::size_t b) const {
    if (a >= nodes_ || b >= nodes_) return false;
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::size_t Topology::max_degree() const {
    std::size_t d = 0;
    for (const auto& list : adj_) d = std::max(d, list.size());
    return d;
}

std::vector<std::size_t> Topology::distances_from(std::size_t source) const {
    std::vector<std::size_t> dist(nodes_, std::numeric_limits<std::size_t>::max());
    std::queue<std::size_t> q;
    dist.at(source) = 0;
    q.push(source);
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t w : adj_[v]) {
            if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<std::size_t> Topology::shortest_path(std::size_t from, std::size_t to) const {
    const auto dist = distances_from(to);
    std::vector<std::size_t> path{from};
    std::size_t v = from;
    while (v != to) {
        for (std::size_t w : adj_[v]) {  // ascending
            if (dist[w] + 1 == dist[v]) {
                v = w;
                break;
            }
        }
        path.push_back(v);
    }
    return path;
}

std::vector<std::size_t> Topology::bfs_order(std::size_t start) const {
    std::vector<std::size_t> order;
    std::vector<bool> seen(nodes_, false);
    std::queue<std::size_t> q;
    seen.at(start) = true;
    q.push(start);
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        order.push_back(v);
        for (std::size_t w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    return order;
}

}  // namespace qaoafs
