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

#include "qaoafs/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "qaoafs/statevector.hpp"

namespace qaoafs {

std::vector<std::size_t> default_initial_layout(const Topology& t, std::size_t n) {
    if (n > t.size()) {
        throw std::invalid_argument("circuit needs " + std::to_string(n) + " qubits but topology has " +
                                    std::to_string(t.size()));
    }
    auto order = t.bfs_order(0);
    order.resize(n);
    return order;
}

RoutedCircuit route_circuit(const Circuit& c, const Topology& t, std::optional<std::vector<std::size_t>> initial_layout) {
    const std::size_t n = c.num_qubits();
    RoutedCircuit out{Circuit(t.size()), initial_layout ? *initial_layout : default_initial_layout(t, n), {}, 0};
    if (out.initial_layout.size() != n) throw std::invalid_argument("initial layout size differs from circuit");

    constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> l2p = out.initial_layout;
    std::vector<std::size_t> p2l(t.size(), kFree);
    for (std::size_t l = 0; l < n; ++l) {
        if (l2p[l] >= t.size() || p2l[l2p[l]] != kFree) throw std::invalid_argument("initial layout is not injective");
        p2l[l2p[l]] = l;
    }

    auto do_swap = [&](std::size_t a, std::size_t b) {
        out.physical.add(Gate::swap(a, b));
        ++out.swaps;
        std::swap(p2l[a], p2l[b]);
        if (p2l[a] != kFree) l2p[p2l[a]] = a;
        if (p2l[b] != kFree) l2p[p2l[b]] = b;
    };

    for (const auto& g : c.gates()) {
        if (g.arity() > 2) throw std::invalid_argument("router handles gates on at most two qubits");
        if (g.arity() == 2) {
            const std::size_t target = l2p[g.qubits[1]];
            const auto path = t.shortest_path(l2p[g.qubits[0]], target);
            // path = [p0, ..., target]; stop once the moving qubit neighbours target.
            for (std::size_t k = 0; k + 2 < path.size(); ++k) do_swap(path[k], path[k + 1]);
        }
        out.physical.add(g.remapped(l2p));
    }
    out.final_layout = l2p;
    return out;
}

RoutingCheck verify_routing(const Circuit& original, const RoutedCircuit& routed, const Topology& t) {
    RoutingCheck check;
    check.edges_ok = std::all_of(routed.physical.gates().begin(), routed.physical.gates().end(), [&](const Gate& g) {
        return g.arity() < 2 || t.adjacent(g.qubits[0], g.qubits[1]);
    });

    // Compact the touched physical qubits.
    std::vector<std::size_t> used = routed.initial_layout;
    for (const auto& g : routed.physical.gates()) used.insert(used.end(), g.qubits.begin(), g.qubits.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.size() > kMaxQubits) throw std::invalid_argument("routed circuit touches too many qubits to simulate");
    std::vector<std::size_t> compact(t.size(), 0);
    for (std::size_t k = 0; k < used.size(); ++k) compact[used[k]] = k;

    const std::size_t n = original.num_qubits();
    Circuit compact_circuit(used.size());
    for (const auto& g : routed.physical.gates()) compact_circuit.add(g.remapped(compact));

    // Logical qubits start in |0>, so the initial placement needs no permutation.
    StateVector ideal(n);
    ideal.apply(original);
    StateVector actual(used.size());
    actual.apply(compact_circuit);

    std::vector<Complex> expected(actual.dim(), Complex{});
    for (std::uint64_t x = 0; x < ideal.dim(); ++x) {
        std::uint64_t y = 0;
        for (std::size_t l = 0; l < n; ++l) {
            if ((x >> l) & 1U) y |= std::uint64_t{1} << compact[routed.final_layout[l]];
        }
        expected[y] = ideal[x];
    }
    const StateVector want = StateVector::from_amplitudes(std::move(expected));
    check.fidelity = std::norm(want.inner(actual));
    for (std::size_t y = 0; y < want.dim(); ++y) {
        if (std::abs(want[y] - actual[y]) > 1e-6) {
            check.first_mismatch = y;
            break;
        }
    }
    check.ok = check.edges_ok && check.fidelity >= 1.0 - 1e-9;
    return check;
}

Circuit to_native(const Circuit& c) {
    constexpr double kHalfPi = std::numbers::pi / 2;
    Circuit out(c.num_qubits());
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out.add(Gate::rz(g.qubits[0], kHalfPi));
                out.add(Gate::rx(g.qubits[0], kHalfPi));
                out.add(Gate::rz(g.qubits[0], kHalfPi));
                break;
            case GateKind::RY:
                out.add(Gate::rz(g.qubits[0], -kHalfPi));
                out.add(Gate::rx(g.qubits[0], g.angle));
                out.add(Gate::rz(g.qubits[0], kHalfPi));
                break;
            case GateKind::RX:
            case GateKind::RZ:
            case GateKind::CNOT:
            case GateKind::SWAP:
                out.add(g);
                break;
            case GateKind::PauliRotation: {
                const auto& terms = g.pauli->terms();
                // Rotate X and Y onto Z; record the inverse.
                std::vector<Gate> pre, post;
                for (const auto& [q, p] : terms) {
                    if (p == Pauli::X) {
                        for (const auto& h : {Gate::rz(q, kHalfPi), Gate::rx(q, kHalfPi), Gate::rz(q, kHalfPi)}) {
                            pre.push_back(h);
                            post.push_back(h);
                        }
                    } else if (p == Pauli::Y) {
                        pre.push_back(Gate::rx(q, kHalfPi));
                        post.push_back(Gate::rx(q, -kHalfPi));
                    }
                }
                for (const auto& x : pre) out.add(x);
                const std::size_t last = terms.back().first;
                for (std::size_t k = 0; k + 1 < terms.size(); ++k) out.add(Gate::cnot(terms[k].first, last));
                out.add(Gate::rz(last, 2.0 * g.angle));
                for (std::size_t k = terms.size() - 1; k-- > 0;) out.add(Gate::cnot(terms[k].first, last));
                for (auto it = post.rbegin(); it != post.rend(); ++it) out.add(*it);
                break;
            }
        }
    }
    return out;
}

DepthProfile compute_depth_profile(const Circuit& c, const ProfileOptions& opts) {
    DepthProfile prof;
    prof.nm = opts.measurements;
    std::vector<std::size_t> frontier(c.num_qubits(), 0);
    std::vector<bool> layer_two;  // per layer: holds a two-qubit gate
    for (const auto& g : c.gates()) {
        const bool virtual_z =
            g.kind == GateKind::RZ || (g.kind == GateKind::PauliRotation && g.arity() == 1 && g.pauli->is_diagonal());
        if (virtual_z) continue;
        if (g.arity() > 2) throw std::invalid_argument("lower gates to at most two qubits before profiling");

        std::size_t layer = 0;
        for (std::size_t q : g.qubits) layer = std::max(layer, frontier[q]);
        for (std::size_t q : g.qubits) frontier[q] = layer + 1;
        if (layer >= layer_two.size()) layer_two.resize(layer + 1, false);
        if (g.arity() == 2) {
            layer_two[layer] = true;
            prof.n2 += g.kind == GateKind::SWAP ? opts.swap_cost : 1;
        } else {
            ++prof.n1;
        }
    }
    for (bool two : layer_two) (two ? prof.d2 : prof.d1) += 1;
    return prof;
}

}  // namespace qaoafs
