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
#include <optional>
#include <vector>

#include "qaoafs/circuit.hpp"
#include "qaoafs/topology.hpp"

namespace qaoafs {

/// Circuit rewritten onto physical qubits with SWAPs inserted.
struct RoutedCircuit {
    Circuit physical;                        // over topology.size() qubits
    std::vector<std::size_t> initial_layout;  // logical -> physical before the first gate
    std::vector<std::size_t> final_layout;    // logical -> physical after the last gate
    std::size_t swaps = 0;
};

/// First `n` nodes of a breadth-first traversal from node 0.
std::vector<std::size_t> default_initial_layout(const Topology& t, std::size_t n);

/// Greedy router: for a two-qubit gate on non-adjacent physical qubits, the
/// first operand is swapped along Topology::shortest_path towards the second
/// until the two are adjacent. Deterministic.
RoutedCircuit route_circuit(const Circuit& c, const Topology& t,
                            std::optional<std::vector<std::size_t>> initial_layout = std::nullopt);

struct RoutingCheck {
    bool ok = false;
    double fidelity = 0.0;
    std::optional<std::size_t> first_mismatch;  // physical-basis index (compacted qubits)
    bool edges_ok = false;                      // every two-qubit gate sits on a coupling edge
};

/// Simulates both circuits and compares the routed state with the original
/// state permuted by final_layout. Physical qubits never touched are dropped;
/// at most kMaxQubits qubits may remain.
RoutingCheck verify_routing(const Circuit& original, const RoutedCircuit& routed, const Topology& t);

/// Rewrites a circuit into {RZ, RX, CNOT, SWAP}:
///   H -> RZ(pi/2) RX(pi/2) RZ(pi/2), RY(t) -> RZ(-pi/2) RX(t) RZ(pi/2),
///   PauliRotation(P, t) -> basis change, CNOT ladder, RZ(2t), inverse.
/// Equal to the input up to a global phase.
Circuit to_native(const Circuit& c);

struct DepthProfile {
    std::size_t d1 = 0;  // layers holding only single-qubit gates
    std::size_t d2 = 0;  // layers holding at least one two-qubit gate
    std::size_t n1 = 0;  // single-qubit gates
    std::size_t n2 = 0;  // two-qubit gates (a SWAP counts swap_cost times)
    std::size_t nm = 0;  // measurements

    friend bool operator==(const DepthProfile&, const DepthProfile&) = default;
};

struct ProfileOptions {
    /// Two-qubit gates charged per SWAP in n2. A SWAP occupies one layer slot.
    std::size_t swap_cost = 3;
    /// Measured qubits per execution.
    std::size_t measurements = 0;
};

/// As-soon-as-possible layering in gate order; each layer has at most one gate
/// per qubit. RZ and diagonal single-qubit rotations are virtual and excluded
/// from every count. Weight > 2 Pauli rotations must be lowered first.
DepthProfile compute_depth_profile(const Circuit& c, const ProfileOptions& opts = {});

}  // namespace qaoafs
