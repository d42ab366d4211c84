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
#include <string>
#include <vector>

#include "qaoafs/pauli.hpp"

namespace qaoafs {

enum class GateKind { H, RX, RY, RZ, CNOT, SWAP, PauliRotation };

std::string to_string(GateKind kind);

/// One circuit instruction.
///
/// Angle conventions:
///   RX/RY/RZ(theta)          = exp(-i theta/2 * sigma)
///   PauliRotation(P, theta)  = exp(-i theta * P)        (no factor 1/2)
/// so RZ(theta) on qubit q equals PauliRotation(Z_q, theta/2).
struct Gate {
    GateKind kind;
    std::vector<std::size_t> qubits;  // CNOT: {control, target}; PauliRotation: support of `pauli`
    double angle = 0.0;
    std::optional<PauliString> pauli;

    static Gate h(std::size_t q) { return {GateKind::H, {q}, 0.0, std::nullopt}; }
    static Gate rx(std::size_t q, double theta) { return {GateKind::RX, {q}, theta, std::nullopt}; }
    static Gate ry(std::size_t q, double theta) { return {GateKind::RY, {q}, theta, std::nullopt}; }
    static Gate rz(std::size_t q, double theta) { return {GateKind::RZ, {q}, theta, std::nullopt}; }
    static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, {control, target}, 0.0, std::nullopt}; }
    static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, {a, b}, 0.0, std::nullopt}; }
    static Gate pauli_rotation(const PauliString& p, double theta);

    std::size_t arity() const { return qubits.size(); }
    bool is_two_qubit() const { return qubits.size() == 2; }

    /// Same gate with every qubit index replaced by map[q].
    Gate remapped(const std::vector<std::size_t>& map) const;

    std::string str() const;
};

/// Ordered gate list over `n` qubits.
class Circuit {
public:
    explicit Circuit(std::size_t n = 0) : n_(n) {}

    std::size_t num_qubits() const { return n_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Validates indices (< n, pairwise distinct) and appends.
    void add(Gate g);
    void append(const Circuit& other);

    std::size_t count(GateKind kind) const;

private:
    std::size_t n_;
    std::vector<Gate> gates_;
};

}  // namespace qaoafs
