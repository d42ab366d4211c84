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

#include "qaoafs/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaoafs {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::CNOT: return "cx";
        case GateKind::SWAP: return "swap";
        case GateKind::PauliRotation: return "pauli_rot";
    }
    return "?";
}

Gate Gate::pauli_rotation(const PauliString& p, double theta) {
    Gate g{GateKind::PauliRotation, {}, theta, p};
    for (const auto& term : p.terms()) g.qubits.push_back(term.first);
    return g;
}

Gate Gate::remapped(const std::vector<std::size_t>& map) const {
    Gate g = *this;
    for (auto& q : g.qubits) q = map.at(q);
    if (pauli) {
        std::vector<PauliString::Term> terms;
        for (const auto& [q, p] : pauli->terms()) terms.emplace_back(map.at(q), p);
        g.pauli = PauliString(std::move(terms));
        g.qubits.clear();
        for (const auto& term : g.pauli->terms()) g.qubits.push_back(term.first);
    }
    return g;
}

std::string Gate::str() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind == GateKind::PauliRotation) os << "[" << pauli->str() << "]";
    if (kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::PauliRotation) {
        os << "(" << angle << ")";
    }
    for (std::size_t k = 0; k < qubits.size(); ++k) os << (k == 0 ? " " : ",") << qubits[k];
    return os.str();
}

void Circuit::add(Gate g) {
    if (g.qubits.empty()) throw std::invalid_argument("gate acts on no qubits");
    for (std::size_t k = 0; k < g.qubits.size(); ++k) {
        if (g.qubits[k] >= n_) {
            throw std::out_of_range("gate " + g.str() + " references qubit outside circuit of " +
                                    std::to_string(n_));
        }
        for (std::size_t m = 0; m < k; ++m) {
            if (g.qubits[m] == g.qubits[k]) throw std::invalid_argument("gate " + g.str() + " repeats a qubit");
        }
    }
    gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
    for (const auto& g : other.gates()) add(g);
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

}  // namespace qaoafs
