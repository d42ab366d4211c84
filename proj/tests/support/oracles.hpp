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

// Reference implementations used only by tests. Everything here is built from
// definitions (dense Kronecker products, Eigen's matrix exponential, explicit
// term-by-term sums) and shares no code with the library's fast paths.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qaoafs/circuit.hpp"
#include "qaoafs/pauli.hpp"
#include "qaoafs/problem.hpp"
#include "qaoafs/statevector.hpp"

namespace oracle {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline CMat pauli2(qaoafs::Pauli p) {
    CMat m(2, 2);
    switch (p) {
        case qaoafs::Pauli::X: m << 0, 1, 1, 0; break;
        case qaoafs::Pauli::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
        case qaoafs::Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline CMat identity2() { return CMat::Identity(2, 2); }

/// ops[q] acts on qubit q; qubit 0 is the least significant bit, so the
/// matrix is ops[n-1] ⊗ ... ⊗ ops[0].
inline CMat kron_all(const std::vector<CMat>& ops) {
    CMat out = CMat::Identity(1, 1);
    for (std::size_t q = ops.size(); q-- > 0;) {
        const CMat& a = ops[q];
        CMat next(out.rows() * a.rows(), out.cols() * a.cols());
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(r * a.rows(), c * a.cols(), a.rows(), a.cols()) = out(r, c) * a;
            }
        }
        out = next;
    }
    return out;
}

inline CMat pauli_matrix(const qaoafs::PauliString& p, std::size_t n) {
    std::vector<CMat> ops(n, identity2());
    for (const auto& [q, s] : p.terms()) ops[q] = pauli2(s);
    return kron_all(ops);
}

inline CMat single(std::size_t n, std::size_t q, const CMat& m) {
    std::vector<CMat> ops(n, identity2());
    ops[q] = m;
    return kron_all(ops);
}

inline CMat expm(const CMat& generator) { return generator.exp(); }

/// Dense unitary of one gate from its textbook definition.
inline CMat gate_matrix(const qaoafs::Gate& g, std::size_t n) {
    using qaoafs::GateKind;
    using qaoafs::Pauli;
    const cd mi(0, -1);
    switch (g.kind) {
        case GateKind::H: {
            CMat h(2, 2);
            h << 1, 1, 1, -1;
            return single(n, g.qubits[0], h / std::sqrt(2.0));
        }
        case GateKind::RX: return expm(mi * (g.angle / 2) * single(n, g.qubits[0], pauli2(Pauli::X)));
        case GateKind::RY: return expm(mi * (g.angle / 2) * single(n, g.qubits[0], pauli2(Pauli::Y)));
        case GateKind::RZ: return expm(mi * (g.angle / 2) * single(n, g.qubits[0], pauli2(Pauli::Z)));
        case GateKind::CNOT: {
            CMat p0(2, 2), p1(2, 2);
            p0 << 1, 0, 0, 0;
            p1 << 0, 0, 0, 1;
            std::vector<CMat> a(n, identity2()), b(n, identity2());
            a[g.qubits[0]] = p0;
            b[g.qubits[0]] = p1;
            b[g.qubits[1]] = pauli2(Pauli::X);
            return kron_all(a) + kron_all(b);
        }
        case GateKind::SWAP: {
            CMat out = CMat::Zero(1 << n, 1 << n);
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                out += pauli_matrix(qaoafs::PauliString::pair(g.qubits[0], p, g.qubits[1], p), n);
            }
            return (out + CMat::Identity(1 << n, 1 << n)) / 2.0;
        }
        case GateKind::PauliRotation: return expm(mi * g.angle * pauli_matrix(*g.pauli, n));
    }
    return {};
}

inline CMat circuit_matrix(const qaoafs::Circuit& c) {
    const std::size_t n = c.num_qubits();
    CMat u = CMat::Identity(1 << n, 1 << n);
    for (const auto& g : c.gates()) u = gate_matrix(g, n) * u;
    return u;
}

/// Σ h_i Z_i + Σ J_ij Z_i Z_j + offset as a dense matrix.
inline CMat ising_matrix(const qaoafs::IsingHamiltonian& h) {
    const std::size_t n = h.n;
    CMat m = h.offset * CMat::Identity(1 << n, 1 << n);
    for (std::size_t i = 0; i < n; ++i) m += h.linear[i] * single(n, i, pauli2(qaoafs::Pauli::Z));
    for (const auto& c : h.couplings) {
        m += c.value * pauli_matrix(qaoafs::PauliString::pair(c.i, qaoafs::Pauli::Z, c.j, qaoafs::Pauli::Z), n);
    }
    return m;
}

/// Feature selection objective straight from its definition, with x_i read
/// from bit i of `mask`.
inline double feature_selection(const qaoafs::FeatureSelectionInstance& inst, std::uint64_t mask) {
    const std::size_t n = inst.size();
    auto x = [&](std::size_t i) { return static_cast<double>((mask >> i) & 1U); };
    double lin = 0.0, quad = 0.0;
    for (std::size_t i = 0; i < n; ++i) lin += inst.q().at(i, i) * x(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) quad += inst.q().at(i, j) * x(i) * x(j);
    }
    return -(1.0 - inst.alpha()) * lin + inst.alpha() * quad;
}

inline CVec to_eigen(const qaoafs::StateVector& s) {
    CVec v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

/// |<a|b>|^2 for normalised vectors.
inline double fidelity(const CVec& a, const CVec& b) { return std::norm(a.dot(b)); }

inline CVec plus_vector(std::size_t n) {
    return CVec::Constant(Eigen::Index{1} << n, cd(1.0 / std::sqrt(static_cast<double>(1ULL << n)), 0.0));
}

/// Haar-ish random state: i.i.d. normal real and imaginary parts, normalised.
template <typename Rng>
qaoafs::StateVector random_state(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<qaoafs::Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return qaoafs::StateVector::from_amplitudes(std::move(amps));
}

}  // namespace oracle
