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
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qaoafs {

enum class Pauli : std::uint8_t { X, Y, Z };

char to_char(Pauli p);

/// Tensor product of single-qubit Paulis with implicit identity elsewhere.
/// Terms are kept sorted by qubit index; a qubit appears at most once.
class PauliString {
public:
    using Term = std::pair<std::size_t, Pauli>;

    PauliString() = default;
    explicit PauliString(std::vector<Term> terms);

    static PauliString single(std::size_t q, Pauli p) { return PauliString({{q, p}}); }
    static PauliString pair(std::size_t q0, Pauli p0, std::size_t q1, Pauli p1) {
        return PauliString({{q0, p0}, {q1, p1}});
    }

    /// Parses the compact form produced by str(), e.g. "X0Y3" or "Z12".
    static PauliString parse(std::string_view text);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t weight() const { return terms_.size(); }
    std::size_t max_qubit() const { return terms_.back().first; }

    /// Qubits flipped by the string (X or Y).
    std::uint64_t flip_mask() const;
    /// Qubits contributing a (-1)^bit sign (Y or Z).
    std::uint64_t sign_mask() const;
    std::size_t y_count() const;

    /// True if every term is Z, i.e. the string is diagonal.
    bool is_diagonal() const { return flip_mask() == 0; }

    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    std::vector<Term> terms_;
};

}  // namespace qaoafs
