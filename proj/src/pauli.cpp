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

#include "qaoafs/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qaoafs {

char to_char(Pauli p) {
    switch (p) {
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("Pauli string needs at least one non-identity term");
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < terms_.size(); ++k) {
        if (terms_[k].first == terms_[k - 1].first) {
            throw std::invalid_argument("Pauli string acts twice on qubit " + std::to_string(terms_[k].first));
        }
    }
    if (terms_.back().first >= 64) throw std::invalid_argument("Pauli string qubit index must be < 64");
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        Pauli p;
        switch (text[pos]) {
            case 'X': p = Pauli::X; break;
            case 'Y': p = Pauli::Y; break;
            case 'Z': p = Pauli::Z; break;
            default: throw std::invalid_argument("bad Pauli letter in '" + std::string(text) + "'");
        }
        ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("missing qubit index in '" + std::string(text) + "'");
        terms.emplace_back(std::stoul(std::string(text.substr(start, pos - start))), p);
    }
    return PauliString(std::move(terms));
}

std::uint64_t PauliString::flip_mask() const {
    std::uint64_t m = 0;
    for (const auto& [q, p] : terms_) {
        if (p != Pauli::Z) m |= std::uint64_t{1} << q;
    }
    return m;
}

std::uint64_t PauliString::sign_mask() const {
    std::uint64_t m = 0;
    for (const auto& [q, p] : terms_) {
        if (p != Pauli::X) m |= std::uint64_t{1} << q;
    }
    return m;
}

std::size_t PauliString::y_count() const {
    return static_cast<std::size_t>(
        std::count_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == Pauli::Y; }));
}

std::string PauliString::str() const {
    std::string out;
    for (const auto& [q, p] : terms_) {
        out += to_char(p);
        out += std::to_string(q);
    }
    return out;
}

}  // namespace qaoafs
