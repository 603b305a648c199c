// Copyright 2026 The majcodes Authors
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

#include "majcodes/pauli_code.h"

#include <sstream>

#include "majcodes/error.h"

namespace majcodes {

PauliOperator::PauliOperator(BitVector x_bits, BitVector z_bits) : x(std::move(x_bits)), z(std::move(z_bits)) {
    if (x.size() != z.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "x and z parts differ in length");
    }
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    PauliOperator p(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        switch (text[i]) {
            case 'I':
                break;
            case 'X':
                p.x.set(i);
                break;
            case 'Z':
                p.z.set(i);
                break;
            case 'Y':
                p.x.set(i);
                p.z.set(i);
                break;
            default:
                throw Error(
                    ErrorCode::kIllegalCharacter,
                    "'" + std::string(1, text[i]) + "' at position " + std::to_string(i) + " of \"" +
                        std::string(text) + "\"");
        }
    }
    return p;
}

PauliOperator PauliOperator::from_symplectic(const BitVector &xz) {
    if (xz.size() % 2) {
        throw Error(ErrorCode::kDimensionMismatch, "symplectic vector has odd length");
    }
    size_t n = xz.size() / 2;
    return PauliOperator(xz.slice(0, n), xz.slice(n, n));
}

size_t PauliOperator::weight() const {
    return support().weight();
}

bool PauliOperator::commutes(const PauliOperator &other) const {
    return !(x.dot(other.z) ^ z.dot(other.x));
}

std::string PauliOperator::str() const {
    std::string out(num_qubits(), 'I');
    for (size_t i = 0; i < num_qubits(); i++) {
        if (x[i] && z[i]) {
            out[i] = 'Y';
        } else if (x[i]) {
            out[i] = 'X';
        } else if (z[i]) {
            out[i] = 'Z';
        }
    }
    return out;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    x ^= other.x;
    z ^= other.z;
    return *this;
}

StabilizerCode::StabilizerCode(size_t num_qubits, std::vector<PauliOperator> generators)
    : num_qubits_(num_qubits), generators_(std::move(generators)) {
    for (size_t i = 0; i < generators_.size(); i++) {
        if (generators_[i].num_qubits() != num_qubits_) {
            throw Error(
                ErrorCode::kLengthMismatch,
                "generator " + std::to_string(i) + " acts on " + std::to_string(generators_[i].num_qubits()) +
                    " qubits, expected " + std::to_string(num_qubits_));
        }
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        for (size_t j = i + 1; j < generators_.size(); j++) {
            if (!generators_[i].commutes(generators_[j])) {
                throw Error(
                    ErrorCode::kNonCommutingGenerators,
                    "generators " + std::to_string(i) + " (" + generators_[i].str() + ") and " + std::to_string(j) +
                        " (" + generators_[j].str() + ") anti-commute");
            }
        }
    }
}

BitMatrix StabilizerCode::symplectic_matrix() const {
    BitMatrix m(2 * num_qubits_);
    for (const auto &g : generators_) {
        m.push_back(g.symplectic());
    }
    return m;
}

size_t StabilizerCode::num_independent_generators() const {
    return rank(symplectic_matrix());
}

size_t StabilizerCode::num_logical_qubits() const {
    return num_qubits_ - num_independent_generators();
}

BitMatrix StabilizerCode::centralizer_basis() const {
    // v commutes with g iff (g_z | g_x) . v = 0.
    BitMatrix swapped(2 * num_qubits_);
    for (const auto &g : generators_) {
        swapped.push_back(g.z.concat(g.x));
    }
    return kernel_basis(swapped);
}

StabilizerCode parse_pauli_code(std::string_view text) {
    std::vector<PauliOperator> gens;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    std::optional<size_t> width;
    while (std::getline(in, line)) {
        line_no++;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        std::string_view body(line.data() + first, last - first + 1);
        PauliOperator p;
        try {
            p = PauliOperator::from_str(body);
        } catch (const Error &e) {
            throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
        }
        if (width && *width != p.num_qubits()) {
            throw Error(
                ErrorCode::kLengthMismatch,
                "line " + std::to_string(line_no) + " has " + std::to_string(p.num_qubits()) +
                    " qubits, expected " + std::to_string(*width));
        }
        width = p.num_qubits();
        gens.push_back(std::move(p));
    }
    if (gens.empty()) {
        throw Error(ErrorCode::kEmptyInput, "no Pauli strings found");
    }
    return StabilizerCode(*width, std::move(gens));
}

std::string format_pauli_code(const StabilizerCode &code) {
    std::string out;
    for (const auto &g : code.generators()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

QubitDistance qubit_distance(const StabilizerCode &code, size_t max_weight, unsigned threads) {
    if (code.num_logical_qubits() == 0) {
        throw Error(ErrorCode::kNoLogicalQubits, "the code encodes no logical qubits");
    }
    LogicalSearch search(code.centralizer_basis(), code.symplectic_matrix(), SiteModel::qubits(code.num_qubits()));
    SearchOptions options;
    options.max_weight = max_weight;
    options.threads = threads;
    return QubitDistance{search.find_minimum(options)};
}

bool is_weakly_self_dual_css(const StabilizerCode &code) {
    size_t n = code.num_qubits();
    BitMatrix stab = code.symplectic_matrix();
    BitVector x_region(2 * n);
    BitVector z_region(2 * n);
    for (size_t i = 0; i < n; i++) {
        x_region.set(i);
        z_region.set(n + i);
    }
    BitMatrix x_part = subspace_supported_on(stab, x_region);
    BitMatrix z_part = subspace_supported_on(stab, z_region);
    if (x_part.num_rows() + z_part.num_rows() != rank(stab)) {
        return false;
    }
    BitMatrix cx(n);
    for (const auto &r : x_part.rows()) {
        cx.push_back(r.slice(0, n));
    }
    BitMatrix cz(n);
    for (const auto &r : z_part.rows()) {
        cz.push_back(r.slice(n, n));
    }
    return row_spaces_equal(cx, cz);
}

}  // namespace majcodes
