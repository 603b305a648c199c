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

#ifndef MAJCODES_PAULI_CODE_H
#define MAJCODES_PAULI_CODE_H

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "majcodes/bit_vector.h"
#include "majcodes/gf2.h"
#include "majcodes/weight_search.h"

namespace majcodes {

/// A Pauli operator on n qubits modulo phase: qubit i carries X when only
/// x[i] is set, Z when only z[i] is set and Y when both are.
struct PauliOperator {
    BitVector x;
    BitVector z;

    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits) : x(num_qubits), z(num_qubits) {
    }
    PauliOperator(BitVector x_bits, BitVector z_bits);

    /// Parses a string over {I, X, Y, Z}, qubit 0 first.
    static PauliOperator from_str(std::string_view text);
    /// Reassembles an operator from its (x|z) symplectic vector.
    static PauliOperator from_symplectic(const BitVector &xz);

    size_t num_qubits() const noexcept {
        return x.size();
    }
    /// Qubit support size.
    size_t weight() const;
    BitVector support() const {
        return x | z;
    }
    bool commutes(const PauliOperator &other) const;
    /// The (x|z) vector of length 2n.
    BitVector symplectic() const {
        return x.concat(z);
    }
    std::string str() const;

    PauliOperator &operator*=(const PauliOperator &other);
    bool operator==(const PauliOperator &) const = default;
};

/// An n-qubit stabilizer code given by its generators. Construction checks
/// that every pair of generators commutes.
class StabilizerCode {
   public:
    StabilizerCode(size_t num_qubits, std::vector<PauliOperator> generators);

    size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<PauliOperator> &generators() const noexcept {
        return generators_;
    }

    /// Rows (x|z), one per generator.
    BitMatrix symplectic_matrix() const;
    size_t num_independent_generators() const;
    /// k = n - rank of the symplectic generator matrix.
    size_t num_logical_qubits() const;
    /// Basis of all (x|z) vectors commuting with every generator.
    BitMatrix centralizer_basis() const;

   private:
    size_t num_qubits_;
    std::vector<PauliOperator> generators_;
};

/// Parses one Pauli string per non-empty line. Lines starting with '#' are
/// comments.
StabilizerCode parse_pauli_code(std::string_view text);
/// One Pauli string per line, generators in order.
std::string format_pauli_code(const StabilizerCode &code);

struct QubitDistance {
    SearchResult search;
    bool exhausted() const {
        return search.exhausted();
    }
    size_t value() const {
        return search.hit->weight;
    }
    PauliOperator witness() const {
        return PauliOperator::from_symplectic(search.hit->vector);
    }
};

/// Minimum qubit weight over the centralizer minus the stabilizer group.
QubitDistance qubit_distance(
    const StabilizerCode &code, size_t max_weight = std::numeric_limits<size_t>::max(), unsigned threads = 1);

/// True when the stabilizer group is generated by X-type and Z-type elements
/// whose classical codes coincide.
bool is_weakly_self_dual_css(const StabilizerCode &code);

}  // namespace majcodes

#endif
