// Copyright 2026 The Stabforge Authors
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
#include <stdexcept>
#include <string>
#include <string_view>

#include "stabforge/bitvec.hpp"

namespace stabforge {

/// Single-qubit letters. Y denotes the real matrix X*Z = [[0,-1],[1,0]].
enum class Letter : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

inline Letter letter_from_char(char c) {
    switch (c) {
        case 'I':
            return Letter::I;
        case 'X':
            return Letter::X;
        case 'Y':
            return Letter::Y;
        case 'Z':
            return Letter::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

/// Element of the real n-qubit Pauli group, stored in binary-symplectic form.
///
/// Represents sign * prod_i X_i^{x_i} Z_i^{z_i}, where the X factor of each qubit
/// stands to the left of its Z factor. Qubit indices in the public interface
/// are 1-based; the packed bit vectors are 0-based.
class PauliOperator {
   public:
    PauliOperator(BitVec xs, BitVec zs, bool negative = false)
        : xs_(std::move(xs)), zs_(std::move(zs)), negative_(negative) {
        if (xs_.size() != zs_.size()) {
            throw std::invalid_argument("x and z parts must have the same length");
        }
        if (xs_.size() == 0) {
            throw std::invalid_argument("a Pauli operator needs at least one qubit");
        }
    }

    static PauliOperator identity(std::size_t num_qubits) {
        if (num_qubits == 0) {
            throw std::invalid_argument("identity: qubit count must be positive");
        }
        return PauliOperator(BitVec(num_qubits), BitVec(num_qubits));
    }

    static PauliOperator single(std::size_t num_qubits, std::size_t qubit, Letter letter) {
        PauliOperator out = identity(num_qubits);
        if (qubit < 1 || qubit > num_qubits) {
            throw std::out_of_range(
                "qubit index " + std::to_string(qubit) + " outside 1.." + std::to_string(num_qubits));
        }
        out.set_letter(qubit, letter);
        return out;
    }

    /// Accepts an optional leading '+', '-' or U+2212 followed by letters in
    /// {I,X,Y,Z}; the leftmost letter is qubit 1.
    static PauliOperator parse(std::string_view text) {
        bool negative = false;
        if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
            negative = text.front() == '-';
            text.remove_prefix(1);
        } else if (text.starts_with("−")) {
            negative = true;
            text.remove_prefix(std::string_view("−").size());
        }
        if (text.empty()) {
            throw std::invalid_argument("empty Pauli string");
        }
        PauliOperator out = identity(text.size());
        for (std::size_t i = 0; i < text.size(); i++) {
            out.set_letter(i + 1, letter_from_char(text[i]));
        }
        out.negative_ = negative;
        return out;
    }

    std::size_t num_qubits() const {
        return xs_.size();
    }
    const BitVec &xs() const {
        return xs_;
    }
    const BitVec &zs() const {
        return zs_;
    }
    bool negative() const {
        return negative_;
    }
    int sign() const {
        return negative_ ? -1 : +1;
    }

    Letter letter(std::size_t qubit) const {
        bool x = xs_.get(qubit - 1);
        bool z = zs_.get(qubit - 1);
        if (x && z) {
            return Letter::Y;
        }
        return x ? Letter::X : (z ? Letter::Z : Letter::I);
    }

    void set_letter(std::size_t qubit, Letter letter) {
        xs_.set(qubit - 1, letter == Letter::X || letter == Letter::Y);
        zs_.set(qubit - 1, letter == Letter::Z || letter == Letter::Y);
    }

    /// Canonical text form; the sign is always explicit.
    std::string str() const {
        std::string out;
        out.reserve(num_qubits() + 1);
        out.push_back(negative_ ? '-' : '+');
        for (std::size_t q = 1; q <= num_qubits(); q++) {
            out.push_back(static_cast<char>(letter(q)));
        }
        return out;
    }

    PauliOperator operator-() const {
        PauliOperator out = *this;
        out.negative_ = !negative_;
        return out;
    }

    /// Same operator up to sign.
    bool same_support_and_letters(const PauliOperator &other) const {
        return xs_ == other.xs_ && zs_ == other.zs_;
    }

    bool is_identity_up_to_sign() const {
        return xs_.none() && zs_.none();
    }

    bool operator==(const PauliOperator &other) const = default;

    std::size_t hash() const {
        return xs_.hash() * 31 + zs_.hash() * 7 + (negative_ ? 1 : 0);
    }

   private:
    BitVec xs_;
    BitVec zs_;
    bool negative_ = false;
};

struct PauliHash {
    std::size_t operator()(const PauliOperator &p) const {
        return p.hash();
    }
};

namespace detail {
inline void require_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "qubit count mismatch: " + std::to_string(p.num_qubits()) + " vs " + std::to_string(q.num_qubits()));
    }
}
}  // namespace detail

/// Product P*Q. Moving each Z of P past an X of Q on the same qubit costs -1.
inline PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    detail::require_same_size(p, q);
    bool negative = p.negative() ^ q.negative() ^ p.zs().and_parity(q.xs());
    return PauliOperator(p.xs() ^ q.xs(), p.zs() ^ q.zs(), negative);
}

inline PauliOperator operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

inline bool commutes(const PauliOperator &p, const PauliOperator &q) {
    detail::require_same_size(p, q);
    return p.xs().and_parity(q.zs()) == p.zs().and_parity(q.xs());
}

inline std::size_t weight(const PauliOperator &p) {
    return (p.xs() | p.zs()).popcount();
}

/// P*P = square_sign(P) * I; -1 exactly when P has an odd number of Y's.
inline int square_sign(const PauliOperator &p) {
    return p.xs().and_parity(p.zs()) ? -1 : +1;
}

}  // namespace stabforge
