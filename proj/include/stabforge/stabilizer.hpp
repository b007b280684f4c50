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

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stabforge/bitvec.hpp"
#include "stabforge/gf2.hpp"
#include "stabforge/pauli.hpp"

namespace stabforge {

/// Anticommutation pattern of an error against the generators; bit r-1 is M_r.
struct Syndrome {
    BitVec bits;

    std::string str() const {
        return bits.str();
    }
    bool is_zero() const {
        return bits.none();
    }
    bool operator==(const Syndrome &) const = default;
    auto operator<=>(const Syndrome &) const = default;
};

struct SyndromeHash {
    std::size_t operator()(const Syndrome &s) const {
        return s.bits.hash();
    }
};

class ValidationError : public std::invalid_argument {
   public:
    enum class Kind { QubitCountMismatch, NotAbelian, SquaresToMinusOne, DependentGenerators, MinusIdentityInGroup, TooManyGenerators };

    ValidationError(Kind kind, std::vector<std::size_t> witness, const std::string &what)
        : std::invalid_argument(what), kind_(kind), witness_(std::move(witness)) {}

    Kind kind() const {
        return kind_;
    }
    /// 1-based generator indices implicated in the failure.
    const std::vector<std::size_t> &witness() const {
        return witness_;
    }

   private:
    Kind kind_;
    std::vector<std::size_t> witness_;
};

class GroupTooLarge : public std::length_error {
   public:
    using std::length_error::length_error;
};

enum class DependencePolicy { Reduce, Reject };

/// Validated generator list of an abelian subgroup of the Pauli group whose
/// elements all square to +1 and which does not contain -I.
class StabilizerGroup {
   public:
    static StabilizerGroup validate(
        std::size_t num_qubits, std::vector<PauliOperator> generators,
        DependencePolicy policy = DependencePolicy::Reduce) {
        for (std::size_t r = 0; r < generators.size(); r++) {
            if (generators[r].num_qubits() != num_qubits) {
                throw ValidationError(
                    ValidationError::Kind::QubitCountMismatch, std::vector<std::size_t>{r + 1},
                    "generator " + std::to_string(r + 1) + " acts on " +
                        std::to_string(generators[r].num_qubits()) + " qubits, expected " +
                        std::to_string(num_qubits));
            }
        }
        for (std::size_t r = 0; r < generators.size(); r++) {
            if (square_sign(generators[r]) != +1) {
                throw ValidationError(
                    ValidationError::Kind::SquaresToMinusOne, std::vector<std::size_t>{r + 1},
                    "generator M_" + std::to_string(r + 1) + " squares to -1");
            }
        }
        for (std::size_t r = 0; r < generators.size(); r++) {
            for (std::size_t s = r + 1; s < generators.size(); s++) {
                if (!commutes(generators[r], generators[s])) {
                    throw ValidationError(
                        ValidationError::Kind::NotAbelian, std::vector<std::size_t>{r + 1, s + 1},
                        "generators M_" + std::to_string(r + 1) + " and M_" + std::to_string(s + 1) +
                            " anticommute");
                }
            }
        }

        StabilizerGroup out;
        out.num_qubits_ = num_qubits;
        gf2::XorBasis basis(2 * num_qubits, generators.size());
        for (std::size_t r = 0; r < generators.size(); r++) {
            auto dependency = basis.insert(symplectic_row(generators[r]), r);
            if (!dependency) {
                out.generators_.push_back(generators[r]);
                continue;
            }
            std::vector<std::size_t> subset;
            PauliOperator product = PauliOperator::identity(num_qubits);
            for (std::size_t idx : dependency->ones()) {
                subset.push_back(idx + 1);
                product = multiply(product, generators[idx]);
            }
            if (product.negative()) {
                throw ValidationError(
                    ValidationError::Kind::MinusIdentityInGroup, subset,
                    "a product of generators equals -I; the group fixes no state");
            }
            if (policy == DependencePolicy::Reject) {
                throw ValidationError(
                    ValidationError::Kind::DependentGenerators, subset,
                    "generator M_" + std::to_string(r + 1) + " is a product of earlier generators");
            }
            out.warnings_.push_back(
                "dropped generator M_" + std::to_string(r + 1) + " (" + generators[r].str() +
                "): product of earlier generators");
        }
        if (out.generators_.size() > num_qubits) {
            throw ValidationError(
                ValidationError::Kind::TooManyGenerators, {},
                "more independent generators than qubits");
        }
        return out;
    }

    static BitVec symplectic_row(const PauliOperator &p) {
        std::size_t n = p.num_qubits();
        BitVec row(2 * n);
        for (std::size_t i : p.xs().ones()) {
            row.set(i);
        }
        for (std::size_t i : p.zs().ones()) {
            row.set(n + i);
        }
        return row;
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t num_generators() const {
        return generators_.size();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const PauliOperator &generator(std::size_t r) const {
        return generators_.at(r - 1);
    }
    const std::vector<std::string> &warnings() const {
        return warnings_;
    }

   private:
    StabilizerGroup() = default;

    std::size_t num_qubits_ = 0;
    std::vector<PauliOperator> generators_;
    std::vector<std::string> warnings_;
};

inline Syndrome syndrome(const StabilizerGroup &group, const PauliOperator &error) {
    if (error.num_qubits() != group.num_qubits()) {
        throw std::invalid_argument("syndrome: error acts on the wrong number of qubits");
    }
    Syndrome out{BitVec(group.num_generators())};
    for (std::size_t r = 0; r < group.num_generators(); r++) {
        if (!commutes(group.generators()[r], error)) {
            out.bits.set(r);
        }
    }
    return out;
}

inline constexpr std::size_t kMaxEnumeratedGenerators = 24;

/// All 2^a group elements, with signs, in binary-reflected Gray code order.
inline std::vector<PauliOperator> enumerate_elements(const StabilizerGroup &group) {
    std::size_t a = group.num_generators();
    if (a > kMaxEnumeratedGenerators) {
        throw GroupTooLarge("group has 2^" + std::to_string(a) + " elements; refusing to enumerate");
    }
    std::vector<PauliOperator> out;
    out.reserve(std::size_t{1} << a);
    PauliOperator current = PauliOperator::identity(group.num_qubits());
    out.push_back(current);
    for (std::size_t step = 1; step < (std::size_t{1} << a); step++) {
        std::size_t flip = static_cast<std::size_t>(std::countr_zero(step));
        current = multiply(current, group.generators()[flip]);
        out.push_back(current);
    }
    return out;
}

/// An error of small weight, kept sparse: (1-based qubit, letter) pairs.
struct SparseError {
    std::vector<std::pair<std::size_t, Letter>> terms;

    PauliOperator to_pauli(std::size_t num_qubits) const {
        PauliOperator out = PauliOperator::identity(num_qubits);
        for (auto [q, l] : terms) {
            out.set_letter(q, l);
        }
        return out;
    }
    std::size_t weight() const {
        return terms.size();
    }
};

/// Per-qubit single-error syndromes, so that weight-w errors cost w XORs.
class SyndromeColumns {
   public:
    explicit SyndromeColumns(const StabilizerGroup &group) : num_generators_(group.num_generators()) {
        std::size_t n = group.num_qubits();
        x_.assign(n, BitVec(num_generators_));
        z_.assign(n, BitVec(num_generators_));
        for (std::size_t r = 0; r < num_generators_; r++) {
            const PauliOperator &m = group.generators()[r];
            // X_i anticommutes with M_r iff M_r has a Z component on qubit i.
            for (std::size_t i : m.zs().ones()) {
                x_[i].set(r);
            }
            for (std::size_t i : m.xs().ones()) {
                z_[i].set(r);
            }
        }
    }

    BitVec single(std::size_t qubit, Letter letter) const {
        switch (letter) {
            case Letter::X:
                return x_[qubit - 1];
            case Letter::Z:
                return z_[qubit - 1];
            case Letter::Y:
                return x_[qubit - 1] ^ z_[qubit - 1];
            default:
                return BitVec(num_generators_);
        }
    }

    Syndrome of(const SparseError &e) const {
        BitVec bits(num_generators_);
        for (auto [q, l] : e.terms) {
            bits ^= single(q, l);
        }
        return Syndrome{std::move(bits)};
    }

   private:
    std::size_t num_generators_;
    std::vector<BitVec> x_;
    std::vector<BitVec> z_;
};

inline constexpr std::array<Letter, 3> kErrorLetters = {Letter::X, Letter::Y, Letter::Z};

/// Calls visit(const SparseError&) for every Pauli error of weight <= max_weight,
/// in increasing weight, qubit sets in lexicographic order, letters X, Y, Z.
/// Stops early when visit returns false.
template <typename Visit>
void for_each_error_up_to_weight(std::size_t num_qubits, std::size_t max_weight, Visit &&visit) {
    SparseError e;
    if (!visit(static_cast<const SparseError &>(e))) {
        return;
    }
    for (std::size_t w = 1; w <= std::min(max_weight, num_qubits); w++) {
        std::vector<std::size_t> qubits(w);
        for (std::size_t i = 0; i < w; i++) {
            qubits[i] = i + 1;
        }
        while (true) {
            std::vector<std::size_t> letters(w, 0);
            while (true) {
                e.terms.clear();
                for (std::size_t i = 0; i < w; i++) {
                    e.terms.emplace_back(qubits[i], kErrorLetters[letters[i]]);
                }
                if (!visit(static_cast<const SparseError &>(e))) {
                    return;
                }
                std::size_t pos = w;
                while (pos > 0 && letters[pos - 1] == 2) {
                    letters[pos - 1] = 0;
                    pos--;
                }
                if (pos == 0) {
                    break;
                }
                letters[pos - 1]++;
            }
            std::size_t pos = w;
            while (pos > 0 && qubits[pos - 1] == num_qubits - (w - pos)) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            qubits[pos - 1]++;
            for (std::size_t i = pos; i < w; i++) {
                qubits[i] = qubits[i - 1] + 1;
            }
        }
    }
}

struct CorrectabilityReport {
    bool pass = false;
    std::size_t max_weight = 0;
    std::size_t errors_checked = 0;
    std::size_t distinct_syndromes = 0;
    std::size_t possible_syndromes_log2 = 0;
    /// First collision found: the earlier error, the later error, their shared syndrome.
    std::optional<std::pair<PauliOperator, PauliOperator>> collision;
    std::optional<Syndrome> collision_syndrome;
};

/// Non-degenerate correctability: every error of weight <= max_weight (identity
/// included) must have a distinct syndrome.
inline CorrectabilityReport check_correctability(const StabilizerGroup &group, std::size_t max_weight) {
    CorrectabilityReport report;
    report.max_weight = max_weight;
    report.possible_syndromes_log2 = group.num_generators();
    SyndromeColumns columns(group);
    std::unordered_map<Syndrome, SparseError, SyndromeHash> seen;
    for_each_error_up_to_weight(group.num_qubits(), max_weight, [&](const SparseError &e) {
        report.errors_checked++;
        Syndrome s = columns.of(e);
        auto [it, inserted] = seen.try_emplace(s, e);
        if (!inserted) {
            report.collision.emplace(
                it->second.to_pauli(group.num_qubits()), e.to_pauli(group.num_qubits()));
            report.collision_syndrome = std::move(s);
            return false;
        }
        return true;
    });
    report.distinct_syndromes = seen.size();
    report.pass = !report.collision.has_value();
    return report;
}

}  // namespace stabforge
