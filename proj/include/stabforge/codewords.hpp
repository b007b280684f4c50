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

/**
 * @file
 * Exact code words of a stabilizer code as signed sums of computational basis
 * states ("quasi-classical" states).
 *
 * A code word is the orbit sum of a seed basis state under the group. Only
 * generators that move basis states (type-1) contribute distinct terms; pure-Z
 * generators (type-2) either fix the seed, or annihilate the whole sum.
 */

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stabforge/bitvec.hpp"
#include "stabforge/gf2.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/stabilizer.hpp"

namespace stabforge {

/// Unnormalized integer combination of basis labels. Label position 0 is qubit 1.
class FormalState {
   public:
    using Terms = std::map<BitVec, std::int64_t>;

    explicit FormalState(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    static FormalState basis_state(const BitVec &label) {
        FormalState out(label.size());
        out.add(label, 1);
        return out;
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const Terms &terms() const {
        return terms_;
    }
    std::size_t num_terms() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }

    std::int64_t coefficient(const BitVec &label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const BitVec &label, std::int64_t coeff) {
        if (label.size() != num_qubits_) {
            throw std::invalid_argument("label length does not match qubit count");
        }
        if (coeff == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(label, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    FormalState operator-() const {
        FormalState out = *this;
        for (auto &[label, c] : out.terms_) {
            c = -c;
        }
        return out;
    }

    /// Global sign fixed so that the smallest label has a positive coefficient.
    FormalState canonical() const {
        if (terms_.empty() || terms_.begin()->second > 0) {
            return *this;
        }
        return -*this;
    }

    /// "+|00> - |11>" style; terms in ascending label order.
    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[label, c] : terms_) {
            if (first) {
                out += c < 0 ? "-" : "+";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::int64_t mag = c < 0 ? -c : c;
            if (mag != 1) {
                out += std::to_string(mag);
            }
            out += "|" + label.str() + ">";
            first = false;
        }
        return out;
    }

    bool operator==(const FormalState &other) const = default;

   private:
    std::size_t num_qubits_;
    Terms terms_;
};

/// P|label> = sign * |label'>.
struct SignedLabel {
    BitVec label;
    int sign;
};

inline SignedLabel apply_to_label(const PauliOperator &p, const BitVec &label) {
    bool negative = p.negative() ^ p.zs().and_parity(label);
    return {label ^ p.xs(), negative ? -1 : +1};
}

inline FormalState apply(const PauliOperator &p, const FormalState &state) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("apply: qubit count mismatch");
    }
    FormalState out(state.num_qubits());
    for (const auto &[label, c] : state.terms()) {
        SignedLabel moved = apply_to_label(p, label);
        out.add(moved.label, moved.sign * c);
    }
    return out;
}

class ClassificationError : public std::invalid_argument {
   public:
    ClassificationError(const std::string &what, PauliOperator offending)
        : std::invalid_argument(what), offending_(std::move(offending)) {}
    const PauliOperator &offending() const {
        return offending_;
    }

   private:
    PauliOperator offending_;
};

/// Generators split into those that move basis states and pure-Z ones.
struct GeneratorClassification {
    std::size_t num_qubits = 0;
    std::vector<PauliOperator> type1;  // GF(2)-independent x-parts
    std::vector<PauliOperator> type2;  // x-part zero, sign +1
    std::vector<std::size_t> type1_indices;  // 1-based positions in the input generator list
    std::vector<std::size_t> type2_indices;  // generator that was rewritten into each type-2 element

    std::size_t b() const {
        return type1.size();
    }
    std::size_t a() const {
        return type1.size() + type2.size();
    }
};

/// Walks the generators in order. A generator whose x-part is independent of the
/// x-parts seen so far is type-1 and kept as is; otherwise it is multiplied by
/// the type-1 generators sharing its x-part, leaving a pure-Z element.
inline GeneratorClassification classify_generators(const StabilizerGroup &group) {
    const auto &gens = group.generators();
    GeneratorClassification out;
    out.num_qubits = group.num_qubits();
    gf2::XorBasis basis(group.num_qubits(), gens.size());
    for (std::size_t r = 0; r < gens.size(); r++) {
        auto dependency = basis.insert(gens[r].xs(), r);
        if (!dependency) {
            out.type1.push_back(gens[r]);
            out.type1_indices.push_back(r + 1);
            continue;
        }
        PauliOperator pure_z = PauliOperator::identity(group.num_qubits());
        for (std::size_t idx : dependency->ones()) {
            pure_z = multiply(pure_z, gens[idx]);
        }
        if (pure_z.negative()) {
            throw ClassificationError(
                "generator M_" + std::to_string(r + 1) + " reduces to a pure-Z element with sign -1: " +
                    pure_z.str(),
                pure_z);
        }
        out.type2.push_back(std::move(pure_z));
        out.type2_indices.push_back(r + 1);
    }
    return out;
}

/// Pure-X seed generator, stored by its support.
struct SeedGenerator {
    std::vector<std::size_t> qubits;  // 1-based, ascending

    PauliOperator to_pauli(std::size_t num_qubits) const {
        PauliOperator out = PauliOperator::identity(num_qubits);
        for (std::size_t q : qubits) {
            out.set_letter(q, Letter::X);
        }
        return out;
    }
    BitVec x_bits(std::size_t num_qubits) const {
        BitVec out(num_qubits);
        for (std::size_t q : qubits) {
            out.set(q - 1);
        }
        return out;
    }
    static SeedGenerator from_pauli(const PauliOperator &p) {
        if (p.zs().any() || p.negative()) {
            throw std::invalid_argument("seed generator must be a +1 product of X's: " + p.str());
        }
        SeedGenerator out;
        for (std::size_t i : p.xs().ones()) {
            out.qubits.push_back(i + 1);
        }
        return out;
    }
    bool operator==(const SeedGenerator &) const = default;
};

/// Seed generators from GF(2) linear algebra.
///
/// Admissible x-vectors form the kernel K of the type-2 z-parts. K is given the
/// basis e_f + (pivot columns), one vector per free column f, with pivots at the
/// lowest qubit. The type-1 x-parts span a subspace of K; its coordinates are
/// read off the free columns, and scanning free columns from the highest qubit
/// downwards, every column independent of those already scanned is absorbed by
/// the type-1 span. The remaining free columns give n - a coset representatives,
/// favouring low qubit indices.
inline std::vector<SeedGenerator> seed_supports(const GeneratorClassification &c) {
    std::size_t n = c.num_qubits;
    std::vector<BitVec> constraints;
    constraints.reserve(c.type2.size());
    for (const auto &g : c.type2) {
        constraints.push_back(g.zs());
    }
    std::vector<gf2::KernelVector> kernel = gf2::kernel_basis(constraints, n);

    std::size_t b = c.b();
    std::vector<BitVec> columns(n, BitVec(b));
    for (std::size_t t = 0; t < b; t++) {
        for (std::size_t i : c.type1[t].xs().ones()) {
            columns[i].set(t);
        }
    }

    std::vector<bool> keep(kernel.size(), true);
    gf2::XorBasis absorbed(b, 0);
    for (std::size_t idx = kernel.size(); idx-- > 0;) {
        if (absorbed.rank() == b) {
            break;
        }
        if (!absorbed.insert(columns[kernel[idx].free_column], idx)) {
            keep[idx] = false;
        }
    }

    std::vector<SeedGenerator> out;
    for (std::size_t idx = 0; idx < kernel.size(); idx++) {
        if (!keep[idx]) {
            continue;
        }
        SeedGenerator s;
        s.qubits.reserve(kernel[idx].support.size());
        for (std::size_t i : kernel[idx].support) {
            s.qubits.push_back(i + 1);
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<PauliOperator> seed_generators(const StabilizerGroup &group) {
    std::vector<PauliOperator> out;
    for (const auto &s : seed_supports(classify_generators(group))) {
        out.push_back(s.to_pauli(group.num_qubits()));
    }
    return out;
}

/// Orbit sum of a seed label over products of type-1 generators. Zero when a
/// type-2 generator has eigenvalue -1 on the seed.
inline FormalState codeword(const GeneratorClassification &c, const BitVec &seed) {
    if (seed.size() != c.num_qubits) {
        throw std::invalid_argument("seed label length does not match qubit count");
    }
    FormalState out(c.num_qubits);
    for (const auto &g : c.type2) {
        if (g.zs().and_parity(seed)) {
            return out;
        }
    }
    std::size_t b = c.b();
    if (b > kMaxEnumeratedGenerators) {
        throw GroupTooLarge("code word would have 2^" + std::to_string(b) + " terms");
    }
    BitVec label = seed;
    int sign = +1;
    out.add(label, sign);
    for (std::size_t step = 1; step < (std::size_t{1} << b); step++) {
        const PauliOperator &g = c.type1[static_cast<std::size_t>(std::countr_zero(step))];
        SignedLabel moved = apply_to_label(g, label);
        label = std::move(moved.label);
        sign *= moved.sign;
        out.add(label, sign);
    }
    return out;
}

/// Terms of a code word listed by the subset of type-1 generators applied:
/// smaller subsets first, equal sizes in lexicographic order of indices.
inline std::vector<std::pair<BitVec, int>> ordered_terms(const GeneratorClassification &c, const BitVec &seed) {
    std::size_t b = c.b();
    if (b > kMaxEnumeratedGenerators) {
        throw GroupTooLarge("code word would have 2^" + std::to_string(b) + " terms");
    }
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> current;
    for (std::size_t size = 0; size <= b; size++) {
        current.assign(size, 0);
        for (std::size_t i = 0; i < size; i++) {
            current[i] = i;
        }
        while (true) {
            subsets.push_back(current);
            std::size_t pos = size;
            while (pos > 0 && current[pos - 1] == b - (size - pos) - 1) {
                pos--;
            }
            if (pos == 0) {
                break;
            }
            current[pos - 1]++;
            for (std::size_t i = pos; i < size; i++) {
                current[i] = current[i - 1] + 1;
            }
        }
    }
    std::vector<std::pair<BitVec, int>> out;
    out.reserve(subsets.size());
    for (const auto &subset : subsets) {
        // Rightmost factor acts first.
        BitVec label = seed;
        int sign = +1;
        for (std::size_t i = subset.size(); i-- > 0;) {
            SignedLabel moved = apply_to_label(c.type1[subset[i]], label);
            label = std::move(moved.label);
            sign *= moved.sign;
        }
        out.emplace_back(std::move(label), sign);
    }
    return out;
}

inline FormalState codeword(const StabilizerGroup &group, const BitVec &seed) {
    return codeword(classify_generators(group), seed);
}

/// Logical word for basis index i: c_t is bit t-1 of i.
inline BitVec logical_word(std::uint64_t index, std::size_t k) {
    BitVec out(k);
    for (std::size_t t = 0; t < k && t < 64; t++) {
        if ((index >> t) & 1) {
            out.set(t);
        }
    }
    return out;
}

/// prod_{type-1}(I + M) N_1^{c_1} ... N_k^{c_k} |0...0>, unnormalized.
inline FormalState encode(
    const GeneratorClassification &c, const std::vector<SeedGenerator> &seeds, const BitVec &logical) {
    if (logical.size() != seeds.size()) {
        throw std::invalid_argument(
            "logical word has " + std::to_string(logical.size()) + " bits, expected " +
            std::to_string(seeds.size()));
    }
    BitVec seed(c.num_qubits);
    for (std::size_t t : logical.ones()) {
        for (std::size_t q : seeds[t].qubits) {
            seed.flip(q - 1);
        }
    }
    return codeword(c, seed);
}

inline std::vector<FormalState> basis(const GeneratorClassification &c, const std::vector<SeedGenerator> &seeds) {
    std::size_t k = seeds.size();
    if (k > kMaxEnumeratedGenerators) {
        throw GroupTooLarge("code space has 2^" + std::to_string(k) + " basis states");
    }
    std::vector<FormalState> out;
    out.reserve(std::size_t{1} << k);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); i++) {
        out.push_back(encode(c, seeds, logical_word(i, k)));
    }
    return out;
}

}  // namespace stabforge
