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
 * The [[2^j, 2^j - j - 2]] single-error-correcting family, which meets the
 * quantum Hamming bound with equality.
 *
 * Construction: each one-qubit error gets a (j+2)-bit syndrome. The two leading
 * bits say which letter it is (01 = X, 10 = Z, 11 = Y); the remaining j bits
 * identify the qubit. X_i uses i-1 in binary. Z_i counts 0,0,1,1,2,2,... and
 * complements one member of each pair, chosen so that Y_i = X_i XOR Z_i stays
 * injective. The generators are read back off those syndromes.
 */

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "stabforge/bounds.hpp"
#include "stabforge/code_spec.hpp"
#include "stabforge/codewords.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/stabilizer.hpp"

namespace stabforge::family {

inline constexpr std::size_t kMinJ = 3;
inline constexpr std::size_t kMaxJ = 16;
inline constexpr const char *kConstructionName = "hamming-saturating-2j";

/// Syndrome values of all single-qubit errors. Values are (j+2)-bit integers
/// whose most significant bit belongs to M_1.
struct NumberAssignment {
    std::size_t j = 0;
    std::vector<std::uint32_t> fx;  // index i-1
    std::vector<std::uint32_t> fz;
    std::vector<std::uint32_t> fy;

    std::size_t num_qubits() const {
        return fx.size();
    }
    std::size_t width() const {
        return j + 2;
    }
    /// Bit of generator r (1-based) in a value.
    bool bit(std::uint32_t value, std::size_t r) const {
        return (value >> (width() - r)) & 1;
    }
    std::string str(std::uint32_t value) const {
        std::string out(width(), '0');
        for (std::size_t r = 1; r <= width(); r++) {
            if (bit(value, r)) {
                out[r - 1] = '1';
            }
        }
        return out;
    }
    std::uint32_t value(Letter letter, std::size_t qubit) const {
        switch (letter) {
            case Letter::X:
                return fx.at(qubit - 1);
            case Letter::Z:
                return fz.at(qubit - 1);
            case Letter::Y:
                return fy.at(qubit - 1);
            default:
                return 0;
        }
    }
};

inline void require_j(std::size_t j, std::size_t max_j) {
    if (j < kMinJ || j > max_j) {
        throw std::out_of_range(
            "j must lie in [" + std::to_string(kMinJ) + ", " + std::to_string(max_j) + "], got " + std::to_string(j));
    }
}

/// Whether the last j bits of Z_i are complemented.
inline bool z_complemented(std::size_t j, std::size_t i) {
    bool odd_i = i % 2 == 1;
    if (j % 2 == 0) {
        return odd_i;
    }
    std::size_t half = std::size_t{1} << (j - 1);
    return i <= half ? odd_i : !odd_i;
}

inline NumberAssignment assign_numbers(std::size_t j) {
    // 30-bit cap keeps the values inside uint32_t.
    require_j(j, 28);
    NumberAssignment out;
    out.j = j;
    std::size_t n = std::size_t{1} << j;
    std::uint32_t low_mask = (std::uint32_t{1} << j) - 1;
    std::uint32_t x_tag = std::uint32_t{1} << j;
    std::uint32_t z_tag = std::uint32_t{2} << j;
    out.fx.resize(n);
    out.fz.resize(n);
    out.fy.resize(n);
    for (std::size_t i = 1; i <= n; i++) {
        std::uint32_t x_low = static_cast<std::uint32_t>(i - 1);
        std::uint32_t z_low = static_cast<std::uint32_t>((i - 1) / 2);
        if (z_complemented(j, i)) {
            z_low = ~z_low & low_mask;
        }
        out.fx[i - 1] = x_tag | x_low;
        out.fz[i - 1] = z_tag | z_low;
        out.fy[i - 1] = out.fx[i - 1] ^ out.fz[i - 1];
    }
    return out;
}

/// M_r has an X component on qubit i iff bit r of f(Z_i) is set, and a Z
/// component iff bit r of f(X_i) is set. All signs are +1.
inline std::vector<PauliOperator> derive_generators(const NumberAssignment &numbers) {
    std::size_t n = numbers.num_qubits();
    std::vector<PauliOperator> gens;
    for (std::size_t r = 1; r <= numbers.width(); r++) {
        BitVec xs(n);
        BitVec zs(n);
        for (std::size_t i = 0; i < n; i++) {
            xs.set(i, numbers.bit(numbers.fz[i], r));
            zs.set(i, numbers.bit(numbers.fx[i], r));
        }
        gens.emplace_back(std::move(xs), std::move(zs));
    }
    return gens;
}

/// True iff the 3n single-error values are pairwise distinct and nonzero.
inline bool numbers_distinct(const NumberAssignment &numbers) {
    std::unordered_set<std::uint32_t> seen;
    seen.reserve(3 * numbers.num_qubits() + 1);
    seen.insert(0);
    for (const auto *values : {&numbers.fx, &numbers.fz, &numbers.fy}) {
        for (std::uint32_t v : *values) {
            if (!seen.insert(v).second) {
                return false;
            }
        }
    }
    return true;
}

struct FamilyCode {
    CodeSpec spec;
    NumberAssignment numbers;
    StabilizerGroup group;
    GeneratorClassification classification;
};

inline FamilyCode build(std::size_t j) {
    require_j(j, kMaxJ);
    NumberAssignment numbers = assign_numbers(j);
    std::vector<PauliOperator> gens = derive_generators(numbers);
    std::size_t n = numbers.num_qubits();
    StabilizerGroup group = StabilizerGroup::validate(n, gens, DependencePolicy::Reject);
    GeneratorClassification classification = classify_generators(group);

    CodeSpec spec;
    spec.n = n;
    spec.k = n - j - 2;
    spec.j = j;
    spec.generators = group.generators();
    spec.seed_generators = seed_supports(classification);
    spec.construction = kConstructionName;
    spec.version = 1;
    if (spec.seed_generators.size() != spec.k) {
        throw std::logic_error("family construction produced the wrong number of seed generators");
    }
    return FamilyCode{std::move(spec), std::move(numbers), std::move(group), std::move(classification)};
}

inline CodeSpec build_code(std::size_t j) {
    return build(j).spec;
}

struct LetterCensus {
    std::size_t i = 0;
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t z = 0;
    bool operator==(const LetterCensus &) const = default;
};

inline LetterCensus letter_census(const PauliOperator &p) {
    LetterCensus out;
    out.y = p.xs().and_popcount(p.zs());
    out.x = p.xs().popcount() - out.y;
    out.z = p.zs().popcount() - out.y;
    out.i = p.num_qubits() - out.x - out.y - out.z;
    return out;
}

/// Commutation decided by counting qubits where both operators act
/// non-trivially with different letters.
inline bool commutes_by_disagreement(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("commutes_by_disagreement: qubit count mismatch");
    }
    std::size_t disagreements = 0;
    auto px = p.xs().words();
    auto pz = p.zs().words();
    auto qx = q.xs().words();
    auto qz = q.zs().words();
    for (std::size_t w = 0; w < px.size(); w++) {
        auto both_active = (px[w] | pz[w]) & (qx[w] | qz[w]);
        auto differ = (px[w] ^ qx[w]) | (pz[w] ^ qz[w]);
        disagreements += static_cast<std::size_t>(std::popcount(both_active & differ));
    }
    return disagreements % 2 == 0;
}

/// Letter of M_r (r >= 3) on qubit i predicted by the block pattern: runs of
/// 2^(j-r+2) qubits cycle I -> Z -> X -> Y, and on complemented qubits the
/// letters swap I <-> X and Z <-> Y.
inline Letter cycle_letter(std::size_t j, std::size_t r, std::size_t i) {
    static constexpr std::array<Letter, 4> kCycle = {Letter::I, Letter::Z, Letter::X, Letter::Y};
    std::size_t block = std::size_t{1} << (j - (r - 2));
    Letter l = kCycle[((i - 1) / block) % 4];
    if (z_complemented(j, i)) {
        switch (l) {
            case Letter::I:
                return Letter::X;
            case Letter::X:
                return Letter::I;
            case Letter::Z:
                return Letter::Y;
            default:
                return Letter::Z;
        }
    }
    return l;
}

}  // namespace stabforge::family
