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
#include <cstddef>
#include <optional>
#include <vector>

#include "stabforge/bitvec.hpp"

namespace stabforge::gf2 {

/// Incrementally built row-echelon basis over GF(2).
///
/// Every stored row carries a tag recording which inserted vectors it is the
/// sum of, so that a vector reducing to zero yields its dependency witness.
class XorBasis {
   public:
    /// With max_tags == 0 no combinations are tracked and insert() returns an
    /// empty witness for dependent vectors.
    XorBasis(std::size_t num_bits, std::size_t max_tags) : num_bits_(num_bits), max_tags_(max_tags) {}

    struct Reduction {
        BitVec residual;
        BitVec combination;  // which stored inputs were added to reach the residual
    };

    Reduction reduce(BitVec v) const {
        BitVec combination(max_tags_);
        for (std::size_t r = 0; r < rows_.size(); r++) {
            if (v.get(pivots_[r])) {
                v ^= rows_[r];
                if (max_tags_) {
                    combination ^= tags_[r];
                }
            }
        }
        return {std::move(v), std::move(combination)};
    }

    bool in_span(const BitVec &v) const {
        return reduce(v).residual.none();
    }

    /// Inserts `v` labelled by input index `tag`. Returns nullopt if independent,
    /// else the set of earlier tags whose sum equals `v` (tag itself included).
    std::optional<BitVec> insert(const BitVec &v, std::size_t tag) {
        Reduction red = reduce(v);
        if (max_tags_) {
            red.combination.flip(tag);
        }
        auto pivot = red.residual.first_set();
        if (!pivot) {
            return std::move(red.combination);
        }
        rows_.push_back(std::move(red.residual));
        tags_.push_back(std::move(red.combination));
        pivots_.push_back(*pivot);
        return std::nullopt;
    }

    std::size_t rank() const {
        return rows_.size();
    }
    std::size_t num_bits() const {
        return num_bits_;
    }

   private:
    std::size_t num_bits_;
    std::size_t max_tags_;
    std::vector<BitVec> rows_;
    std::vector<BitVec> tags_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const std::vector<BitVec> &rows) {
    if (rows.empty()) {
        return 0;
    }
    XorBasis basis(rows.front().size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        basis.insert(rows[i], i);
    }
    return basis.rank();
}

/// Reduced row-echelon form with pivots taken at the lowest available column.
struct Rref {
    std::vector<BitVec> rows;         // one per pivot, fully reduced
    std::vector<std::size_t> pivots;  // ascending
    std::vector<bool> is_pivot;       // per column
};

inline Rref rref(std::vector<BitVec> rows, std::size_t num_cols) {
    Rref out;
    out.is_pivot.assign(num_cols, false);
    std::size_t next = 0;
    for (std::size_t col = 0; col < num_cols && next < rows.size(); col++) {
        std::size_t found = next;
        while (found < rows.size() && !rows[found].get(col)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
            }
        }
        out.pivots.push_back(col);
        out.is_pivot[col] = true;
        next++;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

/// Basis of {v : row . v = 0 for every row}. One vector per non-pivot column f,
/// equal to e_f plus the pivot columns of rows that contain f. Returned with
/// the column f it belongs to, ascending in f.
struct KernelVector {
    std::size_t free_column;
    std::vector<std::size_t> support;  // ascending
};

inline std::vector<KernelVector> kernel_basis(const std::vector<BitVec> &rows, std::size_t num_cols) {
    Rref red = rref(rows, num_cols);
    std::vector<KernelVector> out;
    for (std::size_t f = 0; f < num_cols; f++) {
        if (red.is_pivot[f]) {
            continue;
        }
        KernelVector kv{f, {}};
        for (std::size_t r = 0; r < red.rows.size(); r++) {
            if (red.rows[r].get(f)) {
                kv.support.push_back(red.pivots[r]);
            }
        }
        kv.support.push_back(f);
        std::sort(kv.support.begin(), kv.support.end());
        out.push_back(std::move(kv));
    }
    return out;
}

}  // namespace stabforge::gf2
