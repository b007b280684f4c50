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

#include "stabforge/gf2.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace stabforge;

namespace {

BitVec random_bits(std::size_t n, std::mt19937_64 &rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; i++) {
        v.set(i, rng() & 1);
    }
    return v;
}

/// Rank by counting the span: |span| = 2^rank.
std::size_t brute_rank(const std::vector<BitVec> &rows) {
    std::set<BitVec> span = {BitVec(rows.front().size())};
    for (const auto &r : rows) {
        std::set<BitVec> next = span;
        for (const auto &v : span) {
            next.insert(v ^ r);
        }
        span = std::move(next);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) {
        rank++;
    }
    return rank;
}

}  // namespace

TEST(bitvec, basics) {
    auto v = BitVec::from_string("10110");
    EXPECT_EQ(v.size(), 5u);
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.str(), "10110");
    EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_EQ(*v.first_set(), 0u);
    EXPECT_EQ(BitVec::from_uint(5, 4).str(), "0101");
    EXPECT_TRUE(BitVec(70).none());
    EXPECT_FALSE(BitVec(70).first_set());
    EXPECT_THROW(BitVec::from_string("10a"), std::invalid_argument);
    EXPECT_THROW(v ^ BitVec(4), std::invalid_argument);
    EXPECT_LT(BitVec::from_string("011"), BitVec::from_string("100"));
}

TEST(bitvec, wide_vectors) {
    BitVec a(200);
    BitVec b(200);
    a.set(3);
    a.set(130);
    a.set(199);
    b.set(130);
    b.set(199);
    EXPECT_EQ(a.and_popcount(b), 2u);
    EXPECT_FALSE(a.and_parity(b));
    EXPECT_EQ((a ^ b).ones(), (std::vector<std::size_t>{3}));
    EXPECT_EQ((a & b).popcount(), 2u);
    EXPECT_EQ((a | b).popcount(), 3u);
    EXPECT_EQ(BitVec::from_string(a.str()), a);
}

TEST(gf2, rank_matches_span_size) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t cols = 1 + rng() % 9;
        std::size_t nrows = 1 + rng() % 8;
        std::vector<BitVec> rows;
        for (std::size_t r = 0; r < nrows; r++) {
            rows.push_back(random_bits(cols, rng));
        }
        EXPECT_EQ(gf2::rank(rows), brute_rank(rows));
    }
}

TEST(gf2, dependency_witness_sums_to_vector) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t cols = 1 + rng() % 12;
        std::size_t nrows = 1 + rng() % 16;
        std::vector<BitVec> rows;
        gf2::XorBasis basis(cols, nrows);
        for (std::size_t r = 0; r < nrows; r++) {
            rows.push_back(random_bits(cols, rng));
            auto dep = basis.insert(rows.back(), r);
            if (!dep) {
                continue;
            }
            EXPECT_TRUE(dep->get(r));
            BitVec sum(cols);
            for (std::size_t i : dep->ones()) {
                EXPECT_LE(i, r);
                sum ^= rows[i];
            }
            EXPECT_TRUE(sum.none());
        }
        EXPECT_EQ(basis.rank(), brute_rank(rows));
    }
}

TEST(gf2, kernel_basis_spans_null_space) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t cols = 1 + rng() % 10;
        std::size_t nrows = rng() % 7;
        std::vector<BitVec> rows;
        for (std::size_t r = 0; r < nrows; r++) {
            rows.push_back(random_bits(cols, rng));
        }
        auto kernel = gf2::kernel_basis(rows, cols);
        std::size_t rank = rows.empty() ? 0 : gf2::rank(rows);
        ASSERT_EQ(kernel.size(), cols - rank);
        std::vector<BitVec> vectors;
        for (const auto &kv : kernel) {
            BitVec v(cols);
            for (std::size_t i : kv.support) {
                v.set(i);
            }
            EXPECT_TRUE(v.get(kv.free_column));
            for (const auto &row : rows) {
                EXPECT_FALSE(row.and_parity(v));
            }
            vectors.push_back(v);
        }
        if (!vectors.empty()) {
            EXPECT_EQ(gf2::rank(vectors), vectors.size());
        }
        // Every null vector found by brute force lies in the span.
        if (cols <= 8) {
            gf2::XorBasis span(cols, 0);
            for (const auto &v : vectors) {
                span.insert(v, 0);
            }
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); x++) {
                BitVec v = BitVec::from_uint(x, cols);
                bool null = true;
                for (const auto &row : rows) {
                    null = null && !row.and_parity(v);
                }
                EXPECT_EQ(null, span.in_span(v));
            }
        }
    }
}

TEST(gf2, rref_pivots_lowest_columns) {
    std::vector<BitVec> rows = {BitVec::from_string("0110"), BitVec::from_string("0011"), BitVec::from_string("0101")};
    auto red = gf2::rref(rows, 4);
    EXPECT_EQ(red.pivots, (std::vector<std::size_t>{1, 2}));
    ASSERT_EQ(red.rows.size(), 2u);
    EXPECT_EQ(red.rows[0].str(), "0101");
    EXPECT_EQ(red.rows[1].str(), "0011");
}
