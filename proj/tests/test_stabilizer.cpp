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

#include "stabforge/stabilizer.hpp"

#include <random>
#include <set>
#include <unordered_set>

#include "gtest/gtest.h"

#include "stabforge/bounds.hpp"
#include "test_data.hpp"

using namespace stabforge;

namespace {

PauliOperator P(std::string_view text) {
    return PauliOperator::parse(std::string(text));
}

StabilizerGroup code8() {
    std::vector<PauliOperator> gens;
    for (auto g : testdata::kGenerators8) {
        gens.push_back(P(g));
    }
    return StabilizerGroup::validate(8, gens);
}

std::string xor_bits(const std::string &a, std::string_view b) {
    std::string out = a;
    for (std::size_t i = 0; i < a.size(); i++) {
        out[i] = a[i] == b[i] ? '0' : '1';
    }
    return out;
}

ValidationError::Kind kind_of(std::size_t n, std::vector<PauliOperator> gens, DependencePolicy policy) {
    try {
        StabilizerGroup::validate(n, std::move(gens), policy);
    } catch (const ValidationError &e) {
        return e.kind();
    }
    ADD_FAILURE() << "validation unexpectedly succeeded";
    return ValidationError::Kind::TooManyGenerators;
}

/// Random Paulis, each kept if it commutes with and is independent of those
/// kept so far.
std::vector<PauliOperator> random_commuting(std::size_t n, std::size_t a, std::mt19937_64 &rng) {
    static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
    std::vector<PauliOperator> out;
    for (int attempt = 0; attempt < 2000 && out.size() < a; attempt++) {
        std::string text = "+";
        for (std::size_t i = 0; i < n; i++) {
            text.push_back(kLetters[rng() % 4]);
        }
        auto p = P(text);
        if (square_sign(p) != 1 || p.is_identity_up_to_sign()) {
            continue;
        }
        bool ok = true;
        for (const auto &q : out) {
            ok = ok && commutes(p, q);
        }
        if (!ok) {
            continue;
        }
        std::vector<PauliOperator> trial = out;
        trial.push_back(p);
        try {
            StabilizerGroup::validate(n, trial, DependencePolicy::Reject);
            out = std::move(trial);
        } catch (const ValidationError &) {
        }
    }
    return out;
}

}  // namespace

TEST(stabilizer, validate_accepts_eight_qubit_code) {
    auto h = code8();
    EXPECT_EQ(h.num_qubits(), 8u);
    EXPECT_EQ(h.num_generators(), 5u);
    EXPECT_TRUE(h.warnings().empty());
    EXPECT_EQ(h.generator(3).str(), "+XIXIZYZY");
    EXPECT_THROW(h.generator(0), std::out_of_range);
    EXPECT_THROW(h.generator(6), std::out_of_range);
}

TEST(stabilizer, validate_rejects_anticommuting) {
    try {
        StabilizerGroup::validate(1, {P("X"), P("Z")});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::NotAbelian);
        EXPECT_EQ(e.witness(), (std::vector<std::size_t>{1, 2}));
    }
}

TEST(stabilizer, validate_rejects_minus_identity) {
    try {
        StabilizerGroup::validate(2, {P("+XX"), P("+ZZ"), P("-YY")});
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::MinusIdentityInGroup);
        EXPECT_EQ(e.witness(), (std::vector<std::size_t>{1, 2, 3}));
    }
    EXPECT_EQ(kind_of(1, {P("+Z"), P("-Z")}, DependencePolicy::Reduce), ValidationError::Kind::MinusIdentityInGroup);
}

TEST(stabilizer, validate_other_errors) {
    EXPECT_EQ(kind_of(2, {P("+XX"), P("+Z")}, DependencePolicy::Reduce), ValidationError::Kind::QubitCountMismatch);
    EXPECT_EQ(kind_of(1, {P("+Y")}, DependencePolicy::Reduce), ValidationError::Kind::SquaresToMinusOne);
    EXPECT_EQ(
        kind_of(2, {P("+XX"), P("+ZZ"), P("+YY")}, DependencePolicy::Reject),
        ValidationError::Kind::DependentGenerators);
}

TEST(stabilizer, validate_reduces_dependent_generator) {
    ASSERT_EQ(multiply(P("+XX"), P("+ZZ")).str(), "+YY");
    auto h = StabilizerGroup::validate(2, {P("+XX"), P("+ZZ"), P("+YY")});
    EXPECT_EQ(h.num_generators(), 2u);
    ASSERT_EQ(h.warnings().size(), 1u);
    EXPECT_NE(h.warnings()[0].find("M_3"), std::string::npos);
}

TEST(stabilizer, syndrome_single_errors_match_table) {
    auto h = code8();
    for (std::size_t i = 1; i <= 8; i++) {
        EXPECT_EQ(syndrome(h, PauliOperator::single(8, i, Letter::X)).str(), testdata::kSyndromeX[i - 1]) << i;
        EXPECT_EQ(syndrome(h, PauliOperator::single(8, i, Letter::Z)).str(), testdata::kSyndromeZ[i - 1]) << i;
        EXPECT_EQ(syndrome(h, PauliOperator::single(8, i, Letter::Y)).str(), testdata::kSyndromeY[i - 1]) << i;
    }
    EXPECT_EQ(syndrome(h, P("+XIIIIIII")).str(), "01000");
    EXPECT_TRUE(syndrome(h, PauliOperator::identity(8)).is_zero());
    EXPECT_THROW(syndrome(h, P("X")), std::invalid_argument);
}

TEST(stabilizer, syndrome_of_product_is_xor_of_table_rows) {
    auto h = code8();
    auto e = multiply(PauliOperator::single(8, 1, Letter::X), PauliOperator::single(8, 2, Letter::Z));
    std::string expected = xor_bits(std::string(testdata::kSyndromeX[0]), testdata::kSyndromeZ[1]);
    EXPECT_EQ(expected, "11000");
    EXPECT_EQ(syndrome(h, e).str(), expected);
}

TEST(stabilizer, syndrome_is_a_homomorphism) {
    auto h = code8();
    std::mt19937_64 rng(11);
    static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
    auto draw = [&] {
        std::string t = (rng() & 1) ? "-" : "+";
        for (int i = 0; i < 8; i++) {
            t.push_back(kLetters[rng() % 4]);
        }
        return P(t);
    };
    for (int trial = 0; trial < 5000; trial++) {
        auto e = draw();
        auto f = draw();
        EXPECT_EQ(syndrome(h, multiply(e, f)).bits, syndrome(h, e).bits ^ syndrome(h, f).bits);
    }
}

TEST(stabilizer, enumerate_elements_eight_qubit_code) {
    auto h = code8();
    auto elements = enumerate_elements(h);
    ASSERT_EQ(elements.size(), 32u);
    std::unordered_set<PauliOperator, PauliHash> distinct(elements.begin(), elements.end());
    EXPECT_EQ(distinct.size(), 32u);
    EXPECT_TRUE(elements.front().is_identity_up_to_sign());
    EXPECT_FALSE(elements.front().negative());
    for (const auto &e : elements) {
        EXPECT_EQ(square_sign(e), 1);
        EXPECT_TRUE(syndrome(h, e).is_zero());
        EXPECT_FALSE(e.is_identity_up_to_sign() && e.negative());
    }
}

TEST(stabilizer, enumerate_elements_refuses_large_groups) {
    std::size_t n = kMaxEnumeratedGenerators + 1;
    std::vector<PauliOperator> gens;
    for (std::size_t i = 1; i <= n; i++) {
        gens.push_back(PauliOperator::single(n, i, Letter::Z));
    }
    auto h = StabilizerGroup::validate(n, gens);
    EXPECT_THROW(enumerate_elements(h), GroupTooLarge);
}

TEST(stabilizer, error_enumeration_order_and_count) {
    std::vector<std::string> seen;
    for_each_error_up_to_weight(3, 2, [&](const SparseError &e) {
        seen.push_back(e.to_pauli(3).str());
        return true;
    });
    ASSERT_EQ(seen.size(), 1u + 9u + 27u);
    EXPECT_EQ(seen[0], "+III");
    EXPECT_EQ(seen[1], "+XII");
    EXPECT_EQ(seen[2], "+YII");
    EXPECT_EQ(seen[3], "+ZII");
    EXPECT_EQ(seen[4], "+IXI");
    EXPECT_EQ(seen[10], "+XXI");
    EXPECT_EQ(seen[11], "+XYI");
    EXPECT_EQ(seen.back(), "+IZZ");

    for (std::size_t n = 1; n <= 7; n++) {
        for (std::size_t t = 0; t <= 3; t++) {
            std::size_t count = 0;
            for_each_error_up_to_weight(n, t, [&](const SparseError &) {
                count++;
                return true;
            });
            EXPECT_EQ(bounds::BigInt(count), bounds::error_count(n, t)) << n << " " << t;
        }
    }
}

TEST(stabilizer, correctability_t1_passes) {
    auto report = check_correctability(code8(), 1);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.errors_checked, 25u);
    EXPECT_EQ(report.distinct_syndromes, 25u);
    EXPECT_EQ(report.possible_syndromes_log2, 5u);
    EXPECT_FALSE(report.collision);
}

TEST(stabilizer, correctability_t2_fails_with_witness) {
    auto h = code8();
    auto report = check_correctability(h, 2);
    EXPECT_FALSE(report.pass);
    ASSERT_TRUE(report.collision);
    auto [a, b] = *report.collision;
    EXPECT_NE(a, b);
    EXPECT_LE(weight(a), 2u);
    EXPECT_LE(weight(b), 2u);
    EXPECT_EQ(syndrome(h, a), syndrome(h, b));
    EXPECT_EQ(syndrome(h, a), *report.collision_syndrome);

    // X_1 Z_2 and Y_6 share 11000.
    auto x1z2 = multiply(PauliOperator::single(8, 1, Letter::X), PauliOperator::single(8, 2, Letter::Z));
    EXPECT_EQ(syndrome(h, x1z2), syndrome(h, PauliOperator::single(8, 6, Letter::Y)));
}

TEST(stabilizer, correctability_rejects_repetition_pair) {
    auto h = StabilizerGroup::validate(2, {P("+ZZ")});
    auto report = check_correctability(h, 1);
    EXPECT_FALSE(report.pass);
    ASSERT_TRUE(report.collision);
    EXPECT_EQ(syndrome(h, report.collision->first), syndrome(h, report.collision->second));
}

TEST(stabilizer, correctability_pass_implies_counting_bound) {
    auto five = StabilizerGroup::validate(5, {P("+XZZXI"), P("+IXZZX"), P("+XIXZZ"), P("+ZXIXZ")});
    ASSERT_TRUE(check_correctability(five, 1).pass);
    EXPECT_EQ(bounds::error_count(5, 1), bounds::BigInt(1) << five.num_generators());

    std::mt19937_64 rng(12);
    int checked = 0;
    for (int trial = 0; trial < 300; trial++) {
        std::size_t n = 2 + rng() % 6;
        std::size_t a = 1 + rng() % n;
        auto gens = random_commuting(n, a, rng);
        if (gens.empty()) {
            continue;
        }
        auto h = StabilizerGroup::validate(n, gens);
        for (std::size_t t = 1; t <= 2; t++) {
            auto report = check_correctability(h, t);
            if (report.pass) {
                checked++;
                EXPECT_LE(bounds::error_count(n, t), bounds::BigInt(1) << h.num_generators());
                std::int64_t k = static_cast<std::int64_t>(n - h.num_generators());
                EXPECT_LE(k, bounds::qhb_max_k(n, t));
            }
        }
    }
    RecordProperty("passing_groups", checked);
}
