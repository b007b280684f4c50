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

#include "stabforge/ecc_sim.hpp"

#include <set>

#include "gtest/gtest.h"

#include "stabforge/family.hpp"
#include "test_data.hpp"

using namespace stabforge;
using namespace stabforge::sim;

namespace {

const Simulator &sim8() {
    static const Simulator sim(family::build_code(3));
    return sim;
}

Matrix2 random_matrix(Rng &rng) {
    Matrix2 m;
    for (auto &x : m) {
        x = Complex(rng.normal(), rng.normal());
    }
    return m;
}

}  // namespace

TEST(ecc_sim, rng_streams_are_reproducible) {
    Rng a(7);
    Rng b(7);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(a(), b());
    }
    Rng s1 = Rng(7).stream(3);
    Rng s2 = Rng(7).stream(3);
    Rng s3 = Rng(7).stream(4);
    EXPECT_EQ(s1(), s2());
    EXPECT_NE(Rng(7).stream(3)(), s3());
    for (int i = 0; i < 1000; i++) {
        double u = a.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(a.below(5), 5u);
    }
}

TEST(ecc_sim, syndrome_table) {
    const auto &table = sim8().table();
    EXPECT_EQ(table.size(), 25u);
    EXPECT_EQ(table.lookup(Syndrome{BitVec::from_string("11100")})->str(), "+IIYIIIII");
    EXPECT_EQ(table.lookup(Syndrome{BitVec::from_string("00000")})->str(), "+IIIIIIII");
    for (std::size_t i = 1; i <= 8; i++) {
        EXPECT_EQ(*table.lookup(Syndrome{BitVec::from_string(testdata::kSyndromeX[i - 1])}),
                  PauliOperator::single(8, i, Letter::X));
    }
    EXPECT_THROW(build_syndrome_table(sim8().group(), 2), DegenerateSyndromes);
}

TEST(ecc_sim, measure_pauli_error_image) {
    const auto &sim = sim8();
    const auto &psi0 = sim.code_basis()[0];
    Rng rng(1);
    auto m = measure_syndrome(oracle::apply_pauli(PauliOperator::single(8, 3, Letter::X), psi0), sim.group(), rng);
    EXPECT_EQ(m.syndrome.str(), "01010");
    for (double p : m.plus_probability) {
        EXPECT_TRUE(std::abs(p) < 1e-12 || std::abs(p - 1) < 1e-12);
    }

    auto clean = measure_syndrome(psi0, sim.group(), rng);
    EXPECT_TRUE(clean.syndrome.is_zero());
    EXPECT_NEAR(std::abs(oracle::inner(clean.state, psi0)), 1.0, 1e-12);

    EXPECT_THROW(measure_syndrome(StateVector(8), sim.group(), rng), std::invalid_argument);
}

TEST(ecc_sim, measure_superposed_error_collapses) {
    const auto &sim = sim8();
    const auto &psi0 = sim.code_basis()[0];
    auto x1 = oracle::apply_pauli(PauliOperator::single(8, 1, Letter::X), psi0);
    auto z1 = oracle::apply_pauli(PauliOperator::single(8, 1, Letter::Z), psi0);
    auto v = (x1 + z1).normalized();
    std::map<std::string, int> counts;
    const int trials = 2000;
    for (int t = 0; t < trials; t++) {
        Rng rng = Rng(99).stream(t);
        auto m = measure_syndrome(v, sim.group(), rng);
        counts[m.syndrome.str()]++;
        EXPECT_NEAR(m.plus_probability[0], 0.5, 1e-12);
        const auto &expected = m.syndrome.str() == "01000" ? x1 : z1;
        EXPECT_NEAR(std::abs(oracle::inner(expected, m.state)), 1.0, 1e-10);
    }
    ASSERT_EQ(counts.size(), 2u);
    EXPECT_NEAR(counts["01000"] / double(trials), 0.5, 0.05);
    EXPECT_NEAR(counts["10111"] / double(trials), 0.5, 0.05);
}

TEST(ecc_sim, single_pauli_errors_recover) {
    const auto &sim = sim8();
    Rng rng(5);
    auto y6 = sim.run_trial(PauliError{PauliOperator::single(8, 6, Letter::Y)}, rng);
    EXPECT_EQ(y6.syndrome.str(), "11000");
    EXPECT_NEAR(y6.fidelity, 1.0, 1e-10);
    EXPECT_TRUE(y6.success);

    auto none = sim.run_trial(PauliError{PauliOperator::identity(8)}, rng);
    EXPECT_TRUE(none.syndrome.is_zero());
    EXPECT_DOUBLE_EQ(none.fidelity, 1.0);
    EXPECT_TRUE(none.success);
}

TEST(ecc_sim, all_single_errors_on_basis_and_superpositions) {
    const auto &sim = sim8();
    Rng master(6);
    std::uint64_t index = 0;
    std::vector<StateVector> inputs = sim.code_basis();
    for (int s = 0; s < 100; s++) {
        Rng rng = master.stream(1000000 + s);
        inputs.push_back(sim.random_logical_state(rng));
    }
    for (std::size_t q = 1; q <= 8; q++) {
        for (Letter l : kErrorLetters) {
            auto e = PauliOperator::single(8, q, l);
            for (const auto &in : inputs) {
                Rng rng = master.stream(index++);
                auto r = sim.run_trial(in, PauliError{e}, rng);
                ASSERT_TRUE(r.success) << e.str() << " fidelity " << r.fidelity;
            }
        }
    }
}

TEST(ecc_sim, random_matrix_errors_recover) {
    const auto &sim = sim8();
    Rng master(7);
    for (std::uint64_t t = 0; t < 1000; t++) {
        Rng rng = master.stream(t);
        MatrixError error{random_matrix(rng), 1 + rng.below(8)};
        auto r = sim.run_trial(error, rng);
        ASSERT_TRUE(r.success) << "trial " << t << " fidelity " << r.fidelity;
    }
}

TEST(ecc_sim, projector_error_yields_only_component_syndromes) {
    const auto &sim = sim8();
    Matrix2 proj0 = {1.0, 0.0, 0.0, 0.0};
    std::set<std::string> seen;
    for (std::uint64_t t = 0; t < 200; t++) {
        Rng rng = Rng(8).stream(t);
        auto r = sim.run_trial(MatrixError{proj0, 4}, rng);
        seen.insert(r.syndrome.str());
        EXPECT_TRUE(r.success);
    }
    std::set<std::string> allowed = {"00000", std::string(testdata::kSyndromeZ[3])};
    EXPECT_EQ(seen, allowed);
}

TEST(ecc_sim, weight_two_error_can_fail) {
    const auto &sim = sim8();
    Rng rng(9);
    auto e = multiply(PauliOperator::single(8, 1, Letter::X), PauliOperator::single(8, 2, Letter::Z));
    auto r = sim.run_trial(PauliError{e}, rng);
    EXPECT_EQ(r.syndrome.str(), "11000");
    EXPECT_TRUE(r.matched);
    EXPECT_FALSE(r.success);
}

TEST(ecc_sim, campaigns) {
    const auto &sim = sim8();
    auto exhaustive = run_campaign(sim, Exhaustive{}, 0, 1, "exhaustive");
    EXPECT_EQ(exhaustive.trials, 24u * 8u);
    EXPECT_EQ(exhaustive.success_rate, 1.0);
    EXPECT_EQ(exhaustive.syndrome_histogram.size(), 24u);

    auto clean = run_campaign(sim, ErrorSpec{Depolarizing{0.0}}, 50, 2, "depolarizing:0");
    EXPECT_EQ(clean.success_rate, 1.0);
    EXPECT_EQ(clean.syndrome_histogram.at("00000"), 50u);

    auto a = run_campaign(sim, ErrorSpec{Depolarizing{0.05}}, 200, 3, "depolarizing:0.05").to_json().dump();
    auto b = run_campaign(sim, ErrorSpec{Depolarizing{0.05}}, 200, 3, "depolarizing:0.05").to_json().dump();
    auto c = run_campaign(sim, ErrorSpec{Depolarizing{0.05}}, 200, 4, "depolarizing:0.05").to_json().dump();
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
}

TEST(ecc_sim, parse_complex) {
    EXPECT_EQ(parse_complex("1"), Complex(1, 0));
    EXPECT_EQ(parse_complex("-0.5"), Complex(-0.5, 0));
    EXPECT_EQ(parse_complex("2i"), Complex(0, 2));
    EXPECT_EQ(parse_complex("-i"), Complex(0, -1));
    EXPECT_EQ(parse_complex("1+2i"), Complex(1, 2));
    EXPECT_EQ(parse_complex("1e-3-1e+2j"), Complex(1e-3, -1e2));
    EXPECT_THROW(parse_complex(""), std::invalid_argument);
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
}

TEST(ecc_sim, parse_model) {
    EXPECT_TRUE(std::holds_alternative<Exhaustive>(parse_model("exhaustive", 8)));
    auto pauli = std::get<ErrorSpec>(parse_model("pauli:X1Z2", 8));
    EXPECT_EQ(std::get<PauliError>(pauli).op.str(), "+XZIIIIII");
    auto full = std::get<ErrorSpec>(parse_model("pauli:+IIYIIIII", 8));
    EXPECT_EQ(std::get<PauliError>(full).op.str(), "+IIYIIIII");
    auto matrix = std::get<ErrorSpec>(parse_model("matrix:1,0,0,0@3", 8));
    EXPECT_EQ(std::get<MatrixError>(matrix).qubit, 3u);
    EXPECT_EQ(std::get<MatrixError>(matrix).matrix[0], Complex(1, 0));
    auto dep = std::get<ErrorSpec>(parse_model("depolarizing:0.1", 8));
    EXPECT_EQ(std::get<Depolarizing>(dep).p, 0.1);

    EXPECT_THROW(parse_model("bogus", 8), std::invalid_argument);
    EXPECT_THROW(parse_model("matrix:1,0,0@1", 8), std::invalid_argument);
    EXPECT_THROW(parse_model("matrix:1,0,0,0,0@1", 8), std::invalid_argument);
    EXPECT_THROW(parse_model("matrix:1,0,0,0@9", 8), std::out_of_range);
    EXPECT_THROW(parse_model("depolarizing:1.5", 8), std::invalid_argument);
    EXPECT_THROW(parse_model("pauli:Q1", 8), std::invalid_argument);
    EXPECT_THROW(parse_model("pauli:X9", 8), std::out_of_range);
}
