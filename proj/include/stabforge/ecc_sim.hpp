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
 * End-to-end simulation of syndrome-based correction on dense state vectors:
 * encode a logical state, corrupt it, measure every generator projectively
 * (in order M_1..M_a), apply the tabulated correction, and score the result.
 *
 * The ancilla is not simulated; its measurement record is the syndrome.
 */

#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"
#include "stabforge/code_spec.hpp"
#include "stabforge/codewords.hpp"
#include "stabforge/oracle.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/rng.hpp"
#include "stabforge/stabilizer.hpp"

namespace stabforge::sim {

using oracle::Complex;
using oracle::Matrix2;
using oracle::StateVector;

inline constexpr double kSuccessTolerance = 1e-10;

class DegenerateSyndromes : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Syndrome -> minimal-weight correction for every error up to a weight.
class SyndromeTable {
   public:
    std::optional<PauliOperator> lookup(const Syndrome &s) const {
        auto it = entries_.find(s);
        if (it == entries_.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    std::size_t size() const {
        return entries_.size();
    }
    std::size_t max_weight() const {
        return max_weight_;
    }
    const std::map<Syndrome, PauliOperator> &entries() const {
        return entries_;
    }

    friend SyndromeTable build_syndrome_table(const StabilizerGroup &group, std::size_t max_weight);

   private:
    std::size_t max_weight_ = 0;
    std::map<Syndrome, PauliOperator> entries_;
};

/// Errors are visited in increasing weight; the first error to claim a syndrome
/// keeps it. Throws if two errors within the weight bound collide.
inline SyndromeTable build_syndrome_table(const StabilizerGroup &group, std::size_t max_weight) {
    SyndromeTable table;
    table.max_weight_ = max_weight;
    SyndromeColumns columns(group);
    std::optional<std::string> collision;
    for_each_error_up_to_weight(group.num_qubits(), max_weight, [&](const SparseError &e) {
        PauliOperator p = e.to_pauli(group.num_qubits());
        auto [it, inserted] = table.entries_.try_emplace(columns.of(e), p);
        if (!inserted) {
            collision = it->second.str() + " and " + p.str() + " share syndrome " + it->first.str();
            return false;
        }
        return true;
    });
    if (collision) {
        throw DegenerateSyndromes("code does not distinguish errors of weight <= " + std::to_string(max_weight) +
                                  ": " + *collision);
    }
    return table;
}

struct Measurement {
    Syndrome syndrome;
    StateVector state;                    // collapsed, unit norm
    std::vector<double> plus_probability;  // per generator, at the time it was measured
};

/// Projective measurement of each generator in order. An outcome is random only
/// when its probability is not within 1e-12 of 0 or 1.
inline Measurement measure_syndrome(const StateVector &v, const StabilizerGroup &group, Rng &rng) {
    if (v.num_qubits() != group.num_qubits()) {
        throw std::invalid_argument("measure_syndrome: qubit count mismatch");
    }
    double norm = v.norm();
    if (norm == 0) {
        throw std::invalid_argument("measure_syndrome: cannot measure the zero vector");
    }
    Measurement out{Syndrome{BitVec(group.num_generators())}, v.normalized(), {}};
    for (std::size_t r = 0; r < group.num_generators(); r++) {
        StateVector moved = oracle::apply_pauli(group.generators()[r], out.state);
        StateVector plus = 0.5 * (out.state + moved);
        double p_plus = plus.norm_squared();
        out.plus_probability.push_back(p_plus);
        bool outcome_plus;
        if (p_plus >= 1.0 - 1e-12) {
            outcome_plus = true;
        } else if (p_plus <= 1e-12) {
            outcome_plus = false;
        } else {
            outcome_plus = rng.uniform() < p_plus;
        }
        if (outcome_plus) {
            out.state = plus.normalized();
        } else {
            out.syndrome.bits.set(r);
            out.state = (0.5 * (out.state + Complex(-1.0) * moved)).normalized();
        }
    }
    return out;
}

struct PauliError {
    PauliOperator op;
};
struct MatrixError {
    Matrix2 matrix;
    std::size_t qubit;  // 1-based
};
/// Each qubit independently suffers X, Y or Z (equally likely) with probability p.
struct Depolarizing {
    double p;
};
using ErrorSpec = std::variant<PauliError, MatrixError, Depolarizing>;

struct RecoveryReport {
    Syndrome syndrome;
    std::optional<PauliOperator> correction;
    std::optional<PauliOperator> sampled_error;  // depolarizing only
    double fidelity = 0;
    bool matched = false;
    bool success = false;
    std::string note;
};

/// Everything needed to run trials on one code, computed once.
class Simulator {
   public:
    Simulator(const CodeSpec &spec, std::size_t max_weight = 1)
        : spec_(spec),
          group_(StabilizerGroup::validate(spec.n, spec.generators)),
          table_(build_syndrome_table(group_, max_weight)) {
        oracle::require_small(spec.n);
        GeneratorClassification classes = classify_generators(group_);
        for (const auto &f : stabforge::basis(classes, spec.seed_generators)) {
            basis_.push_back(oracle::dense_from_formal(f));
        }
    }

    const StabilizerGroup &group() const {
        return group_;
    }
    const SyndromeTable &table() const {
        return table_;
    }
    const std::vector<StateVector> &code_basis() const {
        return basis_;
    }
    std::size_t num_logical() const {
        return basis_.size();
    }

    /// sum_i c_i |psi_i>, normalized.
    StateVector encode(std::span<const Complex> coefficients) const {
        if (coefficients.size() != basis_.size()) {
            throw std::invalid_argument("expected one coefficient per logical basis state");
        }
        StateVector out(spec_.n);
        for (std::size_t i = 0; i < basis_.size(); i++) {
            out += coefficients[i] * basis_[i];
        }
        return out.normalized();
    }

    StateVector random_logical_state(Rng &rng) const {
        std::vector<Complex> c(basis_.size());
        for (auto &x : c) {
            double re = rng.normal();
            double im = rng.normal();
            x = Complex(re, im);
        }
        return encode(c);
    }

    PauliOperator sample_depolarizing(double p, Rng &rng) const {
        PauliOperator e = PauliOperator::identity(spec_.n);
        for (std::size_t q = 1; q <= spec_.n; q++) {
            if (rng.uniform() < p) {
                e.set_letter(q, kErrorLetters[rng.below(3)]);
            }
        }
        return e;
    }

    RecoveryReport run_trial(const ErrorSpec &error, Rng &rng) const {
        StateVector input = random_logical_state(rng);
        return run_trial(input, error, rng);
    }

    RecoveryReport run_trial(const StateVector &input, const ErrorSpec &error, Rng &rng) const {
        RecoveryReport report{Syndrome{BitVec(group_.num_generators())}, {}, {}, 0, false, false, {}};
        StateVector corrupted(spec_.n);
        if (const auto *pe = std::get_if<PauliError>(&error)) {
            corrupted = oracle::apply_pauli(pe->op, input);
        } else if (const auto *me = std::get_if<MatrixError>(&error)) {
            corrupted = oracle::apply_single_qubit(me->matrix, me->qubit, input);
        } else {
            PauliOperator e = sample_depolarizing(std::get<Depolarizing>(error).p, rng);
            report.sampled_error = e;
            corrupted = oracle::apply_pauli(e, input);
        }
        if (corrupted.norm() < 1e-300) {
            report.note = "error annihilated the state";
            return report;
        }
        Measurement m = measure_syndrome(corrupted, group_, rng);
        report.syndrome = m.syndrome;
        StateVector output = m.state;
        if (auto correction = table_.lookup(m.syndrome)) {
            report.matched = true;
            output = oracle::apply_pauli(*correction, output);
            report.correction = std::move(correction);
        } else {
            report.note = "syndrome " + m.syndrome.str() + " has no tabulated correction";
        }
        report.fidelity = std::abs(oracle::inner(input, output));
        report.success = report.matched && report.fidelity >= 1.0 - kSuccessTolerance;
        return report;
    }

   private:
    CodeSpec spec_;
    StabilizerGroup group_;
    SyndromeTable table_;
    std::vector<StateVector> basis_;
};

/// Free-function form of Simulator::run_trial for one-off use.
inline RecoveryReport run_trial(const CodeSpec &spec, const ErrorSpec &error, Rng &rng) {
    return Simulator(spec).run_trial(error, rng);
}

/// Every error of weight 1..t on every logical basis state.
struct Exhaustive {};
using NoiseModel = std::variant<Exhaustive, ErrorSpec>;

inline Complex parse_complex(std::string_view text) {
    std::string s(text);
    auto to_double = [&](const std::string &part) {
        if (part.empty() || part == "+") {
            return 1.0;
        }
        if (part == "-") {
            return -1.0;
        }
        char *end = nullptr;
        double value = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size()) {
            throw std::invalid_argument("not a number: '" + part + "' in '" + s + "'");
        }
        return value;
    };
    if (s.empty()) {
        throw std::invalid_argument("empty matrix entry");
    }
    if (s.back() != 'i' && s.back() != 'j') {
        return {to_double(s), 0.0};
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        return {0.0, to_double(s)};
    }
    return {to_double(s.substr(0, split)), to_double(s.substr(split))};
}

/// Full Pauli string ("+IXZ...") or sparse product such as "X1Z2".
inline PauliOperator parse_error_operator(std::string_view text, std::size_t num_qubits) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        body.remove_prefix(1);
    }
    if (body.size() == num_qubits && body.find_first_not_of("IXYZ") == std::string_view::npos) {
        return PauliOperator::parse(text);
    }
    PauliOperator out = PauliOperator::identity(num_qubits);
    bool negative = !text.empty() && text.front() == '-';
    std::size_t pos = 0;
    while (pos < body.size()) {
        Letter letter = letter_from_char(body[pos++]);
        std::size_t start = pos;
        while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
            pos++;
        }
        if (start == pos) {
            throw std::invalid_argument("expected a qubit index after the letter in '" + std::string(text) + "'");
        }
        std::size_t qubit = std::stoul(std::string(body.substr(start, pos - start)));
        out = multiply(out, PauliOperator::single(num_qubits, qubit, letter));
    }
    return negative ? -out : out;
}

/// exhaustive | pauli:STR | matrix:a,b,c,d@i | depolarizing:p
inline NoiseModel parse_model(std::string_view text, std::size_t num_qubits) {
    auto colon = text.find(':');
    std::string_view kind = text.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (kind == "exhaustive" && colon == std::string_view::npos) {
        return Exhaustive{};
    }
    if (kind == "pauli") {
        return ErrorSpec{PauliError{parse_error_operator(arg, num_qubits)}};
    }
    if (kind == "depolarizing") {
        double p = parse_complex(arg).real();
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
        }
        return ErrorSpec{Depolarizing{p}};
    }
    if (kind == "matrix") {
        auto at = arg.rfind('@');
        if (at == std::string_view::npos) {
            throw std::invalid_argument("matrix model needs '@qubit'");
        }
        std::string_view entries = arg.substr(0, at);
        Matrix2 m{};
        std::size_t filled = 0;
        while (true) {
            auto comma = entries.find(',');
            if (filled == 4) {
                throw std::invalid_argument("matrix model takes exactly four entries");
            }
            m[filled++] = parse_complex(entries.substr(0, comma));
            if (comma == std::string_view::npos) {
                break;
            }
            entries.remove_prefix(comma + 1);
        }
        if (filled != 4) {
            throw std::invalid_argument("matrix model takes exactly four entries");
        }
        std::size_t qubit = std::stoul(std::string(arg.substr(at + 1)));
        if (qubit < 1 || qubit > num_qubits) {
            throw std::out_of_range("matrix model qubit out of range");
        }
        return ErrorSpec{MatrixError{m, qubit}};
    }
    throw std::invalid_argument("unknown noise model '" + std::string(text) + "'");
}

struct CampaignStats {
    std::string model;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t unmatched = 0;
    double success_rate = 0;
    double min_fidelity = 1;
    std::map<std::string, std::size_t> syndrome_histogram;

    nlohmann::json to_json() const {
        nlohmann::json out;
        out["model"] = model;
        out["seed"] = seed;
        out["trials"] = trials;
        out["successes"] = successes;
        out["unmatched"] = unmatched;
        out["success_rate"] = success_rate;
        out["min_fidelity"] = min_fidelity;
        out["syndrome_histogram"] = syndrome_histogram;
        return out;
    }
};

/// Trial i uses Rng(seed).stream(i); the statistics depend on nothing else.
/// The exhaustive model ignores `trials` and runs every (error, basis state) pair.
inline CampaignStats run_campaign(
    const Simulator &sim, const NoiseModel &model, std::size_t trials, std::uint64_t seed,
    std::string model_name = {}) {
    CampaignStats stats;
    stats.model = std::move(model_name);
    stats.seed = seed;
    Rng master(seed);
    auto record = [&](const RecoveryReport &r) {
        stats.trials++;
        stats.successes += r.success ? 1 : 0;
        stats.unmatched += r.matched ? 0 : 1;
        stats.min_fidelity = std::min(stats.min_fidelity, r.fidelity);
        stats.syndrome_histogram[r.syndrome.str()]++;
    };
    if (std::holds_alternative<Exhaustive>(model)) {
        std::size_t n = sim.group().num_qubits();
        std::vector<PauliOperator> errors;
        for_each_error_up_to_weight(n, sim.table().max_weight(), [&](const SparseError &e) {
            if (e.weight() > 0) {
                errors.push_back(e.to_pauli(n));
            }
            return true;
        });
        std::uint64_t index = 0;
        for (const auto &e : errors) {
            for (std::size_t i = 0; i < sim.num_logical(); i++) {
                Rng rng = master.stream(index++);
                record(sim.run_trial(sim.code_basis()[i], PauliError{e}, rng));
            }
        }
    } else {
        const ErrorSpec &error = std::get<ErrorSpec>(model);
        for (std::uint64_t i = 0; i < trials; i++) {
            Rng rng = master.stream(i);
            record(sim.run_trial(error, rng));
        }
    }
    stats.success_rate = stats.trials ? static_cast<double>(stats.successes) / static_cast<double>(stats.trials) : 0;
    return stats;
}

}  // namespace stabforge::sim
