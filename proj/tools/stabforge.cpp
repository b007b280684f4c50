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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabforge/bounds.hpp"
#include "stabforge/code_spec.hpp"
#include "stabforge/codewords.hpp"
#include "stabforge/ecc_sim.hpp"
#include "stabforge/family.hpp"
#include "stabforge/oracle.hpp"
#include "stabforge/stabilizer.hpp"

using json = nlohmann::json;
using namespace stabforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Beyond this j the seed list alone is k * n characters (~16 MB at j = 12).
constexpr std::size_t kMaxEmitJ = 12;
constexpr std::size_t kMaxListedQubits = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string pad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rpad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string k_text(std::int64_t k) {
    return k == bounds::kNoCode ? "-" : std::to_string(k);
}

CodeSpec load_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    try {
        return read_code_spec(in);
    } catch (const CodeSpecFormatError &e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string kind_name(ValidationError::Kind kind) {
    switch (kind) {
        case ValidationError::Kind::QubitCountMismatch:
            return "QubitCountMismatch";
        case ValidationError::Kind::NotAbelian:
            return "NotAbelian";
        case ValidationError::Kind::SquaresToMinusOne:
            return "SquaresToMinusOne";
        case ValidationError::Kind::DependentGenerators:
            return "DependentGenerators";
        case ValidationError::Kind::MinusIdentityInGroup:
            return "MinusIdentityInGroup";
        case ValidationError::Kind::TooManyGenerators:
            return "TooManyGenerators";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- family

void print_number_table(std::ostream &out, const family::NumberAssignment &numbers, bool heading = true) {
    std::size_t w = numbers.width();
    std::size_t iw = std::to_string(numbers.num_qubits()).size();
    if (heading) {
        out << "single-qubit error syndromes\n";
    }
    std::size_t cw = std::max<std::size_t>(w, 6);
    out << "  " << rpad("i", iw) << "  " << pad("f(X_i)", cw) << "  " << pad("f(Z_i)", cw) << "  f(Y_i)\n";
    for (std::size_t i = 1; i <= numbers.num_qubits(); i++) {
        out << "  " << rpad(std::to_string(i), iw) << "  " << pad(numbers.str(numbers.fx[i - 1]), cw) << "  "
            << pad(numbers.str(numbers.fz[i - 1]), cw) << "  " << numbers.str(numbers.fy[i - 1]) << "\n";
    }
}

void print_generators(std::ostream &out, const CodeSpec &spec) {
    out << "generators\n";
    for (std::size_t r = 0; r < spec.generators.size(); r++) {
        out << "  " << pad("M_" + std::to_string(r + 1), 5) << " " << spec.generators[r].str() << "\n";
    }
}

void print_seeds(std::ostream &out, const CodeSpec &spec) {
    out << "seed generators\n";
    for (std::size_t t = 0; t < spec.seed_generators.size(); t++) {
        out << "  " << pad("N_" + std::to_string(t + 1), 5) << " " << spec.seed_generators[t].to_pauli(spec.n).str()
            << "\n";
    }
}

std::string term_text(const BitVec &label, int sign, bool first) {
    std::string out = first ? (sign < 0 ? "-" : "+") : (sign < 0 ? " - " : " + ");
    return out + "|" + label.str() + ">";
}

void print_codewords(std::ostream &out, const family::FamilyCode &code) {
    const auto &c = code.classification;
    const auto &seeds = code.spec.seed_generators;
    std::size_t k = seeds.size();
    out << "code words (bit t-1 of i selects N_t)\n";
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); i++) {
        BitVec seed(code.spec.n);
        for (std::size_t t : logical_word(i, k).ones()) {
            seed ^= seeds[t].x_bits(code.spec.n);
        }
        out << "  psi_" << i << " =";
        bool first = true;
        for (const auto &[label, sign] : ordered_terms(c, seed)) {
            out << (first ? " " : "") << term_text(label, sign, first);
            first = false;
        }
        out << "\n";
    }
}

json codewords_json(const family::FamilyCode &code) {
    const auto &seeds = code.spec.seed_generators;
    std::size_t k = seeds.size();
    json words = json::array();
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); i++) {
        BitVec seed(code.spec.n);
        for (std::size_t t : logical_word(i, k).ones()) {
            seed ^= seeds[t].x_bits(code.spec.n);
        }
        json terms = json::array();
        for (const auto &[label, sign] : ordered_terms(code.classification, seed)) {
            terms.push_back({{"label", label.str()}, {"sign", sign}});
        }
        words.push_back({{"index", i}, {"terms", terms}});
    }
    return words;
}

json numbers_json(const family::NumberAssignment &numbers) {
    json rows = json::array();
    for (std::size_t i = 1; i <= numbers.num_qubits(); i++) {
        rows.push_back({{"i", i},
                        {"X", numbers.str(numbers.fx[i - 1])},
                        {"Z", numbers.str(numbers.fz[i - 1])},
                        {"Y", numbers.str(numbers.fy[i - 1])}});
    }
    return rows;
}

int cmd_family(std::size_t j, const std::string &emit, const std::string &out_path, bool as_json) {
    if (j < family::kMinJ || j > family::kMaxJ) {
        throw UsageError("--j must lie in [" + std::to_string(family::kMinJ) + ", " + std::to_string(family::kMaxJ) +
                         "], got " + std::to_string(j));
    }
    bool emit_codewords = false;
    if (emit == "codewords") {
        emit_codewords = true;
    } else if (!emit.empty()) {
        throw UsageError("--emit accepts only 'codewords'");
    }
    if (emit_codewords && j > 3) {
        throw UsageError("--emit codewords is available for j = 3 only (2^k code words of 2^b terms each)");
    }
    if ((!out_path.empty() || as_json) && j > kMaxEmitJ) {
        throw UsageError("writing the code spec is limited to j <= " + std::to_string(kMaxEmitJ) +
                         " (the seed list has k * n characters)");
    }

    family::FamilyCode code = family::build(j);
    auto report = check_correctability(code.group, 1);
    bool ok = report.pass && static_cast<std::int64_t>(code.spec.k) == bounds::qhb_max_k(code.spec.n, 1);

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw UsageError("cannot write " + out_path);
        }
        write_code_spec(file, code.spec);
    }

    if (as_json) {
        json doc = json::parse(to_json_string(code.spec));
        json summary;
        summary["spec"] = doc;
        summary["validation"] = {{"pass", ok},
                                 {"distinct_syndromes", report.distinct_syndromes},
                                 {"qhb_max_k", bounds::qhb_max_k(code.spec.n, 1)}};
        summary["syndromes"] = numbers_json(code.numbers);
        if (emit_codewords) {
            summary["codewords"] = codewords_json(code);
        }
        std::cout << summary.dump(2) << "\n";
        return ok ? kExitOk : kExitFail;
    }

    std::ostream &out = std::cout;
    out << "code [[" << code.spec.n << "," << code.spec.k << "]] j=" << j << " construction=" << code.spec.construction
        << "\n";
    out << "validation " << (ok ? "pass" : "FAIL") << ": " << code.group.num_generators()
        << " commuting generators, " << report.distinct_syndromes << " distinct syndromes for weight <= 1, k = "
        << bounds::qhb_max_k(code.spec.n, 1) << " saturates the Hamming bound\n\n";
    print_number_table(out, code.numbers);
    out << "\n";
    if (code.spec.n <= kMaxListedQubits) {
        print_generators(out, code.spec);
        out << "\n";
        print_seeds(out, code.spec);
    } else {
        out << "generators and seed generators omitted for n > " << kMaxListedQubits
            << (j <= kMaxEmitJ ? "; use --out" : "") << "\n";
    }
    if (emit_codewords) {
        out << "\n";
        print_codewords(out, code);
    }
    return ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- verify

json error_json(const PauliOperator &p) {
    return p.str();
}

int cmd_verify(const std::string &path, std::size_t t, bool use_oracle, bool as_json) {
    CodeSpec spec = load_spec(path);
    json doc;
    doc["n"] = spec.n;
    doc["k"] = spec.k;
    doc["t"] = t;
    std::vector<std::string> lines;
    bool pass = true;

    std::optional<StabilizerGroup> group;
    try {
        group = StabilizerGroup::validate(spec.n, spec.generators, DependencePolicy::Reduce);
        doc["validation"] = {{"pass", true}, {"warnings", group->warnings()}};
        lines.push_back("validation: pass (" + std::to_string(group->num_generators()) + " independent generators)");
        for (const auto &w : group->warnings()) {
            lines.push_back("  warning: " + w);
        }
    } catch (const ValidationError &e) {
        pass = false;
        doc["validation"] = {{"pass", false}, {"kind", kind_name(e.kind())}, {"witness", e.witness()},
                             {"message", e.what()}};
        lines.push_back("validation: FAIL " + kind_name(e.kind()) + ": " + e.what());
    }

    if (group) {
        std::size_t a = group->num_generators();
        bool seeds_ok = spec.k + a == spec.n;
        std::string seed_problem = seeds_ok ? "" : "k + a != n";
        if (seeds_ok) {
            try {
                GeneratorClassification c = classify_generators(*group);
                gf2::XorBasis span(spec.n, 0);
                for (const auto &g : c.type1) {
                    span.insert(g.xs(), 0);
                }
                for (const auto &s : spec.seed_generators) {
                    PauliOperator p = s.to_pauli(spec.n);
                    for (const auto &g : c.type2) {
                        if (!commutes(p, g)) {
                            seeds_ok = false;
                            seed_problem = "seed " + p.str() + " anticommutes with " + g.str();
                        }
                    }
                    if (seeds_ok && span.insert(s.x_bits(spec.n), 0)) {
                        seeds_ok = false;
                        seed_problem = "seed " + p.str() + " is equivalent to an earlier seed";
                    }
                }
            } catch (const ClassificationError &e) {
                seeds_ok = false;
                seed_problem = e.what();
            }
        }
        pass = pass && seeds_ok;
        doc["seeds"] = {{"pass", seeds_ok}};
        if (!seeds_ok) {
            doc["seeds"]["message"] = seed_problem;
        }
        lines.push_back(seeds_ok ? "seed generators: pass" : "seed generators: FAIL " + seed_problem);

        auto report = check_correctability(*group, t);
        pass = pass && report.pass;
        json corr = {{"pass", report.pass},
                     {"errors_checked", report.errors_checked},
                     {"distinct_syndromes", report.distinct_syndromes}};
        std::string line = "correctability t=" + std::to_string(t) + ": ";
        if (report.pass) {
            line += "pass (" + std::to_string(report.distinct_syndromes) + " distinct syndromes)";
        } else {
            corr["witness"] = {error_json(report.collision->first), error_json(report.collision->second)};
            corr["syndrome"] = report.collision_syndrome->str();
            line += "FAIL " + report.collision->first.str() + " and " + report.collision->second.str() +
                    " share syndrome " + report.collision_syndrome->str();
        }
        doc["correctability"] = corr;
        lines.push_back(line);

        if (use_oracle) {
            if (spec.n > oracle::kMaxQubits) {
                doc["oracle"] = {{"skipped", true}};
                lines.push_back("oracle: skipped (n > " + std::to_string(oracle::kMaxQubits) + ")");
            } else if (!seeds_ok) {
                doc["oracle"] = {{"skipped", true}};
                lines.push_back("oracle: skipped (invalid seed generators)");
            } else {
                auto o = oracle::verify_code(spec, t);
                pass = pass && o.pass;
                json oj = {{"pass", o.pass},
                           {"vectors", o.num_vectors},
                           {"rank", o.rank},
                           {"stabilized", o.stabilized},
                           {"basis_orthonormal", o.basis_orthonormal},
                           {"block_orthogonal", o.block_orthogonal},
                           {"full_rank", o.full_rank}};
                if (o.witness) {
                    oj["witness"] = {{{"error", o.witness->first.error.str()}, {"index", o.witness->first.logical_index}},
                                     {{"error", o.witness->second.error.str()}, {"index", o.witness->second.logical_index}}};
                }
                doc["oracle"] = oj;
                std::string ol = "oracle: " + std::string(o.pass ? "pass" : "FAIL") + " (" +
                                 std::to_string(o.num_vectors) + " error images, rank " + std::to_string(o.rank) + ")";
                for (const auto &f : o.failures) {
                    ol += "\n  " + f;
                }
                lines.push_back(ol);
            }
        }
    }
    doc["pass"] = pass;
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto &l : lines) {
            std::cout << l << "\n";
        }
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- bounds

int cmd_bound(std::optional<std::uint64_t> n, std::uint64_t max_n, std::uint64_t t, bool as_json) {
    std::vector<bounds::BoundRow> rows;
    if (n) {
        if (*n < 1) {
            throw UsageError("--n must be at least 1");
        }
        rows.push_back({*n, t, bounds::qhb_max_k(*n, t)});
    } else {
        if (max_n < 1) {
            throw UsageError("--max-n must be at least 1");
        }
        rows = bounds::qhb_table(max_n, t);
    }
    if (as_json) {
        json out = json::array();
        for (const auto &r : rows) {
            out.push_back({{"n", r.n}, {"t", r.t}, {"max_k", r.max_k}});
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << rpad("n", 5) << "  " << rpad("t", 3) << "  " << rpad("max k", 6) << "\n";
    for (const auto &r : rows) {
        std::cout << rpad(std::to_string(r.n), 5) << "  " << rpad(std::to_string(r.t), 3) << "  "
                  << rpad(k_text(r.max_k), 6) << "\n";
    }
    return kExitOk;
}

int cmd_degenerate(std::uint64_t n, std::optional<std::uint64_t> l, bool as_json) {
    if (n < 2) {
        throw UsageError("--n must be at least 2");
    }
    if (l && *l > n - 1) {
        throw UsageError("--l must lie in [0, n-1]");
    }
    std::vector<std::uint64_t> ls;
    if (l) {
        ls.push_back(*l);
    } else {
        for (std::uint64_t x = 0; x < n; x++) {
            ls.push_back(x);
        }
    }
    auto check = bounds::degenerate_never_beats_qhb(n);
    if (as_json) {
        json rows = json::array();
        for (auto x : ls) {
            rows.push_back({{"n", n}, {"l", x}, {"max_k", bounds::degenerate_max_k(n, x)}});
        }
        json out = {{"rows", rows},
                    {"hamming_max_k", check.hamming_k},
                    {"degenerate_max_k", check.degenerate_k},
                    {"witness_l", check.witness_l},
                    {"never_beats_hamming", check.holds}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << rpad("n", 5) << "  " << rpad("l", 5) << "  " << rpad("max k", 6) << "\n";
    for (auto x : ls) {
        std::cout << rpad(std::to_string(n), 5) << "  " << rpad(std::to_string(x), 5) << "  "
                  << rpad(k_text(bounds::degenerate_max_k(n, x)), 6) << "\n";
    }
    std::cout << "best over l: k = " << k_text(check.degenerate_k) << " at l = " << check.witness_l
              << "; Hamming bound (t=1): k = " << k_text(check.hamming_k) << "; degenerate codes "
              << (check.holds ? "never beat" : "can beat") << " the Hamming bound at n = " << n << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- syndrome

int cmd_syndrome(const std::string &path, const std::string &error_text, bool as_json) {
    CodeSpec spec = load_spec(path);
    PauliOperator e = PauliOperator::identity(spec.n);
    try {
        e = sim::parse_error_operator(error_text, spec.n);
    } catch (const std::exception &ex) {
        throw UsageError(std::string("bad error operator: ") + ex.what());
    }
    StabilizerGroup group = StabilizerGroup::validate(spec.n, spec.generators);
    Syndrome s = syndrome(group, e);
    std::optional<PauliOperator> correction;
    try {
        correction = sim::build_syndrome_table(group, 1).lookup(s);
    } catch (const sim::DegenerateSyndromes &) {
    }
    if (as_json) {
        json out = {{"error", e.str()}, {"syndrome", s.str()}};
        out["correction"] = correction ? json(correction->str()) : json(nullptr);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "error      " << e.str() << "\n";
    std::cout << "syndrome   " << s.str() << "\n";
    std::cout << "correction " << (correction ? correction->str() : "none (outside the weight-1 table)") << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const std::string &path, const std::string &model_text, std::size_t trials, std::uint64_t seed,
                 bool as_json) {
    CodeSpec spec = load_spec(path);
    if (spec.n > oracle::kMaxQubits) {
        throw UsageError("simulation needs n <= " + std::to_string(oracle::kMaxQubits));
    }
    sim::NoiseModel model;
    try {
        model = sim::parse_model(model_text, spec.n);
    } catch (const std::exception &ex) {
        throw UsageError(std::string("bad --model: ") + ex.what());
    }
    std::optional<sim::Simulator> simulator;
    try {
        simulator.emplace(spec, 1);
    } catch (const std::exception &ex) {
        std::cerr << "error: code cannot be simulated: " << ex.what() << "\n";
        return kExitFail;
    }
    auto stats = sim::run_campaign(*simulator, model, trials, seed, model_text);
    if (as_json) {
        std::cout << stats.to_json().dump(2) << "\n";
        return kExitOk;
    }
    std::ostringstream rate;
    rate << std::setprecision(6) << stats.success_rate;
    std::ostringstream fid;
    fid << std::setprecision(12) << stats.min_fidelity;
    std::cout << "model        " << stats.model << "\n";
    std::cout << "seed         " << stats.seed << "\n";
    std::cout << "trials       " << stats.trials << "\n";
    std::cout << "successes    " << stats.successes << "\n";
    std::cout << "unmatched    " << stats.unmatched << "\n";
    std::cout << "success rate " << rate.str() << "\n";
    std::cout << "min fidelity " << fid.str() << "\n";
    std::cout << "syndromes\n";
    for (const auto &[s, count] : stats.syndrome_histogram) {
        std::cout << "  " << s << "  " << count << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- tables

int cmd_tables(bool as_json) {
    family::FamilyCode code = family::build(3);
    auto rows = bounds::qhb_table(13, 1);
    if (as_json) {
        json out;
        out["syndromes"] = numbers_json(code.numbers);
        json gens = json::array();
        for (const auto &g : code.spec.generators) {
            gens.push_back(g.str());
        }
        json seeds = json::array();
        for (const auto &s : code.spec.seed_generators) {
            seeds.push_back(s.to_pauli(8).str());
        }
        out["generators"] = gens;
        out["seed_generators"] = seeds;
        json bound = json::array();
        for (std::uint64_t n = 5; n <= 13; n++) {
            bound.push_back({{"n", n}, {"t", 1}, {"max_k", rows[n - 1].max_k}});
        }
        out["hamming_bound"] = bound;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "== single-qubit error syndromes, [[8,3]] code ==\n";
    print_number_table(std::cout, code.numbers, false);
    std::cout << "\n== stabilizer and seed generators, [[8,3]] code ==\n";
    print_generators(std::cout, code.spec);
    print_seeds(std::cout, code.spec);
    std::cout << "\n== largest k allowed by the quantum Hamming bound, t = 1 ==\n";
    std::cout << "  n     ";
    for (std::uint64_t n = 5; n <= 13; n++) {
        std::cout << rpad(std::to_string(n), 3);
    }
    std::cout << "\n  max k ";
    for (std::uint64_t n = 5; n <= 13; n++) {
        std::cout << rpad(k_text(rows[n - 1].max_k), 3);
    }
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"stabforge: stabilizer codes that saturate the quantum Hamming bound"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    bool as_json = false;

    auto *family_cmd = app.add_subcommand("family", "Build the 2^j-qubit single-error-correcting code");
    std::size_t j = 3;
    std::string emit;
    std::string out_path;
    family_cmd->add_option("--j", j, "Exponent: n = 2^j qubits")->required();
    family_cmd->add_option("--emit", emit, "Also list 'codewords' (j = 3 only)");
    family_cmd->add_option("--out", out_path, "Write the code spec JSON to this file");
    family_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *verify_cmd = app.add_subcommand("verify", "Check a code spec file");
    std::string code_path;
    std::size_t t = 1;
    bool use_oracle = false;
    verify_cmd->add_option("code", code_path, "Code spec JSON")->required();
    verify_cmd->add_option("--t", t, "Number of correctable errors");
    verify_cmd->add_flag("--oracle", use_oracle, "Also run the dense state-vector checks (n <= 12)");
    verify_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *bound_cmd = app.add_subcommand("bound", "Largest k allowed by the quantum Hamming bound");
    std::optional<std::uint64_t> bound_n;
    std::uint64_t max_n = 13;
    std::uint64_t bound_t = 1;
    bound_cmd->add_option("--n", bound_n, "Single code length");
    bound_cmd->add_option("--max-n", max_n, "Tabulate n = 1..max-n");
    bound_cmd->add_option("--t", bound_t, "Number of correctable errors");
    bound_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *degenerate_cmd = app.add_subcommand("degenerate-bound", "Bound on k with l degeneracy conditions (t = 1)");
    std::uint64_t deg_n = 0;
    std::optional<std::uint64_t> deg_l;
    degenerate_cmd->add_option("--n", deg_n, "Code length")->required();
    degenerate_cmd->add_option("--l", deg_l, "Number of degeneracy conditions (default: all)");
    degenerate_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *syndrome_cmd = app.add_subcommand("syndrome", "Syndrome of an error");
    std::string error_text;
    syndrome_cmd->add_option("code", code_path, "Code spec JSON")->required();
    syndrome_cmd->add_option("error", error_text, "Pauli string (+XIZ...) or sparse product (X1Z2)")->required();
    syndrome_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *simulate_cmd = app.add_subcommand("simulate", "Encode, corrupt, measure and correct");
    std::string model_text = "exhaustive";
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    simulate_cmd->add_option("code", code_path, "Code spec JSON")->required();
    simulate_cmd->add_option("--model", model_text, "exhaustive | pauli:STR | matrix:a,b,c,d@i | depolarizing:p");
    simulate_cmd->add_option("--trials", trials, "Number of trials (ignored by exhaustive)");
    simulate_cmd->add_option("--seed", seed, "Master seed")->envname("STABFORGE_SEED");
    simulate_cmd->add_flag("--json", as_json, "Machine-readable output");

    auto *tables_cmd = app.add_subcommand("tables", "Print the syndrome, generator and bound tables");
    tables_cmd->add_flag("--json", as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*family_cmd) {
            return cmd_family(j, emit, out_path, as_json);
        }
        if (*verify_cmd) {
            return cmd_verify(code_path, t, use_oracle, as_json);
        }
        if (*bound_cmd) {
            return cmd_bound(bound_n, max_n, bound_t, as_json);
        }
        if (*degenerate_cmd) {
            return cmd_degenerate(deg_n, deg_l, as_json);
        }
        if (*syndrome_cmd) {
            return cmd_syndrome(code_path, error_text, as_json);
        }
        if (*simulate_cmd) {
            return cmd_simulate(code_path, model_text, trials, seed, as_json);
        }
        if (*tables_cmd) {
            return cmd_tables(as_json);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
