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
 * Dense state-vector ground truth for small codes (n <= 12).
 *
 * Basis index convention: qubit 1 is the most significant bit, so the index of
 * a label equals the label read as a binary number and ascending labels are
 * ascending indices.
 */

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabforge/code_spec.hpp"
#include "stabforge/codewords.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/stabilizer.hpp"

namespace stabforge::oracle {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr double kTolerance = 1e-10;

inline const Matrix2 kI = {1.0, 0.0, 0.0, 1.0};
inline const Matrix2 kX = {0.0, 1.0, 1.0, 0.0};
inline const Matrix2 kY = {0.0, -1.0, 1.0, 0.0};
inline const Matrix2 kZ = {1.0, 0.0, 0.0, -1.0};

class TooManyQubits : public std::length_error {
   public:
    using std::length_error::length_error;
};

inline void require_small(std::size_t n) {
    if (n > kMaxQubits) {
        throw TooManyQubits(
            "dense simulation is capped at " + std::to_string(kMaxQubits) + " qubits, got " + std::to_string(n));
    }
}

class StateVector {
   public:
    explicit StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
        require_small(num_qubits);
        amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    }

    static StateVector basis(std::size_t num_qubits, std::uint64_t index) {
        StateVector out(num_qubits);
        out.amplitudes_.at(index) = 1.0;
        return out;
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t dimension() const {
        return amplitudes_.size();
    }
    const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }
    std::vector<Complex> &amplitudes() {
        return amplitudes_;
    }
    Complex operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    Complex &operator[](std::size_t index) {
        return amplitudes_[index];
    }

    double norm_squared() const {
        double total = 0;
        for (const auto &a : amplitudes_) {
            total += std::norm(a);
        }
        return total;
    }
    double norm() const {
        return std::sqrt(norm_squared());
    }

    /// Scales to unit norm; zero vectors are left untouched.
    StateVector normalized() const {
        StateVector out = *this;
        double nrm = norm();
        if (nrm > 0) {
            for (auto &a : out.amplitudes_) {
                a /= nrm;
            }
        }
        return out;
    }

    StateVector &operator+=(const StateVector &other) {
        check_same(other);
        for (std::size_t i = 0; i < amplitudes_.size(); i++) {
            amplitudes_[i] += other.amplitudes_[i];
        }
        return *this;
    }
    StateVector &operator*=(Complex factor) {
        for (auto &a : amplitudes_) {
            a *= factor;
        }
        return *this;
    }
    friend StateVector operator+(StateVector a, const StateVector &b) {
        return a += b;
    }
    friend StateVector operator*(Complex factor, StateVector v) {
        return v *= factor;
    }

    void check_same(const StateVector &other) const {
        if (other.num_qubits_ != num_qubits_) {
            throw std::invalid_argument("state vectors have different qubit counts");
        }
    }

   private:
    std::size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// <a|b>
inline Complex inner(const StateVector &a, const StateVector &b) {
    a.check_same(b);
    Complex total = 0;
    for (std::size_t i = 0; i < a.dimension(); i++) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

inline std::uint64_t label_index(const BitVec &label) {
    std::size_t n = label.size();
    require_small(n);
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < n; q++) {
        if (label.get(q)) {
            index |= std::uint64_t{1} << (n - 1 - q);
        }
    }
    return index;
}

inline StateVector dense_from_formal(const FormalState &state) {
    StateVector out(state.num_qubits());
    double sum_sq = 0;
    for (const auto &[label, c] : state.terms()) {
        sum_sq += static_cast<double>(c) * static_cast<double>(c);
    }
    if (sum_sq == 0) {
        return out;
    }
    double scale = 1.0 / std::sqrt(sum_sq);
    for (const auto &[label, c] : state.terms()) {
        out[label_index(label)] = static_cast<double>(c) * scale;
    }
    return out;
}

inline StateVector apply_pauli(const PauliOperator &p, const StateVector &v) {
    std::size_t n = v.num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("apply_pauli: qubit count mismatch");
    }
    std::uint64_t xmask = label_index(p.xs());
    std::uint64_t zmask = label_index(p.zs());
    double sign = p.negative() ? -1.0 : 1.0;
    StateVector out(n);
    for (std::uint64_t idx = 0; idx < v.dimension(); idx++) {
        // X^x Z^z |b> = (-1)^{z.b} |b xor x>
        double s = (std::popcount(idx & zmask) & 1) ? -sign : sign;
        out[idx ^ xmask] += s * v[idx];
    }
    return out;
}

inline StateVector apply_single_qubit(const Matrix2 &m, std::size_t qubit, const StateVector &v) {
    std::size_t n = v.num_qubits();
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range("apply_single_qubit: qubit index out of range");
    }
    std::uint64_t bit = std::uint64_t{1} << (n - qubit);
    StateVector out(n);
    for (std::uint64_t idx = 0; idx < v.dimension(); idx++) {
        if (idx & bit) {
            continue;
        }
        Complex a0 = v[idx];
        Complex a1 = v[idx | bit];
        out[idx] = m[0] * a0 + m[1] * a1;
        out[idx | bit] = m[2] * a0 + m[3] * a1;
    }
    return out;
}

/// G(r, c) = <states[r] | states[c]>.
inline Eigen::MatrixXcd gram(const std::vector<StateVector> &states) {
    Eigen::MatrixXcd g(states.size(), states.size());
    if (states.empty()) {
        return g;
    }
    Eigen::MatrixXcd columns(states.front().dimension(), states.size());
    for (std::size_t c = 0; c < states.size(); c++) {
        states[c].check_same(states.front());
        for (std::size_t i = 0; i < states[c].dimension(); i++) {
            columns(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = states[c][i];
        }
    }
    g.noalias() = columns.adjoint() * columns;
    return g;
}

inline std::size_t numerical_rank(const std::vector<StateVector> &states, double tolerance = kTolerance) {
    if (states.empty()) {
        return 0;
    }
    Eigen::MatrixXcd columns(states.front().dimension(), states.size());
    for (std::size_t c = 0; c < states.size(); c++) {
        for (std::size_t i = 0; i < states[c].dimension(); i++) {
            columns(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = states[c][i];
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(columns);
    qr.setThreshold(tolerance);
    return static_cast<std::size_t>(qr.rank());
}

/// Dimension of the joint +1 eigenspace, as the trace of prod_r (I + M_r) / 2.
inline std::size_t joint_eigenspace_dimension(const StabilizerGroup &group) {
    std::size_t n = group.num_qubits();
    require_small(n);
    double trace = 0;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); idx++) {
        StateVector v = StateVector::basis(n, idx);
        for (const auto &m : group.generators()) {
            v = 0.5 * (v + apply_pauli(m, v));
        }
        trace += v[idx].real();
    }
    return static_cast<std::size_t>(std::llround(trace));
}

/// One vector E|psi_i> of the error-image collection.
struct ErrorImage {
    PauliOperator error;
    std::size_t logical_index;
    Syndrome syndrome;
};

struct OracleReport {
    bool pass = false;
    std::size_t num_qubits = 0;
    std::size_t num_logical = 0;
    std::size_t max_weight = 0;
    std::size_t num_vectors = 0;
    std::size_t rank = 0;
    bool basis_orthonormal = false;
    bool stabilized = false;
    bool block_orthogonal = false;
    bool full_rank = false;
    double max_forbidden_overlap = 0;
    std::vector<std::string> failures;
    std::optional<std::pair<ErrorImage, ErrorImage>> witness;
};

/// Dense verification of a code spec: every generator fixes every basis vector,
/// images E|psi_i> with different syndromes or logical indices are orthogonal,
/// and all images together are linearly independent.
inline OracleReport verify_code(const CodeSpec &spec, std::size_t max_weight) {
    require_small(spec.n);
    OracleReport report;
    report.num_qubits = spec.n;
    report.max_weight = max_weight;

    StabilizerGroup group = StabilizerGroup::validate(spec.n, spec.generators);
    GeneratorClassification classes = classify_generators(group);
    std::vector<FormalState> formal = stabforge::basis(classes, spec.seed_generators);
    std::vector<StateVector> code_basis;
    for (const auto &f : formal) {
        code_basis.push_back(dense_from_formal(f));
    }
    report.num_logical = code_basis.size();

    report.stabilized = true;
    for (std::size_t i = 0; i < code_basis.size(); i++) {
        if (code_basis[i].norm_squared() == 0) {
            report.stabilized = false;
            report.failures.push_back("basis state " + std::to_string(i) + " is zero");
            continue;
        }
        for (std::size_t r = 0; r < group.num_generators(); r++) {
            StateVector moved = apply_pauli(group.generators()[r], code_basis[i]);
            double dev = 0;
            for (std::size_t x = 0; x < moved.dimension(); x++) {
                dev = std::max(dev, std::abs(moved[x] - code_basis[i][x]));
            }
            if (dev > kTolerance) {
                report.stabilized = false;
                report.failures.push_back(
                    "generator M_" + std::to_string(r + 1) + " does not fix basis state " + std::to_string(i));
            }
        }
    }

    Eigen::MatrixXcd basis_gram = gram(code_basis);
    report.basis_orthonormal =
        (basis_gram - Eigen::MatrixXcd::Identity(basis_gram.rows(), basis_gram.cols())).cwiseAbs().maxCoeff() <=
        kTolerance;
    if (code_basis.empty()) {
        report.basis_orthonormal = false;
    }
    if (!report.basis_orthonormal) {
        report.failures.push_back("code basis is not orthonormal");
    }

    SyndromeColumns columns(group);
    std::vector<ErrorImage> labels;
    std::vector<StateVector> images;
    for_each_error_up_to_weight(spec.n, max_weight, [&](const SparseError &e) {
        PauliOperator p = e.to_pauli(spec.n);
        Syndrome s = columns.of(e);
        for (std::size_t i = 0; i < code_basis.size(); i++) {
            images.push_back(apply_pauli(p, code_basis[i]));
            labels.push_back(ErrorImage{p, i, s});
        }
        return true;
    });
    report.num_vectors = images.size();

    Eigen::MatrixXcd g = gram(images);
    report.block_orthogonal = true;
    for (std::size_t r = 0; r < images.size(); r++) {
        for (std::size_t c = r + 1; c < images.size(); c++) {
            bool must_vanish =
                labels[r].logical_index != labels[c].logical_index || labels[r].syndrome != labels[c].syndrome;
            double overlap = std::abs(g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
            if (must_vanish) {
                report.max_forbidden_overlap = std::max(report.max_forbidden_overlap, overlap);
                if (overlap > kTolerance && report.block_orthogonal) {
                    report.block_orthogonal = false;
                    report.witness.emplace(labels[r], labels[c]);
                    report.failures.push_back(
                        "images of " + labels[r].error.str() + " on psi_" + std::to_string(labels[r].logical_index) +
                        " and " + labels[c].error.str() + " on psi_" + std::to_string(labels[c].logical_index) +
                        " overlap");
                }
            }
        }
    }

    report.rank = numerical_rank(images);
    report.full_rank = report.rank == images.size();
    if (!report.full_rank) {
        report.failures.push_back(
            "error images span rank " + std::to_string(report.rank) + " < " + std::to_string(images.size()));
        if (!report.witness) {
            for (std::size_t r = 0; r < images.size() && !report.witness; r++) {
                for (std::size_t c = r + 1; c < images.size(); c++) {
                    double overlap = std::abs(g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
                    if (overlap > 1.0 - kTolerance) {
                        report.witness.emplace(labels[r], labels[c]);
                        break;
                    }
                }
            }
        }
    }
    report.pass = report.stabilized && report.basis_orthonormal && report.block_orthogonal && report.full_rank;
    return report;
}

}  // namespace stabforge::oracle
