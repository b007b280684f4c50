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
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stabforge::bounds {

using BigInt = boost::multiprecision::cpp_int;

/// Returned when not even k = 0 is admissible.
inline constexpr std::int64_t kNoCode = -1;

inline BigInt binomial(std::uint64_t n, std::uint64_t l) {
    if (l > n) {
        return 0;
    }
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= l; i++) {
        out *= n - l + i;
        out /= i;
    }
    return out;
}

/// Number of Pauli errors of weight at most t on n qubits (identity included).
inline BigInt error_count(std::uint64_t n, std::uint64_t t) {
    BigInt total = 0;
    BigInt pow3 = 1;
    for (std::uint64_t l = 0; l <= t && l <= n; l++) {
        total += pow3 * binomial(n, l);
        pow3 *= 3;
    }
    return total;
}

/// Largest k with count * 2^k <= 2^budget_log2, or kNoCode.
inline std::int64_t max_k_fitting(const BigInt &count, std::uint64_t budget_log2) {
    if (count <= 0) {
        throw std::invalid_argument("count must be positive");
    }
    // ceil(log2(count)) == bit length of (count - 1), for count >= 1.
    BigInt below = count - 1;
    std::uint64_t ceil_log2 = below == 0 ? 0 : static_cast<std::uint64_t>(boost::multiprecision::msb(below)) + 1;
    if (ceil_log2 > budget_log2) {
        return kNoCode;
    }
    return static_cast<std::int64_t>(budget_log2 - ceil_log2);
}

/// Largest k with 2^k * sum_{l<=t} 3^l C(n,l) <= 2^n.
inline std::int64_t qhb_max_k(std::uint64_t n, std::uint64_t t) {
    return max_k_fitting(error_count(n, t), n);
}

struct BoundRow {
    std::uint64_t n;
    std::uint64_t t;
    std::int64_t max_k;
};

inline std::vector<BoundRow> qhb_table(std::uint64_t max_n, std::uint64_t t) {
    if (max_n < 1) {
        throw std::invalid_argument("qhb_table: max_n must be at least 1");
    }
    std::vector<BoundRow> rows;
    for (std::uint64_t n = 1; n <= max_n; n++) {
        rows.push_back({n, t, qhb_max_k(n, t)});
    }
    return rows;
}

/// Binary entropy in bits, with H(0) = 0.
inline double binary_entropy(double x) {
    auto term = [](double p) { return p > 0 ? -p * std::log2(p) : 0.0; };
    return term(x) + term(1.0 - x);
}

/// Asymptotic rate limit 1 - x log2(3) - H(x) for x = t/n.
inline double rate_bound(double t_over_n) {
    if (!(t_over_n >= 0.0 && t_over_n < 0.5)) {
        throw std::domain_error("rate_bound: t/n must lie in [0, 1/2)");
    }
    return 1.0 - t_over_n * std::log2(3.0) - binary_entropy(t_over_n);
}

/// Bound on k for a single-error-correcting code with l degeneracy conditions,
/// each equating two one-qubit errors.
///
///   l == 0          : the quantum Hamming bound for t = 1
///   l == n - 1      : 0
///   2l <= n         : [1 + 3(n - 2l)] 2^k <= 2^(n - l)
///   0 < l < n - 1   : k <= n - l - 2
/// The minimum of every applicable case is returned.
inline std::int64_t degenerate_max_k(std::uint64_t n, std::uint64_t l) {
    if (n == 0 || l > n - 1) {
        throw std::out_of_range(
            "degenerate_max_k: need 0 <= l <= n-1 (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
    }
    if (l == 0) {
        return qhb_max_k(n, 1);
    }
    if (l == n - 1) {
        return 0;
    }
    std::int64_t best = static_cast<std::int64_t>(n - l) - 2;
    if (2 * l <= n) {
        std::int64_t counted = max_k_fitting(BigInt(1) + 3 * BigInt(n - 2 * l), n - l);
        best = std::min(best, counted);
    }
    return std::max(best, kNoCode);
}

struct DegenerateCheck {
    bool holds;
    std::uint64_t witness_l;  // l attaining the maximum degenerate bound
    std::int64_t degenerate_k;
    std::int64_t hamming_k;
};

inline DegenerateCheck degenerate_never_beats_qhb(std::uint64_t n) {
    if (n < 2) {
        throw std::out_of_range("degenerate_never_beats_qhb: n must be at least 2");
    }
    DegenerateCheck out{true, 0, degenerate_max_k(n, 0), qhb_max_k(n, 1)};
    for (std::uint64_t l = 1; l <= n - 1; l++) {
        std::int64_t k = degenerate_max_k(n, l);
        if (k > out.degenerate_k) {
            out.degenerate_k = k;
            out.witness_l = l;
        }
    }
    out.holds = out.degenerate_k <= out.hamming_k;
    return out;
}

}  // namespace stabforge::bounds
