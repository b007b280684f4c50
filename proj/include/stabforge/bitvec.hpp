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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stabforge {

/// Fixed-length packed bit vector over GF(2).
///
/// Position 0 is the "leftmost" bit: it is printed first by `str()` and is the
/// most significant position for ordering. Bits beyond `size()` in the last
/// word are always zero.
class BitVec {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t num_bits) : size_(num_bits), words_(num_words(num_bits), 0) {}

    static BitVec from_string(std::string_view bits) {
        BitVec out(bits.size());
        for (std::size_t i = 0; i < bits.size(); i++) {
            if (bits[i] == '1') {
                out.set(i);
            } else if (bits[i] != '0') {
                throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(bits));
            }
        }
        return out;
    }

    /// Low `num_bits` bits of `value`, with bit (num_bits - 1 - i) of `value` at position i.
    static BitVec from_uint(std::uint64_t value, std::size_t num_bits) {
        BitVec out(num_bits);
        for (std::size_t i = 0; i < num_bits; i++) {
            if ((value >> (num_bits - 1 - i)) & 1) {
                out.set(i);
            }
        }
        return out;
    }

    static std::size_t num_words(std::size_t num_bits) {
        return (num_bits + kWordBits - 1) / kWordBits;
    }

    std::size_t size() const {
        return size_;
    }

    bool get(std::size_t i) const {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
    }
    bool operator[](std::size_t i) const {
        return get(i);
    }
    void set(std::size_t i, bool value = true) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) {
        words_[i / kWordBits] ^= word_t{1} << (i % kWordBits);
    }

    std::span<const word_t> words() const {
        return words_;
    }
    std::span<word_t> words() {
        return words_;
    }

    BitVec &operator^=(const BitVec &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVec &operator&=(const BitVec &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); w++) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    BitVec &operator|=(const BitVec &other) {
        check_same_size(other);
        for (std::size_t w = 0; w < words_.size(); w++) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec &b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        return a &= b;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        return a |= b;
    }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (word_t w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }

    /// Parity of popcount(*this AND other), without materializing the AND.
    bool and_parity(const BitVec &other) const {
        check_same_size(other);
        word_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); w++) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    std::size_t and_popcount(const BitVec &other) const {
        check_same_size(other);
        std::size_t total = 0;
        for (std::size_t w = 0; w < words_.size(); w++) {
            total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
        }
        return total;
    }

    bool any() const {
        for (word_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const {
        return !any();
    }

    std::optional<std::size_t> first_set() const {
        for (std::size_t w = 0; w < words_.size(); w++) {
            if (words_[w]) {
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
        }
        return std::nullopt;
    }

    /// Positions of set bits, ascending.
    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); w++) {
            word_t word = words_[w];
            while (word) {
                out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    std::string str() const {
        std::string out(size_, '0');
        for (std::size_t i = 0; i < size_; i++) {
            if (get(i)) {
                out[i] = '1';
            }
        }
        return out;
    }

    bool operator==(const BitVec &other) const = default;

    /// Lexicographic order of `str()`: position 0 is most significant.
    std::strong_ordering operator<=>(const BitVec &other) const {
        if (size_ != other.size_) {
            return size_ <=> other.size_;
        }
        for (std::size_t w = 0; w < words_.size(); w++) {
            word_t diff = words_[w] ^ other.words_[w];
            if (diff) {
                word_t lowest = diff & (~diff + 1);
                return (words_[w] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

    std::size_t hash() const {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
        for (word_t w : words_) {
            h ^= std::hash<word_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    void check_same_size(const BitVec &other) const {
        if (size_ != other.size_) {
            throw std::invalid_argument("bit vector length mismatch");
        }
    }

    std::size_t size_ = 0;
    std::vector<word_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec &v) const {
        return v.hash();
    }
};

}  // namespace stabforge
