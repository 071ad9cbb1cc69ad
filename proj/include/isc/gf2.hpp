// Copyright 2026 The isc Authors
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

#ifndef ISC_GF2_HPP
#define ISC_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isc {

using Word = std::uint64_t;
inline constexpr std::size_t WORD_BITS = 64;

inline constexpr std::size_t words_for_bits(std::size_t bits) {
    return (bits + WORD_BITS - 1) / WORD_BITS;
}

/// Raised when operand shapes do not conform.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised by `invert` on a singular input.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A packed vector over GF(2). Bit i lives in word i/64 at position i%64.
/// Bits past `size()` are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(words_for_bits(len), 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);
    static BitVector from_bits(std::initializer_list<int> bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i / WORD_BITS] >> (i % WORD_BITS)) & 1; }
    void set(std::size_t i, bool value) {
        Word mask = Word{1} << (i % WORD_BITS);
        if (value) {
            words_[i / WORD_BITS] |= mask;
        } else {
            words_[i / WORD_BITS] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / WORD_BITS] ^= Word{1} << (i % WORD_BITS); }

    std::size_t weight() const;
    bool any() const;
    std::vector<std::size_t> support() const;

    BitVector &operator^=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    std::string str() const;

   private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major matrix over GF(2). Each row occupies `ceil(cols/64)`
/// words; padding bits are kept zero so rows compare and hash word-wise.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    /// Rows given as lists of 0/1 entries; all rows must have equal length.
    static BitMatrix from_rows(const std::vector<std::vector<int>> &rows);
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    /// Rows given as '0'/'1' strings.
    static BitMatrix from_strings(const std::vector<std::string> &rows);
    static BitMatrix from_row_vectors(const std::vector<BitVector> &rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / WORD_BITS] >> (c % WORD_BITS)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        Word mask = Word{1} << (c % WORD_BITS);
        Word &w = data_[r * stride_ + c / WORD_BITS];
        if (value) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / WORD_BITS] ^= Word{1} << (c % WORD_BITS); }

    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    BitVector row_vector(std::size_t r) const;
    void set_row(std::size_t r, const BitVector &v);

    /// row[dst] ^= row[src]
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);
    /// col[dst] ^= col[src]
    void xor_col_into(std::size_t src, std::size_t dst);

    std::size_t row_weight(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;
    bool is_zero() const;
    std::size_t popcount() const;

    BitMatrix transpose() const;
    BitMatrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    BitMatrix select_rows(std::span<const std::size_t> rows) const;
    BitMatrix nonzero_rows() const;

    /// `rows cols` header followed by one '0'/'1' line per row.
    std::string to_text() const;
    static BitMatrix from_text(std::string_view text);
    std::vector<std::string> row_strings() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);
/// a · vᵀ as a vector of length a.rows().
BitVector mat_vec(const BitMatrix &a, const BitVector &v);
/// Kronecker product, lexicographic row/column order (first factor most significant).
BitMatrix kron(const BitMatrix &a, const BitMatrix &b);
BitMatrix vstack(const std::vector<BitMatrix> &blocks);
BitMatrix hstack(const std::vector<BitMatrix> &blocks);
BitMatrix block_diag(const std::vector<BitMatrix> &blocks);

std::size_t rank(const BitMatrix &a);
/// Rows form a basis of {v : a·vᵀ = 0}, one per free column of the reduced echelon form.
BitMatrix kernel_basis(const BitMatrix &a);
bool row_space_contains(const BitMatrix &a, const BitVector &v);
bool same_row_space(const BitMatrix &a, const BitMatrix &b);
BitMatrix invert(const BitMatrix &a);

bool is_unit_lower_triangular(const BitMatrix &a);
bool is_unit_upper_triangular(const BitMatrix &a);
bool is_permutation(const BitMatrix &a);

/// Reduced row echelon form with recorded pivots; supports repeated
/// membership queries against a fixed row space.
class RowEchelon {
   public:
    explicit RowEchelon(const BitMatrix &a);

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<std::size_t> &pivots() const { return pivots_; }
    /// The nonzero rows of the reduced form, `rank()` of them.
    const BitMatrix &basis() const { return basis_; }

    /// Reduces `v` in place against the basis; the result is zero iff v was in the row space.
    void reduce(std::span<Word> v) const;
    bool contains(const BitVector &v) const;

   private:
    BitMatrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace isc

#endif
