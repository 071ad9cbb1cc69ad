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

#include "isc/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace isc {

namespace {

void check_bit_char(char c) {
    if (c != '0' && c != '1') {
        throw std::invalid_argument(std::string("expected '0' or '1', got '") + c + "'");
    }
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        check_bit_char(bits[i]);
        v.set(i, bits[i] == '1');
    }
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        v.set(i++, b & 1);
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (Word w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); k++) {
        Word w = words_[k];
        while (w) {
            out.push_back(k * WORD_BITS + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.len_ != len_) {
        throw DimensionError("BitVector xor: length mismatch");
    }
    for (std::size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

std::string BitVector::str() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw DimensionError("from_rows: ragged rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            int v = rows[r][c];
            if (v != 0 && v != 1) {
                throw std::invalid_argument("from_rows: entries must be 0 or 1");
            }
            m.set(r, c, v == 1);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> copy;
    for (auto &r : rows) {
        copy.emplace_back(r);
    }
    return from_rows(copy);
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw DimensionError("from_strings: ragged rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            check_bit_char(rows[r][c]);
            m.set(r, c, rows[r][c] == '1');
        }
    }
    return m;
}

BitMatrix BitMatrix::from_row_vectors(const std::vector<BitVector> &rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); r++) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BitVector BitMatrix::row_vector(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionError("set_row: length mismatch");
    }
    std::copy(v.words().begin(), v.words().end(), data_.begin() + r * stride_);
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    Word *d = data_.data() + dst * stride_;
    const Word *s = data_.data() + src * stride_;
    for (std::size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

void BitMatrix::xor_col_into(std::size_t src, std::size_t dst) {
    for (std::size_t r = 0; r < rows_; r++) {
        if (get(r, src)) {
            flip(r, dst);
        }
    }
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t total = 0;
    for (Word w : row(r)) {
        total += std::popcount(w);
    }
    return total;
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    auto words = row(r);
    return std::all_of(words.begin(), words.end(), [](Word w) { return w == 0; });
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::size_t BitMatrix::popcount() const {
    std::size_t total = 0;
    for (Word w : data_) {
        total += std::popcount(w);
    }
    return total;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < stride_; k++) {
            Word w = data_[r * stride_ + k];
            while (w) {
                t.set(k * WORD_BITS + std::countr_zero(w), r, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_) {
        throw DimensionError("submatrix: range out of bounds");
    }
    BitMatrix out(r1 - r0, c1 - c0);
    for (std::size_t r = r0; r < r1; r++) {
        for (std::size_t c = c0; c < c1; c++) {
            if (get(r, c)) {
                out.set(r - r0, c - c0, true);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
    BitMatrix out(rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i] >= rows_) {
            throw DimensionError("select_rows: row index out of range");
        }
        std::copy_n(data_.begin() + rows[i] * stride_, stride_, out.data_.begin() + i * stride_);
    }
    return out;
}

BitMatrix BitMatrix::nonzero_rows() const {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < rows_; r++) {
        if (!row_is_zero(r)) {
            keep.push_back(r);
        }
    }
    return select_rows(keep);
}

std::vector<std::string> BitMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out.push_back(row_vector(r).str());
    }
    return out;
}

std::string BitMatrix::to_text() const {
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (auto &line : row_strings()) {
        out += line;
        out += '\n';
    }
    return out;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> rows >> cols)) {
        throw std::invalid_argument("matrix text: missing 'rows cols' header");
    }
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        std::string line;
        if (cols == 0) {
            continue;
        }
        if (!(in >> line) || line.size() != cols) {
            throw std::invalid_argument("matrix text: row " + std::to_string(r) + " malformed");
        }
        for (std::size_t c = 0; c < cols; c++) {
            check_bit_char(line[c]);
            m.set(r, c, line[c] == '1');
        }
    }
    return m;
}

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError(
            "mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
            std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        auto dst = out.row(i);
        auto arow = a.row(i);
        for (std::size_t k = 0; k < arow.size(); k++) {
            Word w = arow[k];
            while (w) {
                auto src = b.row(k * WORD_BITS + std::countr_zero(w));
                for (std::size_t j = 0; j < dst.size(); j++) {
                    dst[j] ^= src[j];
                }
                w &= w - 1;
            }
        }
    }
    return out;
}

BitVector mat_vec(const BitMatrix &a, const BitVector &v) {
    if (a.cols() != v.size()) {
        throw DimensionError("mat_vec: length mismatch");
    }
    BitVector out(a.rows());
    auto vw = v.words();
    for (std::size_t r = 0; r < a.rows(); r++) {
        auto rw = a.row(r);
        Word acc = 0;
        for (std::size_t k = 0; k < rw.size(); k++) {
            acc ^= rw[k] & vw[k];
        }
        out.set(r, std::popcount(acc) & 1);
    }
    return out;
}

BitMatrix kron(const BitMatrix &a, const BitMatrix &b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            if (!a.get(i, j)) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); k++) {
                std::size_t r = i * b.rows() + k;
                for (std::size_t l = 0; l < b.cols(); l++) {
                    if (b.get(k, l)) {
                        out.set(r, j * b.cols() + l, true);
                    }
                }
            }
        }
    }
    return out;
}

BitMatrix vstack(const std::vector<BitMatrix> &blocks) {
    if (blocks.empty()) {
        return {};
    }
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (auto &b : blocks) {
        if (b.cols() != cols) {
            throw DimensionError("vstack: column mismatch");
        }
        rows += b.rows();
    }
    BitMatrix out(rows, cols);
    std::size_t r = 0;
    for (auto &b : blocks) {
        for (std::size_t i = 0; i < b.rows(); i++, r++) {
            auto src = b.row(i);
            std::copy(src.begin(), src.end(), out.row(r).begin());
        }
    }
    return out;
}

BitMatrix hstack(const std::vector<BitMatrix> &blocks) {
    if (blocks.empty()) {
        return {};
    }
    std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (auto &b : blocks) {
        if (b.rows() != rows) {
            throw DimensionError("hstack: row mismatch");
        }
        cols += b.cols();
    }
    BitMatrix out(rows, cols);
    std::size_t c0 = 0;
    for (auto &b : blocks) {
        for (std::size_t r = 0; r < rows; r++) {
            for (std::size_t c = 0; c < b.cols(); c++) {
                if (b.get(r, c)) {
                    out.set(r, c0 + c, true);
                }
            }
        }
        c0 += b.cols();
    }
    return out;
}

BitMatrix block_diag(const std::vector<BitMatrix> &blocks) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (auto &b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    BitMatrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (auto &b : blocks) {
        for (std::size_t r = 0; r < b.rows(); r++) {
            for (std::size_t c = 0; c < b.cols(); c++) {
                if (b.get(r, c)) {
                    out.set(r0 + r, c0 + c, true);
                }
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

RowEchelon::RowEchelon(const BitMatrix &a) {
    BitMatrix work = a;
    std::size_t next = 0;
    for (std::size_t c = 0; c < work.cols() && next < work.rows(); c++) {
        std::size_t pivot = next;
        while (pivot < work.rows() && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot == work.rows()) {
            continue;
        }
        work.swap_rows(pivot, next);
        for (std::size_t r = 0; r < work.rows(); r++) {
            if (r != next && work.get(r, c)) {
                work.xor_row_into(next, r);
            }
        }
        pivots_.push_back(c);
        next++;
    }
    basis_ = work.submatrix(0, next, 0, work.cols());
}

void RowEchelon::reduce(std::span<Word> v) const {
    for (std::size_t i = 0; i < pivots_.size(); i++) {
        std::size_t c = pivots_[i];
        if ((v[c / WORD_BITS] >> (c % WORD_BITS)) & 1) {
            auto src = basis_.row(i);
            for (std::size_t k = 0; k < v.size(); k++) {
                v[k] ^= src[k];
            }
        }
    }
}

bool RowEchelon::contains(const BitVector &v) const {
    if (v.size() != basis_.cols()) {
        throw DimensionError("row space membership: length mismatch");
    }
    BitVector work = v;
    reduce(work.words());
    return !work.any();
}

std::size_t rank(const BitMatrix &a) {
    return RowEchelon(a).rank();
}

BitMatrix kernel_basis(const BitMatrix &a) {
    RowEchelon ech(a);
    const auto &pivots = ech.pivots();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    BitMatrix out(a.cols() - pivots.size(), a.cols());
    std::size_t row = 0;
    for (std::size_t f = 0; f < a.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        out.set(row, f, true);
        for (std::size_t i = 0; i < pivots.size(); i++) {
            if (ech.basis().get(i, f)) {
                out.set(row, pivots[i], true);
            }
        }
        row++;
    }
    return out;
}

bool row_space_contains(const BitMatrix &a, const BitVector &v) {
    if (v.size() != a.cols()) {
        throw DimensionError("row_space_contains: length mismatch");
    }
    return RowEchelon(a).contains(v);
}

bool same_row_space(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(vstack({a, b}));
}

BitMatrix invert(const BitMatrix &a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("invert: matrix is not square");
    }
    std::size_t n = a.rows();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t c = 0; c < n; c++) {
        std::size_t pivot = c;
        while (pivot < n && !work.get(pivot, c)) {
            pivot++;
        }
        if (pivot == n) {
            throw SingularMatrixError("invert: matrix is singular");
        }
        work.swap_rows(pivot, c);
        inv.swap_rows(pivot, c);
        for (std::size_t r = 0; r < n; r++) {
            if (r != c && work.get(r, c)) {
                work.xor_row_into(c, r);
                inv.xor_row_into(c, r);
            }
        }
    }
    return inv;
}

bool is_unit_lower_triangular(const BitMatrix &a) {
    if (a.rows() != a.cols()) {
        return false;
    }
    for (std::size_t r = 0; r < a.rows(); r++) {
        if (!a.get(r, r)) {
            return false;
        }
        for (std::size_t c = r + 1; c < a.cols(); c++) {
            if (a.get(r, c)) {
                return false;
            }
        }
    }
    return true;
}

bool is_unit_upper_triangular(const BitMatrix &a) {
    return is_unit_lower_triangular(a.transpose());
}

bool is_permutation(const BitMatrix &a) {
    if (a.rows() != a.cols()) {
        return false;
    }
    std::vector<int> col_hits(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); r++) {
        if (a.row_weight(r) != 1) {
            return false;
        }
        for (std::size_t c = 0; c < a.cols(); c++) {
            if (a.get(r, c) && ++col_hits[c] > 1) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace isc
