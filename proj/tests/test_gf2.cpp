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

#include "gtest/gtest.h"
#include "naive.hpp"

using namespace isc;

TEST(bit_vector, basics) {
    auto v = BitVector::from_string("0110100");
    ASSERT_EQ(v.size(), 7);
    ASSERT_EQ(v.weight(), 3);
    ASSERT_EQ(v.support(), (std::vector<std::size_t>{1, 2, 4}));
    ASSERT_EQ(v.str(), "0110100");
    v.flip(1);
    ASSERT_EQ(v.str(), "0010100");
    v ^= BitVector::from_string("0010000");
    ASSERT_EQ(v.str(), "0000100");
    ASSERT_THROW(v ^= BitVector(3), DimensionError);
    ASSERT_THROW(BitVector::from_string("012"), std::invalid_argument);
}

TEST(bit_vector, crosses_word_boundary) {
    BitVector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    ASSERT_EQ(v.weight(), 3);
    ASSERT_EQ(v.support(), (std::vector<std::size_t>{0, 64, 129}));
}

TEST(bit_matrix, text_round_trip) {
    auto m = BitMatrix::from_strings({"101", "011"});
    ASSERT_EQ(m.to_text(), "2 3\n101\n011\n");
    ASSERT_EQ(BitMatrix::from_text(m.to_text()), m);
    ASSERT_THROW(BitMatrix::from_text("2 3\n101\n"), std::invalid_argument);
    ASSERT_THROW(BitMatrix::from_rows({{1, 0}, {1}}), DimensionError);
}

TEST(bit_matrix, mat_mul_matches_naive) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; trial++) {
        std::size_t a = 1 + rng() % 9;
        std::size_t b = 1 + rng() % 130;
        std::size_t c = 1 + rng() % 70;
        auto x = naive::random_matrix(rng, a, b);
        auto y = naive::random_matrix(rng, b, c);
        ASSERT_EQ(naive::from(mat_mul(x, y)), naive::mul(naive::from(x), naive::from(y), b, c));
    }
}

TEST(bit_matrix, transpose_and_kron) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; trial++) {
        auto a = naive::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
        auto b = naive::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
        auto k = kron(a, b);
        ASSERT_EQ(k.rows(), a.rows() * b.rows());
        ASSERT_EQ(k.cols(), a.cols() * b.cols());
        for (std::size_t i = 0; i < k.rows(); i++) {
            for (std::size_t j = 0; j < k.cols(); j++) {
                bool want = a.get(i / b.rows(), j / b.cols()) && b.get(i % b.rows(), j % b.cols());
                ASSERT_EQ(k.get(i, j), want);
            }
        }
        ASSERT_EQ(a.transpose().transpose(), a);
        ASSERT_EQ(kron(a, b).transpose(), kron(a.transpose(), b.transpose()));
    }
}

TEST(bit_matrix, rank_matches_span_count) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; trial++) {
        auto a = naive::random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12, 0.3);
        ASSERT_EQ(rank(a), naive::span_rank(naive::from(a)));
    }
}

TEST(bit_matrix, kernel_basis) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t cols = 1 + rng() % 14;
        auto a = naive::random_matrix(rng, 1 + rng() % 8, cols);
        auto k = kernel_basis(a);
        ASSERT_EQ(k.cols(), cols);
        ASSERT_EQ(k.rows(), cols - rank(a));
        ASSERT_EQ(rank(k), k.rows());
        ASSERT_TRUE(mat_mul(a, k.transpose()).is_zero());
    }
}

TEST(bit_matrix, invert) {
    std::mt19937_64 rng(5);
    int inverted = 0;
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 9;
        auto a = naive::random_matrix(rng, n, n);
        if (rank(a) < n) {
            ASSERT_THROW(invert(a), SingularMatrixError);
            continue;
        }
        inverted++;
        ASSERT_EQ(mat_mul(a, invert(a)), BitMatrix::identity(n));
    }
    ASSERT_GT(inverted, 20);
}

TEST(bit_matrix, stacking) {
    auto a = BitMatrix::from_strings({"10", "01"});
    auto b = BitMatrix::from_strings({"11"});
    ASSERT_EQ(vstack({a, b}), BitMatrix::from_strings({"10", "01", "11"}));
    ASSERT_EQ(hstack({a, a}), BitMatrix::from_strings({"1010", "0101"}));
    ASSERT_EQ(block_diag({a, b}), BitMatrix::from_strings({"1000", "0100", "0011"}));
    ASSERT_THROW(vstack({a, BitMatrix(1, 3)}), DimensionError);
    ASSERT_EQ(vstack({}).rows(), 0);
}

TEST(bit_matrix, shape_predicates) {
    ASSERT_TRUE(is_unit_upper_triangular(BitMatrix::from_strings({"11", "01"})));
    ASSERT_FALSE(is_unit_upper_triangular(BitMatrix::from_strings({"11", "11"})));
    ASSERT_TRUE(is_unit_lower_triangular(BitMatrix::from_strings({"10", "11"})));
    ASSERT_TRUE(is_permutation(BitMatrix::from_strings({"01", "10"})));
    ASSERT_FALSE(is_permutation(BitMatrix::from_strings({"11", "00"})));
}

TEST(row_echelon, membership_matches_span) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; trial++) {
        std::size_t cols = 1 + rng() % 10;
        auto a = naive::random_matrix(rng, 1 + rng() % 6, cols, 0.3);
        RowEchelon e(a);
        auto span = naive::span_masks(a);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << cols); v++) {
            BitVector bv(cols);
            for (std::size_t c = 0; c < cols; c++) {
                bv.set(c, (v >> c) & 1);
            }
            bool want = std::find(span.begin(), span.end(), v) != span.end();
            ASSERT_EQ(e.contains(bv), want);
            ASSERT_EQ(row_space_contains(a, bv), want);
        }
    }
}

TEST(row_echelon, same_row_space) {
    auto a = BitMatrix::from_strings({"110", "011"});
    auto b = BitMatrix::from_strings({"101", "110", "011"});
    ASSERT_TRUE(same_row_space(a, b));
    ASSERT_FALSE(same_row_space(a, BitMatrix::from_strings({"100"})));
}
